// Copyright 2026 The ffdioph Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef FFDIOPH_CONTFRAC_HPP_
#define FFDIOPH_CONTFRAC_HPP_

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "ffdioph/laurent.hpp"
#include "ffdioph/poly.hpp"

namespace ffdioph {

// Continued fractions over the polynomial ring: f = a_0 + 1/(a_1 + 1/(...))
// with a_0 the polynomial part and deg a_n >= 1 for n >= 1.  Convergents
// follow P_n = a_n P_{n-1} + P_{n-2}, Q_n = a_n Q_{n-1} + Q_{n-2} with
// P_-1 = 1, Q_-1 = 0, P_0 = a_0, Q_0 = 1, and satisfy the exact distance law
// nu(f - P_n/Q_n) = deg Q_n + deg Q_{n+1}.

enum class CfStatus {
  kTerminated,          // the source is rational and fully expanded
  kBudgetReached,       // digit/degree budget hit, or the callback stopped us
  kPrecisionExhausted,  // the source cannot certify the next digit
};

std::string CfStatusName(CfStatus s);

// One certified digit a_n (n >= 1) as it streams out of the expansion.
// A digit is only emitted once the realized precision m satisfies
// m >= deg Q_{n-1} + deg Q_n + 2, which pins it against any extension of the
// source, so emitted digits never change when precision grows.
struct CfDigitEvent {
  int index = 0;       // n, starting at 1
  int deg_a = 0;       // deg a_n
  int deg_q_prev = 0;  // deg Q_{n-1}
  int deg_q = 0;       // deg Q_n
  // The digit itself; present iff CfStreamOptions::materialize_digits.
  const Poly* a = nullptr;
  // Q_n reduced mod CfStreamOptions::track_mod; present iff tracking.
  const Poly* q_mod = nullptr;
};

// Returning false stops the stream early (status kBudgetReached).
using CfDigitCallback = std::function<bool(const CfDigitEvent&)>;

struct CfStreamOptions {
  int max_digits = INT32_MAX / 2;
  // Stop once deg Q_n >= max_qdeg (the crossing digit is still delivered).
  int max_qdeg = INT32_MAX / 2;
  bool materialize_digits = false;
  std::optional<Poly> track_mod;
  // First precision to request from the source; the driver grows it
  // geometrically whenever certification stalls.
  int initial_prec = 64;
};

struct CfStreamResult {
  CfStatus status = CfStatus::kBudgetReached;
  Poly a0;
  int digits = 0;         // number of digits emitted
  int deg_q = 0;          // deg Q_n after the last digit
  int realized_prec = 0;  // precision last pulled from the source
};

// Streams certified digits of the source without materializing convergents,
// so arbitrarily long expansions run in memory proportional to the realized
// coefficient window.  Works for any field; the binary case runs on a
// bit-packed Euclid kernel.
CfStreamResult CfStreamDigits(SeriesSource* src, const CfStreamOptions& opts,
                              const CfDigitCallback& cb);

// A fully materialized expansion with its convergents.
struct CfExpansion {
  Poly a0;
  std::vector<Poly> digits;  // a_1 .. a_n
  std::vector<Poly> conv_p;  // P_0 .. P_n
  std::vector<Poly> conv_q;  // Q_0 .. Q_n
  CfStatus status = CfStatus::kBudgetReached;
  int realized_prec = 0;

  std::string Format() const;  // "[a0; a1, a2, ...]"
};

CfExpansion CfExpand(SeriesSource* src, int max_digits = 64,
                     int max_qdeg = INT32_MAX / 2);

// Exact expansion of num/den by the Euclidean algorithm, kept deliberately
// independent of the streaming engine so the two can cross-check each other.
struct CfRational {
  Poly a0;
  std::vector<Poly> digits;
  std::string Format() const;
};

CfRational CfExpandRational(const Poly& num, const Poly& den);

// Replays the convergent recurrence over given digits.  Digits of degree < 1
// are rejected (kMalformedDigits).
struct CfConvergents {
  std::vector<Poly> p;  // P_0 .. P_n
  std::vector<Poly> q;  // Q_0 .. Q_n
};

CfConvergents CfEval(const Poly& a0, const std::vector<Poly>& digits);

// Decides whether num/den (which must be reduced; kNotReduced otherwise) is a
// convergent of the source, by expanding until deg Q_n passes deg den and
// comparing unit-normalized pairs.  index is the matching n, or -1.
struct ConvergentCheck {
  bool is_convergent = false;
  int index = -1;
};

ConvergentCheck IsConvergent(SeriesSource* src, const Poly& num,
                             const Poly& den);

// nu(f - num/den) for the series behind src, discovering precision as needed
// up to prec_limit.  Returns kPosInfVal when the source is exactly rational
// and equal to num/den; throws kPrecisionExhausted when the difference stays
// indistinguishable from zero at the limit.
int NuOfDifference(SeriesSource* src, const Poly& num, const Poly& den,
                   int prec_limit);

}  // namespace ffdioph

#endif  // FFDIOPH_CONTFRAC_HPP_
