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
//
// The cusp orbit of the congruence family: rational points P/Q in the unit
// ball with gcd(P, Q) = 1 and Q0 | Q, in canonical form (Q monic; deg P <
// deg Q at positive depth; the constants at depth 0 when Q0 is a unit).
// Membership, enumeration, window counts, matrix-ball growth counts, and the
// certified search for well-approximated targets.

#ifndef FFDIOPH_ORBIT_HPP_
#define FFDIOPH_ORBIT_HPP_

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "ffdioph/contfrac.hpp"
#include "ffdioph/field.hpp"
#include "ffdioph/laurent.hpp"
#include "ffdioph/poly.hpp"
#include "ffdioph/qexact.hpp"
#include "ffdioph/testfn.hpp"

namespace ffdioph {

inline constexpr uint64_t kDefaultOrbitBudget = 1ull << 22;

// Unit-normalizes the congruence modulus (kDivisionByZeroPoly if zero).
// Degree-0 moduli all mean the unconstrained orbit.
Poly NormalizeModulus(const Poly& q0);

// Whether P/Q is an orbit point: Q != 0, gcd(P, Q) constant, Q0 | Q (all up
// to units).
bool OrbitContains(const Poly& num, const Poly& den, const Poly& q0);

// Canonical orbit points of depth exactly d, ordered by (den, num)
// coefficient lists.  d = 0 lists the constants (c, 1) when Q0 is a unit,
// nothing otherwise.  Fails with kBudgetExceeded when the candidate space
// q^(2d - deg Q0) exceeds the budget.
std::vector<std::pair<Poly, Poly>> OrbitEnumerate(
    const FieldPtr& k, const Poly& q0, int d,
    uint64_t budget = kDefaultOrbitBudget);

// Number of canonical orbit points of depth exactly d.  Closed form
// q^(2d) - q^(2d-1) for the unconstrained orbit (q at d = 0); enumeration
// otherwise.
BigInt OrbitCountAtDepth(const FieldPtr& k, const Poly& q0, int d,
                         uint64_t budget = kDefaultOrbitBudget);

// Number of orbit points with n <= D(P/Q) = 2 deg Q < n + width.
BigInt OrbitCountWindow(const FieldPtr& k, const Poly& q0, int n,
                        int width = 2, uint64_t budget = kDefaultOrbitBudget);

// Number of determinant-1 matrices over F_q[X] with translation distance
// <= n (n even).  Counted by solving a d = (1 + b c) / a over the bounded-
// degree triples (a, b, c) instead of filtering all q^(4(n/2+1)) matrices;
// the budget caps the triple space.
BigInt GroupBallCount(const FieldPtr& k, int n,
                      uint64_t budget = kDefaultOrbitBudget);

// Number of upper-triangular determinant-1 matrices with translation
// distance <= n (n even): exactly (q - 1) q^(n/2 + 1).
BigInt ParabolicBallCount(const FieldPtr& k, int n);

// One certified hit of the target inequality: an orbit point P/Q with
// nu(f - P/Q) >= ThresholdRadius(deg Q).  nu == kPosInfVal records exact
// equality (rational targets only).
struct DioSolution {
  Poly num;
  Poly den;
  int nu;

  std::string Format() const;
};

// All orbit solutions with deg Q <= d_max, found through the convergent
// filter.  Requires the strict regime (speed < 1 at every depth up to d_max,
// else kPhiOutOfRegime): there the qualifying points are convergents, so the
// continued fraction of f finds every one of them.  The target must lie in
// the unit ball (kNotInUnitBall).
std::vector<DioSolution> Solutions(SeriesSource& f, const TestFunction& phi,
                                   const Poly& q0, int d_max);

// The same list by exhaustive scan over canonical orbit points — the
// independent oracle, also usable outside the strict regime.  prec_limit
// bounds the witness search for each candidate's valuation.
std::vector<DioSolution> SolutionsBruteforce(
    SeriesSource& f, const TestFunction& phi, const Poly& q0, int d_max,
    uint64_t budget = kDefaultOrbitBudget, int prec_limit = 4096);

}  // namespace ffdioph

#endif  // FFDIOPH_ORBIT_HPP_
