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

#ifndef FFDIOPH_LAURENT_HPP_
#define FFDIOPH_LAURENT_HPP_

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ffdioph/poly.hpp"
#include "ffdioph/rng.hpp"

namespace ffdioph {

// Sentinel "valuation" of a series whose certified coefficients are all zero.
// Chosen so that adding two sentinels cannot overflow an int.
inline constexpr int kPosInfVal = INT32_MAX / 4;

inline int ValAdd(int a, int b) {
  if (a >= kPosInfVal || b >= kPosInfVal) return kPosInfVal;
  return a + b;
}

// A formal Laurent series in X^-1 known to finite precision.
//
// The series is f = sum_{i >= nu} c_i X^-i with c_nu != 0, where nu may be
// negative (polynomial part).  An instance certifies the coefficients c_i for
// every index i < prec(); indices below nu() are certified zero.  Asking for a
// coefficient at index >= prec() is an error, never a silent zero: precision
// is data, and every arithmetic operation below propagates the largest
// precision that its inputs actually justify.
//
// The absolute value is |f| = q^-nu, so elements of the closed unit ball are
// exactly the series with nu >= 0.
class LaurentSeries {
 public:
  // The zero-looking series: certifies c_i = 0 for all i < prec.
  static LaurentSeries Zero(FieldPtr k, int prec);

  // Builds a series from the coefficient window (c_lead, c_lead+1, ...); the
  // resulting precision is lead + coeffs.size().  Indices below `lead` are
  // certified zero.  Coefficients must be valid field encodings.
  static LaurentSeries FromCoeffWindow(FieldPtr k, int lead,
                                       std::vector<uint32_t> coeffs);

  // The series of a polynomial (X^j contributes at index -j), certified
  // through index prec - 1.
  static LaurentSeries FromPoly(const Poly& p, int prec);

  const FieldPtr& field() const { return k_; }

  // Valuation: least index with a nonzero certified coefficient, or
  // kPosInfVal if all certified coefficients vanish.
  int nu() const { return nu_; }
  bool IsZeroToPrec() const { return nu_ >= kPosInfVal; }

  // Coefficients are certified exactly for indices < prec().
  int prec() const { return prec_; }

  // c_i for i < prec(); throws kPrecisionExhausted otherwise.
  uint32_t coeff(int i) const;

  // The same series certified only through new_prec - 1 (new_prec <= prec()).
  LaurentSeries Truncated(int new_prec) const;

  // The polynomial part sum_{i <= 0} c_i X^-i.  Requires prec() >= 1 so that
  // the constant term is certified.
  Poly PolynomialPart() const;

  LaurentSeries operator+(const LaurentSeries& o) const;
  LaurentSeries operator-() const;
  LaurentSeries operator-(const LaurentSeries& o) const;

  // Product, certified through min(prec_f + nu_g, prec_g + nu_f) - 1.
  LaurentSeries operator*(const LaurentSeries& o) const;

  // Reciprocal, certified through prec() - 2 nu() - 1.  Throws kZeroInverse
  // when every certified coefficient vanishes (the series is
  // indistinguishable from zero).
  LaurentSeries Inverse() const;
  LaurentSeries operator/(const LaurentSeries& o) const;

  bool operator==(const LaurentSeries& o) const;
  bool operator!=(const LaurentSeries& o) const { return !(*this == o); }

  // Human-readable rendering such as "X + 1 + X^-2 + O(X^-5)".
  std::string Format(int max_terms = 12) const;

 private:
  LaurentSeries(FieldPtr k, int nu, int prec, std::vector<uint32_t> coeffs)
      : k_(std::move(k)), nu_(nu), prec_(prec), c_(std::move(coeffs)) {}

  // First index that could be nonzero (prec_ for zero-to-precision series).
  int EffNu() const { return IsZeroToPrec() ? prec_ : nu_; }

  static LaurentSeries Normalize(FieldPtr k, int lead,
                                 std::vector<uint32_t> coeffs, int prec);

  FieldPtr k_;
  int nu_;    // kPosInfVal when zero-to-precision
  int prec_;  // coefficients certified for indices < prec_
  std::vector<uint32_t> c_;  // c_[j] = coefficient at index nu_ + j
};

// A producer of series coefficients that can be re-realized at higher
// precision on demand.  Continued-fraction expansion pulls exactly as much
// precision as digit certification requires, so sources are the natural
// input type for it.
class SeriesSource {
 public:
  virtual ~SeriesSource() = default;

  virtual FieldPtr field() const = 0;

  // The series certified through min(prec, max_prec()) - 1.  Realizations at
  // increasing precision agree on their common indices.
  virtual LaurentSeries Realize(int prec) = 0;

  // Largest reachable precision; kPosInfVal when unbounded.
  virtual int max_prec() const = 0;

  // The exact rational P/Q behind this source, if there is one.  Expansion
  // uses it to certify termination instead of chasing precision forever.
  virtual std::optional<std::pair<Poly, Poly>> ExactRational() const {
    return std::nullopt;
  }
};

// The series of P/Q, extendable to any precision.  Q must be nonzero.
class RationalSource : public SeriesSource {
 public:
  RationalSource(Poly num, Poly den);

  FieldPtr field() const override { return num_.field(); }
  LaurentSeries Realize(int prec) override;
  int max_prec() const override { return kPosInfVal; }
  std::optional<std::pair<Poly, Poly>> ExactRational() const override {
    return std::make_pair(num_, den_);
  }

 private:
  Poly num_;
  Poly den_;
};

// A uniformly random element of the unit ball: coefficients c_0, c_1, ...
// drawn i.i.d. uniform on the field, lazily and cached, so realizations at
// growing precision extend one another.
class StreamSource : public SeriesSource {
 public:
  StreamSource(FieldPtr k, Rng rng) : k_(std::move(k)), rng_(rng) {}

  FieldPtr field() const override { return k_; }
  LaurentSeries Realize(int prec) override;
  int max_prec() const override { return kPosInfVal; }

 private:
  FieldPtr k_;
  Rng rng_;
  std::vector<uint32_t> cached_;  // c_0, c_1, ...
};

// A fixed series window; precision is capped at window.prec().
class WindowSource : public SeriesSource {
 public:
  explicit WindowSource(LaurentSeries window) : w_(std::move(window)) {}

  FieldPtr field() const override { return w_.field(); }
  LaurentSeries Realize(int prec) override;
  int max_prec() const override { return w_.prec(); }

 private:
  LaurentSeries w_;
};

}  // namespace ffdioph

#endif  // FFDIOPH_LAURENT_HPP_
