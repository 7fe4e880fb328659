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

#ifndef FFDIOPH_POLY_HPP_
#define FFDIOPH_POLY_HPP_

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ffdioph/field.hpp"

namespace ffdioph {

// deg(0): a sentinel rather than an optional, so degree arithmetic stays
// total.  The sentinel absorbs addition: DegAdd(kNegInfDeg, d) == kNegInfDeg.
inline constexpr int kNegInfDeg = INT32_MIN / 4;

inline int DegAdd(int a, int b) {
  return (a == kNegInfDeg || b == kNegInfDeg) ? kNegInfDeg : a + b;
}

// Element of F_q[X].  Coefficients ascending, no trailing zeros (invariant).
class Poly {
 public:
  static Poly Zero(FieldPtr k) { return Poly(std::move(k), {}); }
  static Poly Constant(FieldPtr k, uint32_t c);
  static Poly X(FieldPtr k) { return FromCoeffs(std::move(k), {0, 1}); }
  // Trims trailing zeros; rejects coefficients outside [0, q).
  static Poly FromCoeffs(FieldPtr k, std::vector<uint32_t> coeffs);

  const FieldPtr& field() const { return k_; }
  int deg() const {
    return c_.empty() ? kNegInfDeg : static_cast<int>(c_.size()) - 1;
  }
  bool IsZero() const { return c_.empty(); }
  bool IsOne() const { return c_.size() == 1 && c_[0] == 1; }
  bool IsMonic() const { return !c_.empty() && c_.back() == 1; }
  bool IsConstant() const { return c_.size() <= 1; }
  uint32_t coeff(int i) const {
    return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[i] : 0;
  }
  uint32_t leading() const { return c_.empty() ? 0 : c_.back(); }
  const std::vector<uint32_t>& coeffs() const { return c_; }

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator-() const;
  Poly operator*(const Poly& o) const;
  Poly ScaledBy(uint32_t c) const;
  Poly TimesXPow(int k) const;  // multiply by X^k, k >= 0
  Poly MonicScaled() const;     // kDivisionByZeroPoly on zero

  bool operator==(const Poly& o) const {
    return k_->SameAs(*o.k_) && c_ == o.c_;
  }
  bool operator!=(const Poly& o) const { return !(*this == o); }

  // Text I/O.  Two grammars: human ("X^2+X+1", optional '*' and '-') and
  // ascending coefficient list ("1,1,1"); integers are field-element
  // encodings in [0, q).  Format always emits the human grammar and
  // Parse(Format(p)) == p.
  static Poly Parse(FieldPtr k, std::string_view text);
  std::string Format() const;

 private:
  Poly(FieldPtr k, std::vector<uint32_t> c) : k_(std::move(k)), c_(std::move(c)) {}

  FieldPtr k_;
  std::vector<uint32_t> c_;
};

// Quotient and remainder with deg(rem) < deg(divisor); exact division over
// the coefficient field, no rounding anywhere.
std::pair<Poly, Poly> PolyDivMod(const Poly& a, const Poly& b);

struct PolyXgcd {
  Poly g;  // monic gcd
  Poly u;  // u*a + v*b == g
  Poly v;
};
// kBothZero when both inputs are zero.
PolyXgcd PolyGcdExt(const Poly& a, const Poly& b);
Poly PolyGcd(const Poly& a, const Poly& b);

}  // namespace ffdioph

#endif  // FFDIOPH_POLY_HPP_
