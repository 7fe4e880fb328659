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

#include "ffdioph/tree_geom.hpp"

#include <algorithm>

#include "ffdioph/field.hpp"

namespace ffdioph {

int HamenstadtVal(const LaurentSeries& f, const LaurentSeries& g) {
  RequireSameField(f.field(), g.field());
  const LaurentSeries diff = f - g;
  if (diff.IsZeroToPrec())
    Fail(ErrorKind::kPrecisionExhausted,
         "series agree through all " + std::to_string(diff.prec()) +
             " known coefficients; the distance needs more precision");
  return diff.nu();
}

int HamenstadtVal(SeriesSource& f, SeriesSource& g, int prec_limit) {
  RequireSameField(f.field(), g.field());
  const auto rf = f.ExactRational();
  const auto rg = g.ExactRational();
  if (rf && rg) {
    // nu(P1/Q1 - P2/Q2) = deg(Q1 Q2) - deg(P1 Q2 - P2 Q1), infinite when the
    // cross product vanishes.
    const Poly cross = rf->first * rg->second - rg->first * rf->second;
    if (cross.IsZero())
      Fail(ErrorKind::kEqualSeries,
           "both sources are the same rational point; the distance is zero");
    return rf->second.deg() + rg->second.deg() - cross.deg();
  }
  int prec = 64;
  for (;;) {
    prec = std::min(prec, std::min({prec_limit, f.max_prec(), g.max_prec()}));
    const LaurentSeries diff = f.Realize(prec) - g.Realize(prec);
    if (!diff.IsZeroToPrec()) return diff.nu();
    if (prec >= prec_limit || prec >= f.max_prec() || prec >= g.max_prec())
      Fail(ErrorKind::kPrecisionExhausted,
           "sources agree to precision " + std::to_string(prec) +
               "; cannot witness a difference within the limit");
    prec *= 2;
  }
}

int CuspDistance(const Poly& num, const Poly& den) {
  if (den.IsZero())
    Fail(ErrorKind::kDivisionByZeroPoly, "cusp P/Q needs Q != 0");
  if (!PolyGcd(num, den).IsConstant())
    Fail(ErrorKind::kNotReduced, "cusp depth needs gcd(P, Q) = 1");
  return 2 * den.deg();
}

std::vector<Tent> TentProfile(const CfExpansion& expansion) {
  const size_t n_digits = expansion.digits.size();
  if (n_digits == 0)
    Fail(ErrorKind::kNoCertifiedDigits,
         "the height profile needs at least one digit beyond a0");
  std::vector<Tent> tents;
  tents.reserve(n_digits);
  for (size_t n = 0; n < n_digits; ++n) {
    const int dq = expansion.conv_q[n].deg();
    const int dq_next = expansion.conv_q[n + 1].deg();
    tents.push_back(Tent{static_cast<int>(n), 2 * dq, dq + dq_next,
                         2 * dq_next, expansion.digits[n].deg(),
                         expansion.conv_p[n], expansion.conv_q[n]});
  }
  return tents;
}

int HeightAt(const std::vector<Tent>& tents, int t) {
  if (t < 0) Fail(ErrorKind::kUsage, "geodesic time must be >= 0");
  if (tents.empty())
    Fail(ErrorKind::kNoCertifiedDigits, "empty height profile");
  if (t > tents.back().t_exit)
    Fail(ErrorKind::kPrecisionExhausted,
         "time " + std::to_string(t) + " lies past the last computed tent (" +
             std::to_string(tents.back().t_exit) + ")");
  for (const Tent& tent : tents) {
    if (t >= tent.t_enter && t <= tent.t_exit)
      return std::min(t - tent.t_enter, tent.t_exit - t);
  }
  return 0;  // unreachable: tents tile [0, t_exit of the last one]
}

Ball ShadowBall(const Poly& num, const Poly& den, int t) {
  if (t < 0) Fail(ErrorKind::kUsage, "shadow shrink parameter must be >= 0");
  if (!PolyGcd(num, den).IsConstant())
    Fail(ErrorKind::kNotReduced, "shadows are defined at reduced fractions");
  return Ball::FromCusp(num, den, CuspDistance(num, den) + t);
}

std::string Sl2::Format() const {
  return "[[" + a.Format() + ", " + b.Format() + "], [" + c.Format() + ", " +
         d.Format() + "]]";
}

Sl2 MakeSl2(const Poly& a, const Poly& b, const Poly& c, const Poly& d) {
  const Poly det = a * d - b * c;
  if (!det.IsOne())
    Fail(ErrorKind::kNotUnimodular,
         "matrix determinant is " + det.Format() + ", need exactly 1");
  return Sl2{a, b, c, d};
}

Sl2 Sl2Identity(const FieldPtr& k) {
  const Poly one = Poly::Constant(k, 1);
  const Poly zero = Poly::Zero(k);
  return Sl2{one, zero, zero, one};
}

Sl2 Sl2Mul(const Sl2& x, const Sl2& y) {
  return Sl2{x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d,
             x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
}

Sl2 Sl2Inverse(const Sl2& x) { return Sl2{x.d, -x.b, -x.c, x.a}; }

int TranslationDistance(const Sl2& g) {
  const Poly det = g.a * g.d - g.b * g.c;
  if (!det.IsOne())
    Fail(ErrorKind::kNotUnimodular,
         "translation distance needs determinant exactly 1");
  int max_deg = 0;  // the identity's entries are constants, distance 0
  for (const Poly* e : {&g.a, &g.b, &g.c, &g.d})
    max_deg = std::max(max_deg, e->deg() == kNegInfDeg ? 0 : e->deg());
  return 2 * max_deg;
}

std::pair<Poly, Poly> MoebiusCusp(const Sl2& g, const Poly& num,
                                  const Poly& den) {
  if (num.IsZero() && den.IsZero())
    Fail(ErrorKind::kBothZero, "(0, 0) does not name a cusp");
  Poly n = g.a * num + g.b * den;
  Poly d = g.c * num + g.d * den;
  if (d.IsZero()) return {Poly::Constant(num.field(), 1), d};
  const Poly common = PolyGcd(n, d);
  if (!common.IsConstant()) {
    n = PolyDivMod(n, common).first;
    d = PolyDivMod(d, common).first;
  }
  const uint32_t inv_lead = num.field()->Inv(d.leading());
  return {n.ScaledBy(inv_lead), d.ScaledBy(inv_lead)};
}

}  // namespace ffdioph
