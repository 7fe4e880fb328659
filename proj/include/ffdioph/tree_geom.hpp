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
// The geometry a continued-fraction expansion traces through the (q+1)-regular
// tree: distances between boundary points, cusp depths, the piecewise-linear
// height profile of the vertical geodesic, shadows of horoballs, and the
// displacement of 2x2 polynomial matrices acting on the tree.  Everything is
// an integer (edge counts and valuations); no floating point enters.

#ifndef FFDIOPH_TREE_GEOM_HPP_
#define FFDIOPH_TREE_GEOM_HPP_

#include <string>
#include <utility>
#include <vector>

#include "ffdioph/contfrac.hpp"
#include "ffdioph/laurent.hpp"
#include "ffdioph/measure.hpp"
#include "ffdioph/poly.hpp"

namespace ffdioph {

// nu(f - g): the valuation form of the boundary distance seen from infinity
// (the distance itself is q^-nu, rendered only in reports).  Fails with
// kPrecisionExhausted when the inputs agree through their whole known window.
int HamenstadtVal(const LaurentSeries& f, const LaurentSeries& g);

// Source form: exact for two rational sources (kEqualSeries if they are the
// same point); otherwise realizes both at growing precision up to prec_limit.
int HamenstadtVal(SeriesSource& f, SeriesSource& g, int prec_limit = 4096);

// D(P/Q) = 2 deg Q: the tree distance from the base horoball at infinity to
// the horoball at the reduced fraction P/Q.
int CuspDistance(const Poly& num, const Poly& den);

// One excursion of the vertical geodesic [infinity, f] into the horoball at
// the convergent r = num/den = P_n/Q_n: the height above the horoball
// boundary rises from 0 at t_enter = 2 deg Q_n with slope 1, peaks at
// deg a_{n+1}, and returns to 0 at t_exit = 2 deg Q_{n+1}.
struct Tent {
  int index;    // convergent index n >= 0
  int t_enter;  // 2 deg Q_n
  int t_peak;   // deg Q_n + deg Q_{n+1}
  int t_exit;   // 2 deg Q_{n+1}
  int peak;     // deg a_{n+1}
  Poly num;     // P_n
  Poly den;     // Q_n
};

// The full tent sequence of an expansion with at least one digit beyond a0
// (else kNoCertifiedDigits).  Consecutive tents share endpoints:
// t_exit of tent n equals t_enter of tent n+1.
std::vector<Tent> TentProfile(const CfExpansion& expansion);

// Height of the geodesic above the horoball family at time t >= 0; zero
// exactly at the times t = 2 deg Q_n.  Fails with kPrecisionExhausted past
// the last computed tent (kUsage for t < 0, kNoCertifiedDigits when empty).
int HeightAt(const std::vector<Tent>& tents, int t);

// The shadow of the horoball at P/Q shrunk by t: every boundary point whose
// geodesic from infinity enters the shrunk horoball, i.e. the ball
// {xi : nu(xi - P/Q) >= D(P/Q) + t}.
Ball ShadowBall(const Poly& num, const Poly& den, int t);

// A 2x2 matrix over F_q[X] with determinant exactly 1.
struct Sl2 {
  Poly a, b, c, d;

  std::string Format() const;
};

// Validates the determinant (kNotUnimodular otherwise).
Sl2 MakeSl2(const Poly& a, const Poly& b, const Poly& c, const Poly& d);
Sl2 Sl2Identity(const FieldPtr& k);
Sl2 Sl2Mul(const Sl2& x, const Sl2& y);
Sl2 Sl2Inverse(const Sl2& x);

// d(x0, g x0) on the tree: 2 * max(0, max degree of the entries).
int TranslationDistance(const Sl2& g);

// Action on a cusp P/Q (den = 0 encodes infinity): returns the reduced image
// with monic denominator, (1, 0) for infinity.
std::pair<Poly, Poly> MoebiusCusp(const Sl2& g, const Poly& num,
                                  const Poly& den);

}  // namespace ffdioph

#endif  // FFDIOPH_TREE_GEOM_HPP_
