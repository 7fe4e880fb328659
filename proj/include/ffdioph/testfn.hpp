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

#ifndef FFDIOPH_TESTFN_HPP_
#define FFDIOPH_TESTFN_HPP_

#include <cstdint>
#include <string>

#include "ffdioph/errors.hpp"

namespace ffdioph {

enum class IntegralClass { kDiverges, kConverges };

std::string IntegralClassName(IntegralClass c);

// Which variable a test function reads:
//   * kPhi: argument is the denominator size u = |Q| (so thresholds compare
//     against phi(u)/u^2);
//   * kPsi: argument is the tree time t = 2 deg Q (so thresholds compare
//     against psi(t) e^-t).
enum class FnSide { kPhi, kPsi };

// A speed function min(cap, C * v^-a * (ln v)^-b) on [t0, oo), evaluated with
// the argument clamped below at t0 so the logarithm never degenerates.  The
// same parameters drive three views:
//
//   * PhiAt(u): the speed at denominator size u = |Q|;
//   * PsiAtTime(t): the speed re-parameterized by tree time t = 2 deg Q,
//     normalized so that psi(t)^delta with delta = ln q equals phi(q^{t/2});
//   * ThresholdRadius(d): the smallest integer radius k with
//     q^-k <= phi(q^d) * q^-2d, i.e. k = ceil(2d - log_q phi(q^d)).  A ball
//     of that radius about a depth-d cusp is the exact solution set of the
//     target inequality at that cusp.
//
// The two sides are linked by PsiFromPhi: for a phi-side function with a = 0
// the substitution u = q^{t/2} and the 1/ln q exponent land back inside the
// same parameter family, and the integer thresholds agree exactly.
//
// The radius computation snaps to integers within a 1e-12 relative band (the
// cap and the b = 0 presets land exactly on integers up to rounding noise)
// and refuses to guess inside the (1e-12, 1e-9] band, where float error
// could silently flip a ceil.
class TestFunction {
 public:
  // Presets: "divlog" (C=1, a=0, b=1), "convlog2" (C=1, a=0, b=2),
  // "power" (C=1, a=1, b=0), "half" (C=1/2, a=0, b=0); t0 = q, cap = 1.
  // All presets are phi-side.
  static TestFunction Preset(const std::string& name, uint32_t q);

  // Phi-side custom function.  t0 < 0 means "use q".  Requires q >= 2,
  // C > 0, 0 < cap <= 1, t0 >= q.
  static TestFunction Custom(uint32_t q, double c, double a, double b,
                             double t0 = -1.0, double cap = 1.0);

  // Psi-side custom function of the tree time.  t0 < 0 means "use 2" (the
  // time mirror of the phi-side clamp at q).  Requires t0 >= 2.
  static TestFunction CustomPsi(uint32_t q, double c, double a, double b,
                                double t0 = -1.0, double cap = 1.0);

  // The time-side companion psi(t) = phi(q^{t/2})^{1/ln q} of a phi-side
  // function, translated in closed form.  Only the a = 0 subfamily stays
  // inside the parameter family (a > 0 would need an exponential factor);
  // anything else fails with kUnsupportedFamily.
  static TestFunction PsiFromPhi(const TestFunction& phi);

  FnSide side() const { return side_; }

  double PhiAt(double u) const;
  double PsiAtTime(double t) const;
  // psi(t)^delta with delta = ln q; for a phi-side function the exponents
  // cancel to PhiAt(q^{t/2}).
  double PsiDeltaAtTime(double t) const;

  int ThresholdRadius(int d) const;
  // Whether the radius clears the disjointness line 2d, i.e. the speed at
  // depth d is strictly below 1.
  bool StrictAt(int d) const { return ThresholdRadius(d) >= 2 * d + 1; }

  // Convergence of int phi(t)/t dt, equivalently of int psi(t)^delta dt (the
  // substitution t = q^{s/2} maps one onto the other); fixed at construction.
  IntegralClass Classify() const { return cls_; }
  IntegralClass ClassifyPhiOverT() const { return cls_; }
  IntegralClass ClassifyPsiDelta() const { return cls_; }

  uint32_t q() const { return q_; }
  double c() const { return c_; }
  double a() const { return a_; }
  double b() const { return b_; }
  double t0() const { return t0_; }
  double cap() const { return cap_; }
  const std::string& name() const { return name_; }
  std::string Describe() const;

 private:
  TestFunction(uint32_t q, FnSide side, std::string name, double c, double a,
               double b, double t0, double cap, IntegralClass cls);

  // min(cap, C * v^-a * (ln v)^-b) with v = max(arg, t0), in linear space.
  double RawAt(double arg) const;
  // ln of the same, taking ln(arg) directly so huge arguments stay finite.
  double LnRawAtLn(double ln_arg) const;

  uint32_t q_;
  FnSide side_;
  std::string name_;
  double c_, a_, b_, t0_, cap_;
  IntegralClass cls_;
};

// Composite-Simpson integral of psi(t)^delta over [lo, hi].
double IntegratePsiDelta(const TestFunction& f, double lo, double hi,
                         int steps = 20000);

}  // namespace ffdioph

#endif  // FFDIOPH_TESTFN_HPP_
