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

#include "ffdioph/testfn.hpp"

#include <cmath>
#include <cstdio>

namespace ffdioph {

namespace {

IntegralClass ClassifyPhiParams(double a, double b) {
  if (a < 0.0) return IntegralClass::kDiverges;
  if (a == 0.0 && b <= 1.0) return IntegralClass::kDiverges;
  return IntegralClass::kConverges;
}

// For a psi-side function, int psi^delta dt has integrand
// C^lnq * t^{-a lnq} (ln t)^{-b lnq}; the usual power/log test applies to the
// scaled exponents.  A 1e-9 band around a*lnq = 1 is treated as the boundary
// case so that closed-form translations of a = 0 phi functions (which land
// exactly on a*lnq = b) classify consistently.
IntegralClass ClassifyPsiParams(double a, double b, uint32_t q) {
  const double lnq = std::log(static_cast<double>(q));
  const double ascale = a * lnq;
  const double bscale = b * lnq;
  if (std::abs(ascale - 1.0) <= 1e-9)
    return bscale <= 1.0 + 1e-9 ? IntegralClass::kDiverges
                                : IntegralClass::kConverges;
  return ascale < 1.0 ? IntegralClass::kDiverges : IntegralClass::kConverges;
}

}  // namespace

std::string IntegralClassName(IntegralClass c) {
  return c == IntegralClass::kDiverges ? "diverges" : "converges";
}

TestFunction::TestFunction(uint32_t q, FnSide side, std::string name, double c,
                           double a, double b, double t0, double cap,
                           IntegralClass cls)
    : q_(q),
      side_(side),
      name_(std::move(name)),
      c_(c),
      a_(a),
      b_(b),
      t0_(t0),
      cap_(cap),
      cls_(cls) {}

TestFunction TestFunction::Preset(const std::string& name, uint32_t q) {
  if (q < 2) Fail(ErrorKind::kUsage, "presets need q >= 2");
  const double t0 = static_cast<double>(q);
  if (name == "divlog")
    return TestFunction(q, FnSide::kPhi, name, 1.0, 0.0, 1.0, t0, 1.0,
                        ClassifyPhiParams(0.0, 1.0));
  if (name == "convlog2")
    return TestFunction(q, FnSide::kPhi, name, 1.0, 0.0, 2.0, t0, 1.0,
                        ClassifyPhiParams(0.0, 2.0));
  if (name == "power")
    return TestFunction(q, FnSide::kPhi, name, 1.0, 1.0, 0.0, t0, 1.0,
                        ClassifyPhiParams(1.0, 0.0));
  if (name == "half")
    return TestFunction(q, FnSide::kPhi, name, 0.5, 0.0, 0.0, t0, 1.0,
                        ClassifyPhiParams(0.0, 0.0));
  Fail(ErrorKind::kUsage, "unknown test-function preset \"" + name +
                              "\" (try divlog, convlog2, power, half)");
}

TestFunction TestFunction::Custom(uint32_t q, double c, double a, double b,
                                  double t0, double cap) {
  if (q < 2) Fail(ErrorKind::kUsage, "custom test function needs q >= 2");
  if (t0 < 0) t0 = static_cast<double>(q);
  if (!(c > 0)) Fail(ErrorKind::kUsage, "test function needs C > 0");
  if (!(cap > 0) || cap > 1.0)
    Fail(ErrorKind::kUsage, "test function needs 0 < cap <= 1");
  if (t0 < static_cast<double>(q))
    Fail(ErrorKind::kUsage, "test function needs t0 >= q");
  return TestFunction(q, FnSide::kPhi, "custom", c, a, b, t0, cap,
                      ClassifyPhiParams(a, b));
}

TestFunction TestFunction::CustomPsi(uint32_t q, double c, double a, double b,
                                     double t0, double cap) {
  if (q < 2) Fail(ErrorKind::kUsage, "custom test function needs q >= 2");
  if (t0 < 0) t0 = 2.0;
  if (!(c > 0)) Fail(ErrorKind::kUsage, "test function needs C > 0");
  if (!(cap > 0) || cap > 1.0)
    Fail(ErrorKind::kUsage, "test function needs 0 < cap <= 1");
  if (t0 < 2.0)
    Fail(ErrorKind::kUsage, "time-side test function needs t0 >= 2");
  return TestFunction(q, FnSide::kPsi, "custom-psi", c, a, b, t0, cap,
                      ClassifyPsiParams(a, b, q));
}

TestFunction TestFunction::PsiFromPhi(const TestFunction& phi) {
  if (phi.side_ != FnSide::kPhi)
    Fail(ErrorKind::kUsage, "PsiFromPhi takes a phi-side function");
  if (phi.a_ != 0.0)
    Fail(ErrorKind::kUnsupportedFamily,
         "phi(u) = C u^-a (ln u)^-b with a != 0 leaves the parameter family "
         "under u = q^{t/2}: the translated function decays exponentially");
  // phi(q^{t/2}) = C ((ln q / 2) t)^-b; the 1/ln q exponent then spreads
  // multiplicatively over every factor.
  const double lnq = std::log(static_cast<double>(phi.q_));
  const double c =
      std::pow(phi.c_ * std::pow(lnq / 2.0, -phi.b_), 1.0 / lnq);
  const double a = phi.b_ / lnq;
  const double t0 = 2.0 * std::log(phi.t0_) / lnq;
  const double cap = std::pow(phi.cap_, 1.0 / lnq);
  return TestFunction(phi.q_, FnSide::kPsi, phi.name_ + "-psi", c, a, 0.0, t0,
                      cap, phi.cls_);
}

double TestFunction::RawAt(double arg) const {
  const double v = std::max(arg, t0_);
  const double raw = c_ * std::pow(v, -a_) * std::pow(std::log(v), -b_);
  return std::min(cap_, raw);
}

double TestFunction::LnRawAtLn(double ln_arg) const {
  const double ln_v = std::max(ln_arg, std::log(t0_));
  double ln_raw = std::log(c_) - a_ * ln_v;
  if (b_ != 0.0) ln_raw -= b_ * std::log(ln_v);
  return std::min(ln_raw, std::log(cap_));
}

double TestFunction::PhiAt(double u) const {
  if (side_ == FnSide::kPhi) return RawAt(u);
  // psi(2 log_q u)^{ln q}.
  const double lnq = std::log(static_cast<double>(q_));
  return std::pow(RawAt(2.0 * std::log(u) / lnq), lnq);
}

double TestFunction::PsiAtTime(double t) const {
  if (side_ == FnSide::kPsi) return RawAt(t);
  const double lnq = std::log(static_cast<double>(q_));
  return std::pow(PsiDeltaAtTime(t), 1.0 / lnq);
}

double TestFunction::PsiDeltaAtTime(double t) const {
  const double lnq = std::log(static_cast<double>(q_));
  if (side_ == FnSide::kPsi) return std::pow(RawAt(t), lnq);
  // phi(q^{t/2}), with the argument handled in log space so large times stay
  // finite.
  return std::exp(LnRawAtLn(0.5 * t * lnq));
}

int TestFunction::ThresholdRadius(int d) const {
  if (d < 0) Fail(ErrorKind::kUsage, "depth must be >= 0");
  const double lnq = std::log(static_cast<double>(q_));
  // The inequality nu >= 2d - log_q phi(q^d), equivalently
  // nu >= t - ln psi(t) at t = 2d; both sides compute the same x.
  double x;
  if (side_ == FnSide::kPhi) {
    x = 2.0 * d - LnRawAtLn(d * lnq) / lnq;
  } else {
    x = 2.0 * d - LnRawAtLn(std::log(2.0 * d > 0 ? 2.0 * d : 1.0));
  }
  const double r = std::nearbyint(x);
  const double scale = std::max(1.0, std::abs(x));
  if (std::abs(x - r) <= 1e-12 * scale) return static_cast<int>(r);
  if (std::abs(x - r) <= 1e-9 * scale) {
    char buf[160];
    std::snprintf(buf, sizeof(buf),
                  "threshold 2d - log_q phi = %.17g at depth %d sits inside "
                  "the float guard band; refusing to round",
                  x, d);
    Fail(ErrorKind::kThresholdOnBoundary, buf);
  }
  return static_cast<int>(std::ceil(x));
}

std::string TestFunction::Describe() const {
  char buf[200];
  if (side_ == FnSide::kPhi) {
    std::snprintf(buf, sizeof(buf),
                  "%s: phi(u) = min(%g, %g * u^-%g * (ln u)^-%g), u >= %g",
                  name_.c_str(), cap_, c_, a_, b_, t0_);
  } else {
    std::snprintf(buf, sizeof(buf),
                  "%s: psi(t) = min(%g, %g * t^-%g * (ln t)^-%g), t >= %g",
                  name_.c_str(), cap_, c_, a_, b_, t0_);
  }
  return buf;
}

double IntegratePsiDelta(const TestFunction& f, double lo, double hi,
                         int steps) {
  if (!(hi > lo)) Fail(ErrorKind::kUsage, "integration needs hi > lo");
  if (steps < 2) Fail(ErrorKind::kUsage, "integration needs >= 2 steps");
  if (steps % 2 != 0) ++steps;
  const double h = (hi - lo) / steps;
  double acc = f.PsiDeltaAtTime(lo) + f.PsiDeltaAtTime(hi);
  for (int i = 1; i < steps; ++i)
    acc += f.PsiDeltaAtTime(lo + i * h) * (i % 2 ? 4.0 : 2.0);
  return acc * h / 3.0;
}

}  // namespace ffdioph
