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

#include "ffdioph/orbit.hpp"

#include <algorithm>
#include <cstdint>

namespace ffdioph {

namespace {

// (deg, ascending coefficient list) order; total on canonical polynomials.
bool PolyBefore(const Poly& a, const Poly& b) {
  if (a.deg() != b.deg()) return a.deg() < b.deg();
  return a.coeffs() < b.coeffs();
}

bool SolutionBefore(const DioSolution& a, const DioSolution& b) {
  if (a.den.deg() != b.den.deg()) return a.den.deg() < b.den.deg();
  if (a.den.coeffs() != b.den.coeffs()) return a.den.coeffs() < b.den.coeffs();
  return a.num.coeffs() < b.num.coeffs();
}

// Steps a base-q coefficient odometer; false once it wraps around to zero.
bool NextCoeffs(std::vector<uint32_t>* c, uint32_t q) {
  for (auto& digit : *c) {
    if (++digit < q) return true;
    digit = 0;
  }
  return false;
}

bool DividesExactly(const Poly& den, const Poly& q0) {
  return PolyDivMod(den, q0).second.IsZero();
}

}  // namespace

Poly NormalizeModulus(const Poly& q0) {
  if (q0.IsZero())
    Fail(ErrorKind::kDivisionByZeroPoly,
         "the congruence modulus Q0 must be nonzero");
  return q0.MonicScaled();
}

bool OrbitContains(const Poly& num, const Poly& den, const Poly& q0) {
  RequireSameField(num.field(), den.field());
  if (den.IsZero())
    Fail(ErrorKind::kDivisionByZeroPoly, "orbit points have Q != 0");
  const Poly q0n = NormalizeModulus(q0);
  if (!PolyGcd(num, den).IsConstant()) return false;
  return DividesExactly(den, q0n);
}

std::vector<std::pair<Poly, Poly>> OrbitEnumerate(const FieldPtr& k,
                                                  const Poly& q0, int d,
                                                  uint64_t budget) {
  if (d < 0) Fail(ErrorKind::kUsage, "orbit depth must be >= 0");
  const Poly q0n = NormalizeModulus(q0);
  const uint32_t q = k->q();
  const int e = q0n.deg();
  std::vector<std::pair<Poly, Poly>> out;

  if (d == 0) {
    if (e == 0)
      for (uint32_t c = 0; c < q; ++c)
        out.emplace_back(Poly::Constant(k, c), Poly::Constant(k, 1));
    return out;
  }
  if (e > d) return out;

  if (BigPow(q, 2 * d - e) > budget)
    Fail(ErrorKind::kBudgetExceeded,
         "orbit enumeration at depth " + std::to_string(d) + " needs q^" +
             std::to_string(2 * d - e) + " candidates, over the budget of " +
             std::to_string(budget));

  // Denominators: Q0 times every monic polynomial of degree d - deg Q0.
  std::vector<Poly> dens;
  std::vector<uint32_t> mc(static_cast<size_t>(d - e) + 1, 0);
  mc.back() = 1;  // monic
  do {
    dens.push_back(q0n * Poly::FromCoeffs(k, mc));
  } while (NextCoeffs(&mc, q) && mc.back() == 1);
  std::sort(dens.begin(), dens.end(), PolyBefore);

  for (const Poly& den : dens) {
    std::vector<Poly> nums;
    std::vector<uint32_t> pc(static_cast<size_t>(d), 0);
    for (;;) {
      Poly p = Poly::FromCoeffs(k, pc);
      if (PolyGcd(p, den).IsConstant()) nums.push_back(std::move(p));
      if (!NextCoeffs(&pc, q)) break;
    }
    std::sort(nums.begin(), nums.end(), PolyBefore);
    for (Poly& p : nums) out.emplace_back(std::move(p), den);
  }
  return out;
}

BigInt OrbitCountAtDepth(const FieldPtr& k, const Poly& q0, int d,
                         uint64_t budget) {
  if (d < 0) Fail(ErrorKind::kUsage, "orbit depth must be >= 0");
  const Poly q0n = NormalizeModulus(q0);
  const uint32_t q = k->q();
  if (q0n.deg() == 0) {
    // Unconstrained: q constants at depth 0; at depth d >= 1 each of the
    // q^d monic Q admits Phi(Q) coprime numerators, and the Phi values sum
    // to q^(2d) - q^(2d-1).
    if (d == 0) return q;
    return BigPow(q, 2 * d) - BigPow(q, 2 * d - 1);
  }
  return static_cast<int64_t>(OrbitEnumerate(k, q0n, d, budget).size());
}

BigInt OrbitCountWindow(const FieldPtr& k, const Poly& q0, int n, int width,
                        uint64_t budget) {
  if (n < 0) Fail(ErrorKind::kUsage, "window start must be >= 0");
  if (width < 2) Fail(ErrorKind::kUsage, "window width must be >= 2");
  BigInt total = 0;
  for (int d = (n + 1) / 2; 2 * d < n + width; ++d)
    if (2 * d >= n) total += OrbitCountAtDepth(k, q0, d, budget);
  return total;
}

BigInt GroupBallCount(const FieldPtr& k, int n, uint64_t budget) {
  if (n < 0 || n % 2 != 0)
    Fail(ErrorKind::kUsage, "matrix-ball radius must be even and >= 0");
  const uint32_t q = k->q();
  const int m = n / 2;

  if (BigPow(q, 3 * (m + 1)) > budget)
    Fail(ErrorKind::kBudgetExceeded,
         "matrix-ball count at radius " + std::to_string(n) + " scans q^" +
             std::to_string(3 * (m + 1)) + " triples, over the budget of " +
             std::to_string(budget));

  // det = ad - bc = 1 with all degrees <= m.  When a = 0: bc = -1 forces
  // constant b with c = -1/b, and d is free: (q-1) q^{m+1} matrices.  When
  // a != 0: d is determined as (1 + bc)/a, counted when the division is
  // exact and the quotient fits the degree bound.
  BigInt count = (q - 1) * BigPow(q, m + 1);

  std::vector<uint32_t> ac(static_cast<size_t>(m) + 1, 0);
  while (NextCoeffs(&ac, q)) {
    const Poly a = Poly::FromCoeffs(k, ac);
    std::vector<uint32_t> bc_odo(2 * (static_cast<size_t>(m) + 1), 0);
    for (;;) {
      const Poly b = Poly::FromCoeffs(
          k, std::vector<uint32_t>(bc_odo.begin(), bc_odo.begin() + m + 1));
      const Poly c = Poly::FromCoeffs(
          k, std::vector<uint32_t>(bc_odo.begin() + m + 1, bc_odo.end()));
      const Poly target = Poly::Constant(k, 1) + b * c;
      const auto [quot, rem] = PolyDivMod(target, a);
      if (rem.IsZero() && quot.deg() <= m) ++count;
      if (!NextCoeffs(&bc_odo, q)) break;
    }
  }
  return count;
}

BigInt ParabolicBallCount(const FieldPtr& k, int n) {
  if (n < 0 || n % 2 != 0)
    Fail(ErrorKind::kUsage, "matrix-ball radius must be even and >= 0");
  // [[a, b], [0, 1/a]] with constant a != 0 moves the base point by
  // 2 max(0, deg b).
  return (k->q() - 1) * BigPow(k->q(), n / 2 + 1);
}

std::string DioSolution::Format() const {
  std::string s = "(" + num.Format() + ")/(" + den.Format() + ") nu=";
  s += nu >= kPosInfVal ? "inf" : std::to_string(nu);
  return s;
}

namespace {

// Shared validation: the target must sit in the closed unit ball.
void RequireInUnitBall(const LaurentSeries& probe) {
  if (!probe.IsZeroToPrec() && probe.nu() < 0)
    Fail(ErrorKind::kNotInUnitBall,
         "the target has nu = " + std::to_string(probe.nu()) +
             " < 0; searches run inside the unit ball");
}

}  // namespace

std::vector<DioSolution> Solutions(SeriesSource& f, const TestFunction& phi,
                                   const Poly& q0, int d_max) {
  if (d_max < 0) Fail(ErrorKind::kUsage, "d_max must be >= 0");
  const FieldPtr& k = f.field();
  if (phi.q() != k->q())
    Fail(ErrorKind::kFieldMismatch,
         "test function is tuned to q = " + std::to_string(phi.q()) +
             ", the series lives over q = " + std::to_string(k->q()));
  for (int d = 0; d <= d_max; ++d)
    if (!phi.StrictAt(d))
      Fail(ErrorKind::kPhiOutOfRegime,
           "speed reaches 1 at depth " + std::to_string(d) +
               " (radius " + std::to_string(phi.ThresholdRadius(d)) +
               " <= 2d); the convergent filter needs the strict regime — "
               "use the exhaustive search instead");
  const Poly q0n = NormalizeModulus(q0);
  const bool unconstrained = q0n.deg() == 0;

  RequireInUnitBall(f.Realize(1));

  CfExpansion ex = CfExpand(&f, INT32_MAX / 2, d_max + 1);
  const int last_deg = ex.conv_q.back().deg();
  if (ex.status == CfStatus::kPrecisionExhausted && last_deg <= d_max)
    Fail(ErrorKind::kPrecisionExhausted,
         "the source ran out of coefficients at deg Q = " +
             std::to_string(last_deg) + ", inside the search window (d_max " +
             std::to_string(d_max) + ")");

  std::vector<DioSolution> out;

  // Depth 0: the only candidate within distance nu >= 1 of f is the constant
  // a0, and nu(f - a0) = deg a_1 (exactly the first excursion height).
  if (unconstrained) {
    const int nu0 = ex.digits.empty()
                        ? kPosInfVal  // terminated at a0: f is that constant
                        : ex.digits.front().deg();
    if (nu0 >= phi.ThresholdRadius(0))
      out.push_back(DioSolution{ex.a0, Poly::Constant(k, 1), nu0});
  }

  // Positive depth: every qualifying point is a convergent (strict quality
  // beats the Legendre line 2 deg Q), and only the canonical ones — those
  // with deg P < deg Q, i.e. with a0 = 0 — can be orbit representatives.
  if (ex.a0.IsZero()) {
    for (size_t n = 1; n < ex.conv_q.size(); ++n) {
      const int dq = ex.conv_q[n].deg();
      if (dq > d_max) break;
      int nu;
      if (n + 1 < ex.conv_q.size()) {
        nu = dq + ex.conv_q[n + 1].deg();
      } else {
        // Last convergent of a terminated expansion: f = P_n/Q_n exactly.
        nu = kPosInfVal;
      }
      if (nu < phi.ThresholdRadius(dq)) continue;
      if (!unconstrained && !DividesExactly(ex.conv_q[n], q0n)) continue;
      const uint32_t s = k->Inv(ex.conv_q[n].leading());
      out.push_back(DioSolution{ex.conv_p[n].ScaledBy(s),
                                ex.conv_q[n].ScaledBy(s), nu});
    }
  }

  std::sort(out.begin(), out.end(), SolutionBefore);
  return out;
}

std::vector<DioSolution> SolutionsBruteforce(SeriesSource& f,
                                             const TestFunction& phi,
                                             const Poly& q0, int d_max,
                                             uint64_t budget, int prec_limit) {
  if (d_max < 0) Fail(ErrorKind::kUsage, "d_max must be >= 0");
  const FieldPtr& k = f.field();
  if (phi.q() != k->q())
    Fail(ErrorKind::kFieldMismatch,
         "test function is tuned to q = " + std::to_string(phi.q()) +
             ", the series lives over q = " + std::to_string(k->q()));
  const Poly q0n = NormalizeModulus(q0);

  RequireInUnitBall(f.Realize(1));

  std::vector<DioSolution> out;
  for (int d = 0; d <= d_max; ++d) {
    const int threshold = phi.ThresholdRadius(d);
    for (auto& [num, den] : OrbitEnumerate(k, q0n, d, budget)) {
      const int nu = NuOfDifference(&f, num, den, prec_limit);
      if (nu >= threshold) out.push_back(DioSolution{num, den, nu});
    }
  }
  std::sort(out.begin(), out.end(), SolutionBefore);
  return out;
}

}  // namespace ffdioph
