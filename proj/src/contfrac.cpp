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

#include "ffdioph/contfrac.hpp"

#include <algorithm>
#include <memory>
#include <stdexcept>

namespace ffdioph {

std::string CfStatusName(CfStatus s) {
  switch (s) {
    case CfStatus::kTerminated:
      return "terminated";
    case CfStatus::kBudgetReached:
      return "budget_reached";
    case CfStatus::kPrecisionExhausted:
      return "precision_exhausted";
  }
  return "unknown";
}

namespace {

// Both kernels run the Euclidean algorithm on the pair
// (X^{m-1}, c_1 X^{m-2} + ... + c_{m-1}), whose quotient sequence is the
// digit sequence of the rational stand-in c_1 X^-1 + ... + c_{m-1} X^-(m-1).
// The driver above them decides which quotients are certified.
class EuclidKernel {
 public:
  virtual ~EuclidKernel() = default;
  // frac[i-1] holds c_i for i = 1 .. m-1.
  virtual void Init(const std::vector<uint32_t>& frac, int m) = 0;
  // One division step; fills the quotient (ascending coefficients, exact
  // degree) and returns true, or returns false once the remainder is zero.
  virtual bool Step(std::vector<uint32_t>* quot) = 0;
};

// Bit-packed kernel for the binary field: remainders live in 64-bit words
// and a division step is a cascade of shifted XORs.
class F2Kernel final : public EuclidKernel {
 public:
  void Init(const std::vector<uint32_t>& frac, int m) override {
    const int words = (m + 63) >> 6;
    rp_.assign(words, 0);
    r_.assign(words, 0);
    rp_[(m - 1) >> 6] |= uint64_t{1} << ((m - 1) & 63);
    dp_ = m - 1;
    for (int i = 1; i < m; ++i)
      if (frac[i - 1])
        r_[(m - 1 - i) >> 6] |= uint64_t{1} << ((m - 1 - i) & 63);
    dr_ = BitDeg(r_, m - 2);
  }

  bool Step(std::vector<uint32_t>* quot) override {
    if (dr_ < 0) return false;
    quot->assign(dp_ - dr_ + 1, 0);
    while (dp_ >= dr_) {
      const int s = dp_ - dr_;
      (*quot)[s] = 1;
      XorShifted(s);
      dp_ = BitDeg(rp_, dp_ - 1);
    }
    std::swap(rp_, r_);
    std::swap(dp_, dr_);
    return true;
  }

 private:
  static int BitDeg(const std::vector<uint64_t>& w, int from) {
    for (int i = from < 0 ? -1 : from >> 6; i >= 0; --i)
      if (w[i]) return (i << 6) + 63 - __builtin_clzll(w[i]);
    return -1;
  }

  void XorShifted(int s) {  // rp ^= r << s
    const int ws = s >> 6, bs = s & 63;
    const int nw = (dr_ >> 6) + 1;
    if (bs == 0) {
      for (int j = 0; j < nw; ++j) rp_[ws + j] ^= r_[j];
    } else {
      for (int j = 0; j < nw; ++j) {
        rp_[ws + j] ^= r_[j] << bs;
        const uint64_t hi = r_[j] >> (64 - bs);
        if (hi && ws + j + 1 < static_cast<int>(rp_.size()))
          rp_[ws + j + 1] ^= hi;
      }
    }
  }

  std::vector<uint64_t> rp_, r_;
  int dp_ = -1, dr_ = -1;
};

// Dense kernel for every other field.
class GenericKernel final : public EuclidKernel {
 public:
  explicit GenericKernel(FieldPtr k) : k_(std::move(k)) {}

  void Init(const std::vector<uint32_t>& frac, int m) override {
    rp_.assign(m, 0);
    r_.assign(m, 0);
    rp_[m - 1] = 1;
    dp_ = m - 1;
    for (int i = 1; i < m; ++i) r_[m - 1 - i] = frac[i - 1];
    dr_ = CoeffDeg(r_, m - 2);
  }

  bool Step(std::vector<uint32_t>* quot) override {
    if (dr_ < 0) return false;
    quot->assign(dp_ - dr_ + 1, 0);
    const uint32_t lead_inv = k_->Inv(r_[dr_]);
    while (dp_ >= dr_) {
      const int s = dp_ - dr_;
      const uint32_t c = k_->Mul(rp_[dp_], lead_inv);
      (*quot)[s] = c;
      for (int j = 0; j <= dr_; ++j)
        rp_[s + j] = k_->Sub(rp_[s + j], k_->Mul(c, r_[j]));
      dp_ = CoeffDeg(rp_, dp_ - 1);
    }
    std::swap(rp_, r_);
    std::swap(dp_, dr_);
    return true;
  }

 private:
  static int CoeffDeg(const std::vector<uint32_t>& w, int from) {
    for (int i = from; i >= 0; --i)
      if (w[i]) return i;
    return -1;
  }

  FieldPtr k_;
  std::vector<uint32_t> rp_, r_;
  int dp_ = -1, dr_ = -1;
};

std::string FormatCf(const Poly& a0, const std::vector<Poly>& digits) {
  std::string out = "[" + a0.Format();
  for (size_t i = 0; i < digits.size(); ++i) {
    out += i == 0 ? "; " : ", ";
    out += digits[i].Format();
  }
  out += "]";
  return out;
}

}  // namespace

std::string CfExpansion::Format() const { return FormatCf(a0, digits); }
std::string CfRational::Format() const { return FormatCf(a0, digits); }

CfStreamResult CfStreamDigits(SeriesSource* src, const CfStreamOptions& opts,
                              const CfDigitCallback& cb) {
  const FieldPtr k = src->field();
  if (src->max_prec() < 1)
    Fail(ErrorKind::kPrecisionTooSmall,
         "source cannot certify the polynomial part");

  const auto rational = src->ExactRational();
  const bool track_conv = rational.has_value();
  const bool track_mod = opts.track_mod.has_value();
  if (track_mod) {
    RequireSameField(k, opts.track_mod->field());
    if (opts.track_mod->IsZero())
      Fail(ErrorKind::kDivisionByZeroPoly, "cannot track residues mod 0");
  }
  const bool need_poly = opts.materialize_digits || track_conv || track_mod;

  std::unique_ptr<EuclidKernel> kernel;
  if (k->q() == 2)
    kernel = std::make_unique<F2Kernel>();
  else
    kernel = std::make_unique<GenericKernel>(k);

  // Digits certified so far, replayed (and re-checked) after every
  // precision restart.
  std::vector<std::vector<uint32_t>> emitted;
  int emitted_deg_sum = 0;

  std::optional<Poly> a0;
  // Convergent pair, maintained only for rational sources (termination).
  std::optional<Poly> cp_prev, cq_prev, cp, cq;
  // Q_{n-1} and Q_n mod track_mod.
  std::optional<Poly> qm_prev, qm;

  int target = std::max(opts.initial_prec, 2);
  int last_m = 0;
  std::vector<uint32_t> quot;

  for (;;) {
    LaurentSeries ls = src->Realize(target);
    const int m = ls.prec();
    if (m < 1)
      Fail(ErrorKind::kPrecisionTooSmall,
           "source cannot certify the polynomial part");
    if (m <= last_m)  // the source stopped making progress
      return CfStreamResult{CfStatus::kPrecisionExhausted, *a0,
                            static_cast<int>(emitted.size()), emitted_deg_sum,
                            m};
    last_m = m;

    if (!a0) {
      a0 = ls.PolynomialPart();
      if (track_conv) {
        cp_prev = Poly::Constant(k, 1);
        cq_prev = Poly::Zero(k);
        cp = *a0;
        cq = Poly::Constant(k, 1);
        if ((rational->first - *a0 * rational->second).IsZero())
          return CfStreamResult{CfStatus::kTerminated, *a0, 0, 0, m};
      }
      if (track_mod) {
        qm_prev = Poly::Zero(k);
        qm = PolyDivMod(Poly::Constant(k, 1), *opts.track_mod).second;
      }
      if (opts.max_digits < 1 || opts.max_qdeg <= 0)
        return CfStreamResult{CfStatus::kBudgetReached, *a0, 0, 0, m};
    }

    std::vector<uint32_t> frac(static_cast<size_t>(m - 1));
    for (int i = 1; i < m; ++i) frac[i - 1] = ls.coeff(i);
    kernel->Init(frac, m);

    int n = 0;
    int dq_prev = 0, dq = 0;  // deg Q_{n-1}, deg Q_n
    int hint_d = 1;
    bool need_more = false;
    for (;;) {
      if (!kernel->Step(&quot)) {
        need_more = true;
        break;
      }
      const int d = static_cast<int>(quot.size()) - 1;
      const int dq_next = dq + d;
      if (m < dq + dq_next + 2) {  // digit not pinned yet
        need_more = true;
        hint_d = d;
        break;
      }
      if (n < static_cast<int>(emitted.size())) {
        if (quot != emitted[n])
          throw std::logic_error(
              "certified digit changed under precision growth");
        ++n;
        dq_prev = dq;
        dq = dq_next;
        continue;
      }

      emitted.push_back(quot);
      emitted_deg_sum += d;
      ++n;
      dq_prev = dq;
      dq = dq_next;

      std::optional<Poly> a;
      if (need_poly) a = Poly::FromCoeffs(k, quot);
      if (track_conv) {
        Poly pn = *a * *cp + *cp_prev;
        Poly qn = *a * *cq + *cq_prev;
        cp_prev = std::move(cp);
        cq_prev = std::move(cq);
        cp = std::move(pn);
        cq = std::move(qn);
      }
      if (track_mod) {
        const Poly a_mod = PolyDivMod(*a, *opts.track_mod).second;
        Poly next =
            PolyDivMod(a_mod * *qm + *qm_prev, *opts.track_mod).second;
        qm_prev = std::move(qm);
        qm = std::move(next);
      }

      CfDigitEvent ev;
      ev.index = n;
      ev.deg_a = d;
      ev.deg_q_prev = dq_prev;
      ev.deg_q = dq;
      ev.a = opts.materialize_digits ? &*a : nullptr;
      ev.q_mod = track_mod ? &*qm : nullptr;
      const bool keep = cb ? cb(ev) : true;

      if (track_conv && (rational->first * *cq - *cp * rational->second).IsZero())
        return CfStreamResult{CfStatus::kTerminated, *a0, n, dq, m};
      if (n >= opts.max_digits || dq >= opts.max_qdeg || !keep)
        return CfStreamResult{CfStatus::kBudgetReached, *a0, n, dq, m};
    }

    if (need_more) {
      if (src->max_prec() <= m)
        return CfStreamResult{CfStatus::kPrecisionExhausted, *a0, n, dq, m};
      target = std::max({2 * m, 2 * dq + hint_d + 2, m + 1});
    }
  }
}

CfExpansion CfExpand(SeriesSource* src, int max_digits, int max_qdeg) {
  std::vector<Poly> digits;
  CfStreamOptions opts;
  opts.max_digits = max_digits;
  opts.max_qdeg = max_qdeg;
  opts.materialize_digits = true;
  CfStreamResult r = CfStreamDigits(src, opts, [&](const CfDigitEvent& ev) {
    digits.push_back(*ev.a);
    return true;
  });
  CfConvergents cv = CfEval(r.a0, digits);
  return CfExpansion{r.a0,           std::move(digits), std::move(cv.p),
                     std::move(cv.q), r.status,          r.realized_prec};
}

CfRational CfExpandRational(const Poly& num, const Poly& den) {
  RequireSameField(num.field(), den.field());
  if (den.IsZero())
    Fail(ErrorKind::kDivisionByZeroPoly, "continued fraction of P/0");
  auto [a0, rem] = PolyDivMod(num, den);
  std::vector<Poly> digits;
  Poly u = den, v = rem;
  while (!v.IsZero()) {
    auto [quo, r2] = PolyDivMod(u, v);
    digits.push_back(quo);
    u = std::move(v);
    v = std::move(r2);
  }
  return CfRational{a0, std::move(digits)};
}

CfConvergents CfEval(const Poly& a0, const std::vector<Poly>& digits) {
  const FieldPtr& k = a0.field();
  CfConvergents out;
  Poly p_prev = Poly::Constant(k, 1), q_prev = Poly::Zero(k);
  Poly p = a0, q = Poly::Constant(k, 1);
  out.p.push_back(p);
  out.q.push_back(q);
  for (const Poly& a : digits) {
    RequireSameField(k, a.field());
    if (a.deg() < 1)
      Fail(ErrorKind::kMalformedDigits,
           "partial quotients must have degree >= 1, got " + a.Format());
    Poly pn = a * p + p_prev;
    Poly qn = a * q + q_prev;
    p_prev = std::move(p);
    q_prev = std::move(q);
    p = std::move(pn);
    q = std::move(qn);
    out.p.push_back(p);
    out.q.push_back(q);
  }
  return out;
}

ConvergentCheck IsConvergent(SeriesSource* src, const Poly& num,
                             const Poly& den) {
  RequireSameField(num.field(), den.field());
  RequireSameField(src->field(), den.field());
  if (den.IsZero())
    Fail(ErrorKind::kDivisionByZeroPoly, "P/0 cannot be a convergent");
  const FieldPtr& k = den.field();
  if (!num.IsZero() && !PolyGcd(num, den).IsOne())
    Fail(ErrorKind::kNotReduced, "num/den must be in lowest terms");
  if (num.IsZero() && den.deg() > 0)
    Fail(ErrorKind::kNotReduced, "num/den must be in lowest terms");
  const uint32_t w = k->Inv(den.leading());
  const Poly p_ref = num.ScaledBy(w);
  const Poly q_ref = den.ScaledBy(w);

  CfExpansion e = CfExpand(src, INT32_MAX / 2, den.deg() + 1);
  for (size_t i = 0; i < e.conv_q.size(); ++i) {
    const uint32_t wn = k->Inv(e.conv_q[i].leading());
    if (e.conv_q[i].ScaledBy(wn) == q_ref && e.conv_p[i].ScaledBy(wn) == p_ref)
      return ConvergentCheck{true, static_cast<int>(i)};
  }
  const int reached = e.conv_q.empty() ? 0 : e.conv_q.back().deg();
  if (e.status == CfStatus::kPrecisionExhausted && reached <= den.deg())
    Fail(ErrorKind::kPrecisionExhausted,
         "source precision ran out before deg Q passed the candidate");
  return ConvergentCheck{false, -1};
}

int NuOfDifference(SeriesSource* src, const Poly& num, const Poly& den,
                   int prec_limit) {
  RequireSameField(src->field(), den.field());
  if (den.IsZero())
    Fail(ErrorKind::kDivisionByZeroPoly, "difference against P/0");
  if (const auto rat = src->ExactRational()) {
    const Poly cross = rat->first * den - num * rat->second;
    if (cross.IsZero()) return kPosInfVal;
    return rat->second.deg() + den.deg() - cross.deg();
  }
  RationalSource ref(num, den);
  int m = std::min(prec_limit, std::max(2 * den.deg() + 4, 16));
  for (;;) {
    LaurentSeries diff = src->Realize(m) - ref.Realize(m);
    if (!diff.IsZeroToPrec()) return diff.nu();
    if (diff.prec() >= prec_limit || src->max_prec() <= diff.prec())
      Fail(ErrorKind::kPrecisionExhausted,
           "difference is zero to precision " + std::to_string(diff.prec()) +
               "; cannot certify its valuation");
    m = std::min(prec_limit, 2 * m);
  }
}

}  // namespace ffdioph
