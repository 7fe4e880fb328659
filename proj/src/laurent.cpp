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

#include "ffdioph/laurent.hpp"

#include <algorithm>
#include <sstream>

namespace ffdioph {

LaurentSeries LaurentSeries::Normalize(FieldPtr k, int lead,
                                       std::vector<uint32_t> coeffs,
                                       int prec) {
  size_t first = 0;
  while (first < coeffs.size() && coeffs[first] == 0) ++first;
  if (first == coeffs.size())
    return LaurentSeries(std::move(k), kPosInfVal, prec, {});
  coeffs.erase(coeffs.begin(), coeffs.begin() + first);
  return LaurentSeries(std::move(k), lead + static_cast<int>(first), prec,
                       std::move(coeffs));
}

LaurentSeries LaurentSeries::Zero(FieldPtr k, int prec) {
  return LaurentSeries(std::move(k), kPosInfVal, prec, {});
}

LaurentSeries LaurentSeries::FromCoeffWindow(FieldPtr k, int lead,
                                             std::vector<uint32_t> coeffs) {
  for (uint32_t c : coeffs)
    if (c >= k->q())
      Fail(ErrorKind::kCoefficientOutOfRange, "coefficient not in [0, q)");
  const int prec = lead + static_cast<int>(coeffs.size());
  return Normalize(std::move(k), lead, std::move(coeffs), prec);
}

LaurentSeries LaurentSeries::FromPoly(const Poly& p, int prec) {
  if (p.IsZero()) return Zero(p.field(), prec);
  const int lead = -p.deg();
  std::vector<uint32_t> coeffs;
  for (int i = lead; i < prec; ++i)
    coeffs.push_back(i <= 0 ? p.coeff(-i) : 0);
  if (coeffs.empty()) return Zero(p.field(), prec);
  return Normalize(p.field(), lead, std::move(coeffs), prec);
}

uint32_t LaurentSeries::coeff(int i) const {
  if (i >= prec_)
    Fail(ErrorKind::kPrecisionExhausted,
         "coefficient at index " + std::to_string(i) +
             " is beyond certified precision " + std::to_string(prec_));
  if (IsZeroToPrec() || i < nu_) return 0;
  return c_[static_cast<size_t>(i - nu_)];
}

LaurentSeries LaurentSeries::Truncated(int new_prec) const {
  if (new_prec > prec_)
    Fail(ErrorKind::kPrecisionExhausted,
         "cannot raise precision by truncation");
  if (IsZeroToPrec() || nu_ >= new_prec)
    return LaurentSeries(k_, kPosInfVal, new_prec, {});
  std::vector<uint32_t> coeffs(c_.begin(),
                               c_.begin() + (new_prec - nu_));
  return LaurentSeries(k_, nu_, new_prec, std::move(coeffs));
}

Poly LaurentSeries::PolynomialPart() const {
  if (prec_ < 1)
    Fail(ErrorKind::kPrecisionExhausted,
         "polynomial part needs coefficients certified through index 0");
  if (IsZeroToPrec() || nu_ > 0) return Poly::Zero(k_);
  std::vector<uint32_t> coeffs(static_cast<size_t>(-nu_) + 1, 0);
  for (int i = nu_; i <= 0; ++i) coeffs[static_cast<size_t>(-i)] = coeff(i);
  return Poly::FromCoeffs(k_, std::move(coeffs));
}

LaurentSeries LaurentSeries::operator+(const LaurentSeries& o) const {
  RequireSameField(k_, o.k_);
  const int prec = std::min(prec_, o.prec_);
  const int lead = std::min(EffNu(), o.EffNu());
  if (lead >= prec) return Zero(k_, prec);
  std::vector<uint32_t> coeffs(static_cast<size_t>(prec - lead), 0);
  for (int i = lead; i < prec; ++i) {
    const uint32_t a = (IsZeroToPrec() || i < nu_)
                           ? 0
                           : c_[static_cast<size_t>(i - nu_)];
    const uint32_t b = (o.IsZeroToPrec() || i < o.nu_)
                           ? 0
                           : o.c_[static_cast<size_t>(i - o.nu_)];
    coeffs[static_cast<size_t>(i - lead)] = k_->Add(a, b);
  }
  return Normalize(k_, lead, std::move(coeffs), prec);
}

LaurentSeries LaurentSeries::operator-() const {
  std::vector<uint32_t> coeffs(c_.size());
  for (size_t j = 0; j < c_.size(); ++j) coeffs[j] = k_->Neg(c_[j]);
  return LaurentSeries(k_, nu_, prec_, std::move(coeffs));
}

LaurentSeries LaurentSeries::operator-(const LaurentSeries& o) const {
  return *this + (-o);
}

LaurentSeries LaurentSeries::operator*(const LaurentSeries& o) const {
  RequireSameField(k_, o.k_);
  // c_i needs every pair (j, i-j) with j >= nu_f and i-j >= nu_g certified,
  // which caps the certified range at min(prec_f + nu_g, prec_g + nu_f).
  const int prec =
      std::min(ValAdd(prec_, o.EffNu()), ValAdd(o.prec_, EffNu()));
  const int cprec = std::min(prec, kPosInfVal / 2);
  const int lead = ValAdd(EffNu(), o.EffNu());
  if (IsZeroToPrec() || o.IsZeroToPrec() || lead >= cprec)
    return Zero(k_, cprec);
  std::vector<uint32_t> coeffs(static_cast<size_t>(cprec - lead), 0);
  for (size_t ja = 0; ja < c_.size(); ++ja) {
    if (c_[ja] == 0) continue;
    const int ia = nu_ + static_cast<int>(ja);
    for (size_t jb = 0; jb < o.c_.size(); ++jb) {
      const int i = ia + o.nu_ + static_cast<int>(jb);
      if (i >= cprec) break;
      coeffs[static_cast<size_t>(i - lead)] = k_->Add(
          coeffs[static_cast<size_t>(i - lead)], k_->Mul(c_[ja], o.c_[jb]));
    }
  }
  return Normalize(k_, lead, std::move(coeffs), cprec);
}

LaurentSeries LaurentSeries::Inverse() const {
  if (IsZeroToPrec())
    Fail(ErrorKind::kZeroInverse,
         "cannot invert a series that is zero to its certified precision");
  // Write f = X^-nu * F(X^-1) with F(0) != 0 and invert the power series F
  // term by term; m certified coefficients of f yield m of 1/f.
  const size_t m = static_cast<size_t>(prec_ - nu_);
  std::vector<uint32_t> g(m, 0);
  const uint32_t lead_inv = k_->Inv(c_[0]);
  g[0] = lead_inv;
  for (size_t s = 1; s < m; ++s) {
    uint32_t acc = 0;
    for (size_t r = 1; r <= s; ++r) {
      const uint32_t fr = r < c_.size() ? c_[r] : 0;
      if (fr != 0) acc = k_->Add(acc, k_->Mul(fr, g[s - r]));
    }
    g[s] = k_->Neg(k_->Mul(lead_inv, acc));
  }
  return Normalize(k_, -nu_, std::move(g), -nu_ + static_cast<int>(m));
}

LaurentSeries LaurentSeries::operator/(const LaurentSeries& o) const {
  return *this * o.Inverse();
}

bool LaurentSeries::operator==(const LaurentSeries& o) const {
  return k_->SameAs(*o.k_) && nu_ == o.nu_ && prec_ == o.prec_ && c_ == o.c_;
}

std::string LaurentSeries::Format(int max_terms) const {
  std::ostringstream os;
  int shown = 0;
  bool first = true;
  if (!IsZeroToPrec()) {
    for (int i = nu_; i < prec_ && shown < max_terms; ++i) {
      const uint32_t c = coeff(i);
      if (c == 0) continue;
      if (!first) os << " + ";
      if (i == 0) {
        os << c;
      } else {
        if (c != 1) os << c << "*";
        os << "X";
        if (i != -1) os << "^" << -i;
      }
      first = false;
      ++shown;
    }
  }
  if (first) os << "0";
  os << " + O(X^" << -prec_ << ")";
  return os.str();
}

// ---------------------------------------------------------------------------
// Sources

RationalSource::RationalSource(Poly num, Poly den)
    : num_(std::move(num)), den_(std::move(den)) {
  RequireSameField(num_.field(), den_.field());
  if (den_.IsZero())
    Fail(ErrorKind::kDivisionByZeroPoly, "rational source with denominator 0");
}

LaurentSeries RationalSource::Realize(int prec) {
  if (num_.IsZero()) return LaurentSeries::Zero(field(), prec);
  const int nu = den_.deg() - num_.deg();
  if (prec <= nu) return LaurentSeries::Zero(field(), prec);
  // Multiplying by X^s turns the first coefficients of num/den into the
  // polynomial quotient of num * X^s by den (the remainder only carries
  // negative powers), so one exact division realizes the window.
  const int s = prec - 1;
  auto [quo, rem] = PolyDivMod(num_.TimesXPow(s), den_);
  (void)rem;
  std::vector<uint32_t> coeffs(static_cast<size_t>(prec - nu), 0);
  for (int i = nu; i < prec; ++i)
    coeffs[static_cast<size_t>(i - nu)] = quo.coeff(s - i);
  return LaurentSeries::FromCoeffWindow(field(), nu, std::move(coeffs));
}

LaurentSeries StreamSource::Realize(int prec) {
  const uint32_t q = k_->q();
  while (static_cast<int>(cached_.size()) < prec)
    cached_.push_back(rng_.Below(q));
  if (prec <= 0) return LaurentSeries::Zero(k_, prec);
  std::vector<uint32_t> coeffs(cached_.begin(), cached_.begin() + prec);
  return LaurentSeries::FromCoeffWindow(k_, 0, std::move(coeffs));
}

LaurentSeries WindowSource::Realize(int prec) {
  if (prec >= w_.prec()) return w_;
  return w_.Truncated(prec);
}

}  // namespace ffdioph
