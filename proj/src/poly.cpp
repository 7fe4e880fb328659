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

#include "ffdioph/poly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace ffdioph {

namespace {
void TrimTrailingZeros(std::vector<uint32_t>* c) {
  while (!c->empty() && c->back() == 0) c->pop_back();
}
}  // namespace

Poly Poly::Constant(FieldPtr k, uint32_t c) {
  if (c >= k->q())
    Fail(ErrorKind::kCoefficientOutOfRange, "constant not in [0, q)");
  std::vector<uint32_t> v;
  if (c != 0) v.push_back(c);
  return Poly(std::move(k), std::move(v));
}

Poly Poly::FromCoeffs(FieldPtr k, std::vector<uint32_t> coeffs) {
  for (uint32_t c : coeffs)
    if (c >= k->q())
      Fail(ErrorKind::kCoefficientOutOfRange, "coefficient not in [0, q)");
  TrimTrailingZeros(&coeffs);
  return Poly(std::move(k), std::move(coeffs));
}

Poly Poly::operator+(const Poly& o) const {
  RequireSameField(k_, o.k_);
  std::vector<uint32_t> r(std::max(c_.size(), o.c_.size()), 0);
  for (size_t i = 0; i < r.size(); ++i)
    r[i] = k_->Add(coeff(static_cast<int>(i)), o.coeff(static_cast<int>(i)));
  TrimTrailingZeros(&r);
  return Poly(k_, std::move(r));
}

Poly Poly::operator-() const {
  std::vector<uint32_t> r(c_.size());
  for (size_t i = 0; i < c_.size(); ++i) r[i] = k_->Neg(c_[i]);
  return Poly(k_, std::move(r));
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator*(const Poly& o) const {
  RequireSameField(k_, o.k_);
  if (IsZero() || o.IsZero()) return Zero(k_);
  std::vector<uint32_t> r(c_.size() + o.c_.size() - 1, 0);
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (size_t j = 0; j < o.c_.size(); ++j)
      r[i + j] = k_->Add(r[i + j], k_->Mul(c_[i], o.c_[j]));
  }
  TrimTrailingZeros(&r);
  return Poly(k_, std::move(r));
}

Poly Poly::ScaledBy(uint32_t c) const {
  if (c >= k_->q())
    Fail(ErrorKind::kCoefficientOutOfRange, "scalar not in [0, q)");
  if (c == 0) return Zero(k_);
  std::vector<uint32_t> r(c_.size());
  for (size_t i = 0; i < c_.size(); ++i) r[i] = k_->Mul(c_[i], c);
  return Poly(k_, std::move(r));
}

Poly Poly::TimesXPow(int k) const {
  if (IsZero()) return *this;
  std::vector<uint32_t> r(c_.size() + k, 0);
  std::copy(c_.begin(), c_.end(), r.begin() + k);
  return Poly(k_, std::move(r));
}

Poly Poly::MonicScaled() const {
  if (IsZero())
    Fail(ErrorKind::kDivisionByZeroPoly, "monic normalization of zero");
  return ScaledBy(k_->Inv(leading()));
}

std::pair<Poly, Poly> PolyDivMod(const Poly& a, const Poly& b) {
  RequireSameField(a.field(), b.field());
  if (b.IsZero())
    Fail(ErrorKind::kDivisionByZeroPoly, "polynomial division by zero");
  const FieldPtr& k = a.field();
  if (a.deg() < b.deg()) return {Poly::Zero(k), a};
  std::vector<uint32_t> rem(a.coeffs());
  std::vector<uint32_t> quo(a.deg() - b.deg() + 1, 0);
  const uint32_t lead_inv = k->Inv(b.leading());
  for (int i = a.deg(); i >= b.deg(); --i) {
    const uint32_t c = k->Mul(rem[i], lead_inv);
    if (c == 0) continue;
    quo[i - b.deg()] = c;
    for (int j = 0; j <= b.deg(); ++j)
      rem[i - b.deg() + j] =
          k->Sub(rem[i - b.deg() + j], k->Mul(c, b.coeff(j)));
  }
  return {Poly::FromCoeffs(k, std::move(quo)), Poly::FromCoeffs(k, std::move(rem))};
}

PolyXgcd PolyGcdExt(const Poly& a, const Poly& b) {
  RequireSameField(a.field(), b.field());
  if (a.IsZero() && b.IsZero())
    Fail(ErrorKind::kBothZero, "gcd(0, 0) is undefined");
  const FieldPtr& k = a.field();
  // Iterative extended Euclid: (g, u, v) with u*a + v*b = g, g monic.
  Poly r0 = a, r1 = b;
  Poly u0 = Poly::Constant(k, 1), u1 = Poly::Zero(k);
  Poly v0 = Poly::Zero(k), v1 = Poly::Constant(k, 1);
  while (!r1.IsZero()) {
    auto [q, r2] = PolyDivMod(r0, r1);
    Poly u2 = u0 - q * u1;
    Poly v2 = v0 - q * v1;
    r0 = std::move(r1);
    r1 = std::move(r2);
    u0 = std::move(u1);
    u1 = std::move(u2);
    v0 = std::move(v1);
    v1 = std::move(v2);
  }
  const uint32_t lead_inv = k->Inv(r0.leading());
  return PolyXgcd{r0.ScaledBy(lead_inv), u0.ScaledBy(lead_inv),
                  v0.ScaledBy(lead_inv)};
}

Poly PolyGcd(const Poly& a, const Poly& b) {
  if (a.IsZero() && b.IsZero())
    Fail(ErrorKind::kBothZero, "gcd(0, 0) is undefined");
  Poly r0 = a, r1 = b;
  while (!r1.IsZero()) {
    auto [q, r2] = PolyDivMod(r0, r1);
    (void)q;
    r0 = std::move(r1);
    r1 = std::move(r2);
  }
  return r0.MonicScaled();
}

// ---------------------------------------------------------------------------
// Text I/O

namespace {

[[noreturn]] void SyntaxFail(std::string_view text, const std::string& why) {
  Fail(ErrorKind::kSyntaxError,
       "cannot parse polynomial \"" + std::string(text) + "\": " + why);
}

uint64_t ParseUint(std::string_view text, size_t* i, std::string_view whole) {
  if (*i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[*i])))
    SyntaxFail(whole, "expected an integer");
  uint64_t v = 0;
  while (*i < text.size() && std::isdigit(static_cast<unsigned char>(text[*i]))) {
    v = v * 10 + (text[*i] - '0');
    if (v > (uint64_t{1} << 40)) SyntaxFail(whole, "integer too large");
    ++(*i);
  }
  return v;
}

Poly ParseList(const FieldPtr& k, std::string_view text) {
  std::vector<uint32_t> coeffs;
  size_t i = 0;
  while (true) {
    while (i < text.size() && text[i] == ' ') ++i;
    uint64_t v = ParseUint(text, &i, text);
    if (v >= k->q())
      Fail(ErrorKind::kCoefficientOutOfRange,
           "coefficient " + std::to_string(v) + " not in [0, q)");
    coeffs.push_back(static_cast<uint32_t>(v));
    while (i < text.size() && text[i] == ' ') ++i;
    if (i == text.size()) break;
    if (text[i] != ',') SyntaxFail(text, "expected ','");
    ++i;
  }
  return Poly::FromCoeffs(k, std::move(coeffs));
}

Poly ParseHuman(const FieldPtr& k, std::string_view text) {
  // term := [coeff]['*']('X'|'x')['^' exp] | coeff ; terms joined by +/-
  Poly acc = Poly::Zero(k);
  size_t i = 0;
  bool first = true;
  while (true) {
    while (i < text.size() && text[i] == ' ') ++i;
    bool negate = false;
    if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
      negate = text[i] == '-';
      ++i;
    } else if (!first) {
      if (i >= text.size()) break;
      SyntaxFail(text, "expected '+' or '-' between terms");
    }
    while (i < text.size() && text[i] == ' ') ++i;
    if (i >= text.size()) SyntaxFail(text, "dangling operator");

    uint32_t coeff = 1;
    bool saw_coeff = false;
    if (std::isdigit(static_cast<unsigned char>(text[i]))) {
      uint64_t v = ParseUint(text, &i, text);
      if (v >= k->q())
        Fail(ErrorKind::kCoefficientOutOfRange,
             "coefficient " + std::to_string(v) + " not in [0, q)");
      coeff = static_cast<uint32_t>(v);
      saw_coeff = true;
      if (i < text.size() && text[i] == '*') ++i;
    }
    int exp = 0;
    if (i < text.size() && (text[i] == 'X' || text[i] == 'x')) {
      ++i;
      exp = 1;
      if (i < text.size() && text[i] == '^') {
        ++i;
        uint64_t v = ParseUint(text, &i, text);
        if (v > 4096) SyntaxFail(text, "exponent too large");
        exp = static_cast<int>(v);
      }
    } else if (!saw_coeff) {
      SyntaxFail(text, "expected a term");
    }
    Poly term = Poly::Constant(k, coeff).TimesXPow(exp);
    acc = negate ? acc - term : acc + term;
    first = false;
    while (i < text.size() && text[i] == ' ') ++i;
    if (i >= text.size()) break;
  }
  return acc;
}

}  // namespace

Poly Poly::Parse(FieldPtr k, std::string_view text) {
  size_t a = text.find_first_not_of(' ');
  size_t b = text.find_last_not_of(' ');
  if (a == std::string_view::npos) SyntaxFail(text, "empty input");
  std::string_view t = text.substr(a, b - a + 1);
  const bool has_x = t.find('X') != std::string_view::npos ||
                     t.find('x') != std::string_view::npos;
  if (has_x) return ParseHuman(k, t);
  return ParseList(k, t);
}

std::string Poly::Format() const {
  if (IsZero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = deg(); i >= 0; --i) {
    const uint32_t c = coeff(i);
    if (c == 0) continue;
    if (!first) os << "+";
    if (i == 0) {
      os << c;
    } else {
      if (c != 1) os << c;
      os << "X";
      if (i > 1) os << "^" << i;
    }
    first = false;
  }
  return os.str();
}

}  // namespace ffdioph
