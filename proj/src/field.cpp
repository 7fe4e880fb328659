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

#include "ffdioph/field.hpp"

#include <algorithm>
#include <sstream>

#include "ffdioph/rng.hpp"

namespace ffdioph {
namespace {

bool IsPrime(uint32_t n) {
  if (n < 2) return false;
  for (uint32_t d = 2; static_cast<uint64_t>(d) * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// Dense polynomial arithmetic over F_p on small coefficient vectors
// (ascending, trailing zeros allowed); used only for modulus handling.
using Fp = std::vector<uint32_t>;

int FpDeg(const Fp& a) {
  for (int i = static_cast<int>(a.size()) - 1; i >= 0; --i)
    if (a[i] != 0) return i;
  return -1;
}

Fp FpMod(Fp a, const Fp& m, uint32_t p) {
  const int dm = FpDeg(m);
  const uint32_t lead_inv = [&] {
    // inverse of m's leading coefficient mod p by Fermat
    uint32_t base = m[dm], result = 1;
    for (uint32_t k = p - 2; k > 0; k >>= 1) {
      if (k & 1) result = static_cast<uint64_t>(result) * base % p;
      base = static_cast<uint64_t>(base) * base % p;
    }
    return result;
  }();
  for (int i = FpDeg(a); i >= dm; --i) {
    if (a[i] == 0) continue;
    const uint32_t c = static_cast<uint64_t>(a[i]) * lead_inv % p;
    for (int j = 0; j <= dm; ++j) {
      const uint32_t sub = static_cast<uint64_t>(c) * m[j] % p;
      a[i - dm + j] = (a[i - dm + j] + p - sub) % p;
    }
  }
  a.resize(dm);
  return a;
}

Fp FpMulMod(const Fp& a, const Fp& b, const Fp& m, uint32_t p) {
  Fp r(a.size() + b.size(), 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j)
      r[i + j] = (r[i + j] + static_cast<uint64_t>(a[i]) * b[j]) % p;
  }
  return FpMod(std::move(r), m, p);
}

bool FpIsZero(const Fp& a) { return FpDeg(a) < 0; }

// Remainder of a by b (b nonzero), plain schoolbook.
Fp FpRem(Fp a, const Fp& b, uint32_t p) { return FpMod(std::move(a), b, p); }

// Exhaustive irreducibility test: no monic factor of degree 1..e/2.
bool IsIrreducible(const Fp& m, uint32_t p, uint32_t e) {
  for (uint32_t d = 1; 2 * d <= e; ++d) {
    // enumerate monic polynomials of degree d by integer encoding of the
    // lower d coefficients
    uint64_t count = 1;
    for (uint32_t i = 0; i < d; ++i) count *= p;
    for (uint64_t enc = 0; enc < count; ++enc) {
      Fp f(d + 1, 0);
      uint64_t v = enc;
      for (uint32_t i = 0; i < d; ++i) {
        f[i] = static_cast<uint32_t>(v % p);
        v /= p;
      }
      f[d] = 1;
      if (FpIsZero(FpRem(m, f, p))) return false;
    }
  }
  return true;
}

}  // namespace

Field::Field(uint32_t p, uint32_t e, std::vector<uint32_t> modulus)
    : p_(p), e_(e), modulus_(std::move(modulus)) {
  uint64_t q = 1;
  for (uint32_t i = 0; i < e; ++i) {
    q *= p;
    if (q > (uint64_t{1} << 32))
      Fail(ErrorKind::kInvalidModulus, "q = p^e does not fit in 32 bits");
  }
  q_ = static_cast<uint32_t>(q);
}

FieldPtr Field::Make(uint32_t p, uint32_t e,
                     std::optional<std::vector<uint32_t>> modulus) {
  if (!IsPrime(p)) Fail(ErrorKind::kNonPrimeP, "p is not prime");
  if (e < 1 || e > 8)
    Fail(ErrorKind::kInvalidModulus, "extension degree e must be in [1, 8]");

  std::vector<uint32_t> mod;
  if (e == 1) {
    if (modulus.has_value())
      Fail(ErrorKind::kInvalidModulus, "modulus must be absent when e = 1");
  } else if (modulus.has_value()) {
    mod = *modulus;
    if (FpDeg(mod) != static_cast<int>(e) || mod.back() != 1)
      Fail(ErrorKind::kInvalidModulus, "modulus must be monic of degree e");
    for (uint32_t c : mod)
      if (c >= p)
        Fail(ErrorKind::kCoefficientOutOfRange,
             "modulus coefficient not in [0, p)");
    if (!IsIrreducible(mod, p, e))
      Fail(ErrorKind::kReducibleModulus, "modulus is reducible");
  } else {
    // smallest irreducible monic polynomial of degree e, by integer encoding
    uint64_t count = 1;
    for (uint32_t i = 0; i < e; ++i) count *= p;
    for (uint64_t enc = 0; enc < count; ++enc) {
      Fp f(e + 1, 0);
      uint64_t v = enc;
      for (uint32_t i = 0; i < e; ++i) {
        f[i] = static_cast<uint32_t>(v % p);
        v /= p;
      }
      f[e] = 1;
      if (IsIrreducible(f, p, e)) {
        mod = f;
        break;
      }
    }
    if (mod.empty())
      Fail(ErrorKind::kInvalidModulus, "no irreducible modulus found");
  }

  auto field = std::shared_ptr<Field>(new Field(p, e, std::move(mod)));
  field->BuildTables();
  field->VerifyAxioms();
  return field;
}

FieldPtr Field::MakeQ(uint32_t q) {
  if (q < 2) Fail(ErrorKind::kNonPrimeP, "q must be a prime power >= 2");
  uint32_t p = q;
  for (uint32_t d = 2; static_cast<uint64_t>(d) * d <= q; ++d) {
    if (q % d == 0) {
      p = d;
      break;
    }
  }
  uint32_t e = 0;
  uint64_t v = 1;
  while (v < q) {
    v *= p;
    ++e;
  }
  if (v != q) Fail(ErrorKind::kNonPrimeP, "q is not a prime power");
  return Make(p, e);
}

uint32_t Field::AddRaw(uint32_t a, uint32_t b) const {
  if (e_ == 1) return (a + b) % p_;
  uint32_t r = 0, mul = 1;
  for (uint32_t i = 0; i < e_; ++i) {
    r += (a % p_ + b % p_) % p_ * mul;
    a /= p_;
    b /= p_;
    mul *= p_;
  }
  return r;
}

uint32_t Field::MulRaw(uint32_t a, uint32_t b) const {
  if (e_ == 1)
    return static_cast<uint32_t>(static_cast<uint64_t>(a) * b % p_);
  Fp fa(e_, 0), fb(e_, 0);
  for (uint32_t i = 0; i < e_; ++i) {
    fa[i] = a % p_;
    a /= p_;
    fb[i] = b % p_;
    b /= p_;
  }
  Fp fr = FpMulMod(fa, fb, modulus_, p_);
  uint32_t r = 0, mul = 1;
  for (uint32_t i = 0; i < e_; ++i) {
    r += (i < fr.size() ? fr[i] : 0) * mul;
    mul *= p_;
  }
  return r;
}

uint32_t Field::InvRaw(uint32_t a) const {
  // a^(q-2) by square and multiply; fine at construction scale
  uint32_t result = 1, base = a;
  for (uint32_t k = q_ - 2; k > 0; k >>= 1) {
    if (k & 1) result = MulRaw(result, base);
    base = MulRaw(base, base);
  }
  return result;
}

void Field::BuildTables() {
  if (q_ > kTableLimit) return;
  tabled_ = true;
  add_table_.resize(static_cast<size_t>(q_) * q_);
  mul_table_.resize(static_cast<size_t>(q_) * q_);
  inv_table_.assign(q_, 0);
  for (uint32_t a = 0; a < q_; ++a)
    for (uint32_t b = 0; b < q_; ++b) {
      add_table_[static_cast<size_t>(a) * q_ + b] = AddRaw(a, b);
      mul_table_[static_cast<size_t>(a) * q_ + b] = MulRaw(a, b);
    }
  for (uint32_t a = 1; a < q_; ++a) inv_table_[a] = InvRaw(a);
}

uint32_t Field::Add(uint32_t a, uint32_t b) const {
  return tabled_ ? add_table_[static_cast<size_t>(a) * q_ + b] : AddRaw(a, b);
}

uint32_t Field::Neg(uint32_t a) const {
  if (e_ == 1) return a == 0 ? 0 : p_ - a;
  uint32_t r = 0, mul = 1;
  for (uint32_t i = 0; i < e_; ++i) {
    uint32_t d = a % p_;
    r += (d == 0 ? 0 : p_ - d) * mul;
    a /= p_;
    mul *= p_;
  }
  return r;
}

uint32_t Field::Sub(uint32_t a, uint32_t b) const { return Add(a, Neg(b)); }

uint32_t Field::Mul(uint32_t a, uint32_t b) const {
  return tabled_ ? mul_table_[static_cast<size_t>(a) * q_ + b] : MulRaw(a, b);
}

uint32_t Field::Inv(uint32_t a) const {
  if (a == 0) Fail(ErrorKind::kZeroInverse, "inverse of zero field element");
  return tabled_ ? inv_table_[a] : InvRaw(a);
}

void Field::VerifyAxioms() const {
  auto check_triple = [&](uint32_t a, uint32_t b, uint32_t c) {
    if (Mul(a, Mul(b, c)) != Mul(Mul(a, b), c))
      Fail(ErrorKind::kInvalidModulus, "multiplication not associative");
    if (Mul(a, Add(b, c)) != Add(Mul(a, b), Mul(a, c)))
      Fail(ErrorKind::kInvalidModulus, "distributivity fails");
  };
  if (q_ <= 9) {
    for (uint32_t a = 0; a < q_; ++a)
      for (uint32_t b = 0; b < q_; ++b)
        for (uint32_t c = 0; c < q_; ++c) check_triple(a, b, c);
  } else if (q_ <= 16) {
    Rng rng(0x66646471u);  // fixed internal seed: the check must be stable
    for (int i = 0; i < 4096; ++i)
      check_triple(rng.Below(q_), rng.Below(q_), rng.Below(q_));
  }
  if (q_ <= kTableLimit) {
    for (uint32_t a = 1; a < q_; ++a)
      if (Mul(a, Inv(a)) != 1)
        Fail(ErrorKind::kInvalidModulus, "inverse check fails");
  }
}

std::string Field::Describe() const {
  std::ostringstream os;
  os << "F_" << q_;
  if (e_ > 1) {
    os << " = F_" << p_ << "[t]/(";
    bool first = true;
    for (int i = static_cast<int>(e_); i >= 0; --i) {
      uint32_t c = static_cast<size_t>(i) < modulus_.size() ? modulus_[i] : 0;
      if (c == 0) continue;
      if (!first) os << "+";
      if (i == 0 || c != 1) os << c;
      if (i >= 1) os << "t";
      if (i >= 2) os << "^" << i;
      first = false;
    }
    os << ")";
  }
  return os.str();
}

}  // namespace ffdioph
