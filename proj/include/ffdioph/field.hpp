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

#ifndef FFDIOPH_FIELD_HPP_
#define FFDIOPH_FIELD_HPP_

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ffdioph/errors.hpp"

namespace ffdioph {

class Field;
using FieldPtr = std::shared_ptr<const Field>;

// F_q with q = p^e, e <= 8.  Elements are encoded as integers in [0, q):
// the element sum_i d_i t^i (polynomial basis mod the modulus) is encoded as
// sum_i d_i p^i.  For e = 1 the encoding is the residue itself.
//
// Construction verifies p prime, the modulus monic of degree e and irreducible
// (exhaustive factor search), and — because the whole artifact leans on exact
// arithmetic — checks the field axioms on the finished tables: fully for
// q <= 9, on sampled triples for q <= 16.
class Field {
 public:
  // modulus: ascending coefficients over F_p, length e+1, monic; must be
  // absent when e == 1.  When absent and e > 1 the smallest irreducible
  // (by the integer encoding sum c_i p^i) monic polynomial of degree e is
  // selected.
  static FieldPtr Make(uint32_t p, uint32_t e = 1,
                       std::optional<std::vector<uint32_t>> modulus = {});

  // Convenience: factor q = p^e (q a prime power) and call Make.
  static FieldPtr MakeQ(uint32_t q);

  uint32_t p() const { return p_; }
  uint32_t e() const { return e_; }
  uint32_t q() const { return q_; }
  const std::vector<uint32_t>& modulus() const { return modulus_; }

  uint32_t Add(uint32_t a, uint32_t b) const;
  uint32_t Sub(uint32_t a, uint32_t b) const;
  uint32_t Neg(uint32_t a) const;
  uint32_t Mul(uint32_t a, uint32_t b) const;
  uint32_t Inv(uint32_t a) const;  // kZeroInverse on a == 0
  uint32_t Div(uint32_t a, uint32_t b) const { return Mul(a, Inv(b)); }

  bool SameAs(const Field& other) const {
    return p_ == other.p_ && e_ == other.e_ && modulus_ == other.modulus_;
  }

  std::string Describe() const;

 private:
  Field(uint32_t p, uint32_t e, std::vector<uint32_t> modulus);

  uint32_t AddRaw(uint32_t a, uint32_t b) const;
  uint32_t MulRaw(uint32_t a, uint32_t b) const;
  uint32_t InvRaw(uint32_t a) const;
  void BuildTables();
  void VerifyAxioms() const;

  uint32_t p_, e_, q_;
  std::vector<uint32_t> modulus_;  // empty for e == 1
  bool tabled_ = false;            // q <= kTableLimit
  std::vector<uint32_t> add_table_, mul_table_, inv_table_;

  static constexpr uint32_t kTableLimit = 256;
};

// Throws kFieldMismatch unless both handles describe the same field.
inline void RequireSameField(const FieldPtr& a, const FieldPtr& b) {
  if (!a || !b || !a->SameAs(*b))
    Fail(ErrorKind::kFieldMismatch, "operands belong to different fields");
}

}  // namespace ffdioph

#endif  // FFDIOPH_FIELD_HPP_
