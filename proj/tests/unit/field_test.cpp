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

#include "doctest.h"
#include "ffdioph/errors.hpp"

namespace ffdioph {
namespace {

TEST_CASE("prime field arithmetic, q = 2") {
  FieldPtr k = Field::MakeQ(2);
  CHECK(k->p() == 2);
  CHECK(k->e() == 1);
  CHECK(k->q() == 2);
  CHECK(k->Add(1, 1) == 0);
  CHECK(k->Add(0, 1) == 1);
  CHECK(k->Mul(1, 1) == 1);
  CHECK(k->Neg(1) == 1);
  CHECK(k->Inv(1) == 1);
  CHECK_THROWS_AS(k->Inv(0), Error);
}

TEST_CASE("prime field arithmetic, q = 3") {
  FieldPtr k = Field::MakeQ(3);
  CHECK(k->Add(2, 2) == 1);
  CHECK(k->Sub(0, 1) == 2);
  CHECK(k->Mul(2, 2) == 1);
  CHECK(k->Neg(1) == 2);
  CHECK(k->Inv(2) == 2);
  CHECK(k->Div(1, 2) == 2);
}

TEST_CASE("extension field axioms") {
  // In GF(4) every nonzero element has multiplicative order dividing 3, and
  // the field has characteristic 2.
  FieldPtr k4 = Field::MakeQ(4);
  CHECK(k4->p() == 2);
  CHECK(k4->e() == 2);
  for (uint32_t a = 1; a < 4; ++a) {
    CHECK(k4->Mul(a, k4->Inv(a)) == 1);
    CHECK(k4->Mul(a, k4->Mul(a, a)) == 1);
    CHECK(k4->Add(a, a) == 0);
  }

  // GF(9): Fermat a^(q-1) = 1, and the additive group has exponent 3.
  FieldPtr k9 = Field::MakeQ(9);
  for (uint32_t a = 1; a < 9; ++a) {
    uint32_t pow = 1;
    for (int i = 0; i < 8; ++i) pow = k9->Mul(pow, a);
    CHECK(pow == 1);
    CHECK(k9->Add(a, k9->Add(a, a)) == 0);
  }
}

TEST_CASE("field construction rejects non prime powers") {
  CHECK_THROWS_AS(Field::MakeQ(1), Error);
  CHECK_THROWS_AS(Field::MakeQ(6), Error);
  CHECK_THROWS_AS(Field::MakeQ(12), Error);
}

TEST_CASE("associativity and distributivity sampled over GF(8)") {
  FieldPtr k = Field::MakeQ(8);
  for (uint32_t a = 0; a < 8; ++a)
    for (uint32_t b = 0; b < 8; ++b)
      for (uint32_t c = 0; c < 8; ++c) {
        CHECK(k->Mul(a, k->Mul(b, c)) == k->Mul(k->Mul(a, b), c));
        CHECK(k->Mul(a, k->Add(b, c)) == k->Add(k->Mul(a, b), k->Mul(a, c)));
      }
}

TEST_CASE("SameAs distinguishes fields") {
  FieldPtr a = Field::MakeQ(2);
  FieldPtr b = Field::MakeQ(2);
  FieldPtr c = Field::MakeQ(3);
  CHECK(a->SameAs(*b));
  CHECK(!a->SameAs(*c));
}

}  // namespace
}  // namespace ffdioph
