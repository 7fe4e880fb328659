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

#include "doctest.h"
#include "ffdioph/errors.hpp"
#include "ffdioph/rng.hpp"

namespace ffdioph {
namespace {

Poly RandomPoly(const FieldPtr& k, Rng& rng, int max_deg) {
  int d = static_cast<int>(rng.Below(static_cast<uint32_t>(max_deg + 2)));
  std::vector<uint32_t> c;
  for (int i = 0; i < d; ++i) c.push_back(rng.Below(k->q()));
  return Poly::FromCoeffs(k, std::move(c));
}

TEST_CASE("parsing both grammars") {
  FieldPtr k2 = Field::MakeQ(2);
  Poly p = Poly::Parse(k2, "1,1,1");
  CHECK(p.deg() == 2);
  CHECK(p.Format() == "X^2+X+1");
  CHECK(Poly::Parse(k2, "X^2+X+1") == p);
  CHECK(Poly::Parse(k2, "x^2+x+1") == p);

  FieldPtr k3 = Field::MakeQ(3);
  Poly q = Poly::Parse(k3, "2*X^3+X+2");
  CHECK(q == Poly::Parse(k3, "2,1,0,2"));
  CHECK(q.Format() == "2X^3+X+2");

  CHECK(Poly::Parse(k2, "0").IsZero());
  CHECK(Poly::Parse(k2, "1").IsOne());
}

TEST_CASE("parsing rejects bad input") {
  FieldPtr k2 = Field::MakeQ(2);
  CHECK_THROWS_AS(Poly::Parse(k2, "2,1"), Error);    // coefficient >= q
  CHECK_THROWS_AS(Poly::Parse(k2, "X^"), Error);
  CHECK_THROWS_AS(Poly::Parse(k2, ""), Error);
  CHECK_THROWS_AS(Poly::Parse(k2, "Y+1"), Error);
}

TEST_CASE("degree and normalization") {
  FieldPtr k2 = Field::MakeQ(2);
  CHECK(Poly::Zero(k2).deg() == kNegInfDeg);
  // Trailing zero coefficients are trimmed on construction.
  CHECK(Poly::FromCoeffs(k2, {1, 1, 0, 0}).deg() == 1);
  CHECK(Poly::X(k2).deg() == 1);
  CHECK(Poly::X(k2).IsMonic());
}

TEST_CASE("division with remainder") {
  FieldPtr k2 = Field::MakeQ(2);
  Poly a = Poly::Parse(k2, "X^3+X+1");
  Poly b = Poly::Parse(k2, "X^2+1");
  auto [quot, rem] = PolyDivMod(a, b);
  CHECK(quot == Poly::X(k2));
  CHECK(rem == Poly::Constant(k2, 1));
  CHECK(quot * b + rem == a);
  CHECK_THROWS_AS(PolyDivMod(a, Poly::Zero(k2)), Error);
}

TEST_CASE("division identity on random pairs") {
  for (uint32_t q : {2u, 3u, 4u}) {
    FieldPtr k = Field::MakeQ(q);
    Rng rng(1000 + q);
    for (int it = 0; it < 200; ++it) {
      Poly a = RandomPoly(k, rng, 8);
      Poly b = RandomPoly(k, rng, 5);
      if (b.IsZero()) continue;
      auto [quot, rem] = PolyDivMod(a, b);
      CHECK(quot * b + rem == a);
      CHECK(rem.deg() < b.deg());
    }
  }
}

TEST_CASE("gcd and extended gcd") {
  FieldPtr k2 = Field::MakeQ(2);
  // (X+1)^2 = X^2+1 over GF(2); gcd with X^2+X = X(X+1) is X+1.
  Poly g = PolyGcd(Poly::Parse(k2, "X^2+1"), Poly::Parse(k2, "X^2+X"));
  CHECK(g == Poly::Parse(k2, "X+1"));
  CHECK(g.IsMonic());
  CHECK(PolyGcd(Poly::Zero(k2), Poly::Parse(k2, "X+1")) ==
        Poly::Parse(k2, "X+1"));
  CHECK_THROWS_AS(PolyGcd(Poly::Zero(k2), Poly::Zero(k2)), Error);

  for (uint32_t q : {2u, 3u}) {
    FieldPtr k = Field::MakeQ(q);
    Rng rng(77 + q);
    for (int it = 0; it < 100; ++it) {
      Poly a = RandomPoly(k, rng, 7);
      Poly b = RandomPoly(k, rng, 7);
      if (a.IsZero() && b.IsZero()) continue;
      PolyXgcd e = PolyGcdExt(a, b);
      CHECK(e.u * a + e.v * b == e.g);
      CHECK(e.g.IsMonic());
      CHECK(e.g == PolyGcd(a, b));
    }
  }
}

TEST_CASE("scaling helpers") {
  FieldPtr k3 = Field::MakeQ(3);
  Poly p = Poly::Parse(k3, "2X+1");
  CHECK(p.MonicScaled() == Poly::Parse(k3, "X+2"));
  CHECK(p.ScaledBy(0).IsZero());
  CHECK(p.TimesXPow(2) == Poly::Parse(k3, "2X^3+X^2"));
  CHECK_THROWS_AS(Poly::Zero(k3).MonicScaled(), Error);
}

TEST_CASE("cross field operations are rejected") {
  Poly a = Poly::X(Field::MakeQ(2));
  Poly b = Poly::X(Field::MakeQ(3));
  CHECK_THROWS_AS(a + b, Error);
  CHECK_THROWS_AS(a * b, Error);
}

}  // namespace
}  // namespace ffdioph
