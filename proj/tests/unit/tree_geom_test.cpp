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

#include "ffdioph/tree_geom.hpp"

#include <algorithm>
#include <utility>
#include <vector>

#include "doctest.h"
#include "ffdioph/contfrac.hpp"
#include "ffdioph/errors.hpp"
#include "ffdioph/rng.hpp"

namespace ffdioph {
namespace {

Poly RandomPoly(const FieldPtr& k, Rng& rng, int deg) {
  std::vector<uint32_t> c(static_cast<size_t>(deg) + 1);
  for (int i = 0; i < deg; ++i) c[static_cast<size_t>(i)] = rng.Below(k->q());
  c[static_cast<size_t>(deg)] = 1 + rng.Below(k->q() - 1);
  return Poly::FromCoeffs(k, std::move(c));
}

TEST_CASE("valuation of differences") {
  FieldPtr k = Field::MakeQ(2);
  // 1/X - 1/(X+1) = 1/(X^2+X): valuation 2.
  RationalSource a(Poly::Constant(k, 1), Poly::X(k));
  RationalSource b(Poly::Constant(k, 1), Poly::Parse(k, "X+1"));
  CHECK(HamenstadtVal(a, b) == 2);

  RationalSource c(Poly::Constant(k, 1), Poly::X(k));
  RationalSource d(Poly::Constant(k, 1), Poly::X(k));
  CHECK_THROWS_AS(HamenstadtVal(c, d), Error);  // equal inputs

  LaurentSeries f = LaurentSeries::FromCoeffWindow(k, 0, {1, 0, 1, 1});
  LaurentSeries g = LaurentSeries::FromCoeffWindow(k, 0, {1, 0, 0, 1});
  CHECK(HamenstadtVal(f, g) == 2);
}

TEST_CASE("the valuation is an ultrametric") {
  FieldPtr k = Field::MakeQ(3);
  Rng rng(3131);
  for (int it = 0; it < 60; ++it) {
    Poly dens[3], nums[3];
    for (int i = 0; i < 3; ++i) {
      dens[i] = RandomPoly(k, rng, 3 + static_cast<int>(rng.Below(3)));
      nums[i] = RandomPoly(k, rng, static_cast<int>(rng.Below(3)));
    }
    auto val = [&](int i, int j) {
      RationalSource a(nums[i], dens[i]);
      RationalSource b(nums[j], dens[j]);
      return HamenstadtVal(a, b);
    };
    if (nums[0] * dens[1] == nums[1] * dens[0]) continue;
    if (nums[1] * dens[2] == nums[2] * dens[1]) continue;
    if (nums[0] * dens[2] == nums[2] * dens[0]) continue;
    int ab = val(0, 1), bc = val(1, 2), ac = val(0, 2);
    CHECK(ac >= std::min(ab, bc));
  }
}

TEST_CASE("cusp depth") {
  FieldPtr k = Field::MakeQ(2);
  CHECK(CuspDistance(Poly::Constant(k, 1), Poly::Parse(k, "X^2+X")) == 4);
  CHECK(CuspDistance(Poly::Constant(k, 1), Poly::Constant(k, 1)) == 0);
  CHECK(CuspDistance(Poly::Zero(k), Poly::Constant(k, 1)) == 0);
  CHECK(CuspDistance(Poly::X(k), Poly::Parse(k, "X^2+1")) == 4);
  // gcd(X, X^2+X) = X: not a reduced fraction.
  CHECK_THROWS_AS(CuspDistance(Poly::X(k), Poly::Parse(k, "X^2+X")), Error);
  CHECK_THROWS_AS(CuspDistance(Poly::Constant(k, 1), Poly::Zero(k)), Error);
}

TEST_CASE("tent profile of a two digit expansion") {
  FieldPtr k = Field::MakeQ(2);
  // [0; X, X] = X/(X^2+1).
  RationalSource src(Poly::X(k), Poly::Parse(k, "X^2+1"));
  CfExpansion ex = CfExpand(&src);
  REQUIRE(ex.digits.size() == 2);

  std::vector<Tent> tents = TentProfile(ex);
  REQUIRE(tents.size() == 2);

  CHECK(tents[0].index == 0);
  CHECK(tents[0].t_enter == 0);
  CHECK(tents[0].t_peak == 1);
  CHECK(tents[0].t_exit == 2);
  CHECK(tents[0].peak == 1);
  CHECK(tents[0].num.IsZero());
  CHECK(tents[0].den.IsOne());

  CHECK(tents[1].t_enter == 2);
  CHECK(tents[1].t_peak == 3);
  CHECK(tents[1].t_exit == 4);
  CHECK(tents[1].peak == 1);
  CHECK(tents[1].num.IsOne());
  CHECK(tents[1].den == Poly::X(k));

  // Height samples along the profile.
  CHECK(HeightAt(tents, 0) == 0);
  CHECK(HeightAt(tents, 1) == 1);
  CHECK(HeightAt(tents, 2) == 0);
  CHECK(HeightAt(tents, 3) == 1);
  CHECK(HeightAt(tents, 4) == 0);
  CHECK_THROWS_AS(HeightAt(tents, 5), Error);
  CHECK_THROWS_AS(HeightAt(tents, -1), Error);
}

TEST_CASE("tents record excursions exactly") {
  // For each tent of a random rational: the distance to the tent's cusp is
  // the cusp depth plus the peak height, i.e. the excursion climbs to the
  // peak and returns.
  for (uint32_t q : {2u, 3u}) {
    FieldPtr k = Field::MakeQ(q);
    Rng rng(61 + q);
    for (int it = 0; it < 25; ++it) {
      Poly den = RandomPoly(k, rng, 5 + static_cast<int>(rng.Below(3)));
      Poly num = RandomPoly(k, rng, static_cast<int>(rng.Below(5)));
      RationalSource src(num, den);
      CfExpansion ex = CfExpand(&src);
      if (ex.digits.empty()) continue;
      std::vector<Tent> tents = TentProfile(ex);
      for (const Tent& tent : tents) {
        CHECK(tent.t_exit - tent.t_enter == 2 * tent.peak);
        RationalSource probe(num, den);
        int nu = NuOfDifference(&probe, tent.num, tent.den);
        int cusp_depth = CuspDistance(tent.num, tent.den);
        CHECK(cusp_depth == tent.t_enter);
        if (nu != kPosInfVal) CHECK(2 * nu == tent.t_enter + tent.t_exit);
      }
    }
  }
}

TEST_CASE("shadow prefixes") {
  FieldPtr k = Field::MakeQ(2);
  Ball s0 = ShadowBall(Poly::Constant(k, 1), Poly::X(k), 0);
  CHECK(s0.radius() == 2);
  CHECK(s0.prefix() == std::vector<uint32_t>{0, 1});

  Ball s1 = ShadowBall(Poly::Constant(k, 1), Poly::X(k), 1);
  CHECK(s1.radius() == 3);
  CHECK(s1.prefix() == std::vector<uint32_t>{0, 1, 0});

  CHECK_THROWS_AS(ShadowBall(Poly::Constant(k, 1), Poly::X(k), -1), Error);
}

TEST_CASE("unimodular matrices") {
  FieldPtr k2 = Field::MakeQ(2);
  Sl2 g = MakeSl2(Poly::X(k2), Poly::Constant(k2, 1), Poly::Constant(k2, 1),
                  Poly::Zero(k2));
  CHECK(TranslationDistance(g) == 2);

  Sl2 id = Sl2Identity(k2);
  CHECK(TranslationDistance(id) == 0);

  Sl2 gi = Sl2Inverse(g);
  Sl2 prod = Sl2Mul(g, gi);
  CHECK(prod.a.IsOne());
  CHECK(prod.b.IsZero());
  CHECK(prod.c.IsZero());
  CHECK(prod.d.IsOne());
  CHECK(TranslationDistance(g) == TranslationDistance(gi));

  // det = -1 is not 1 over GF(3).
  FieldPtr k3 = Field::MakeQ(3);
  CHECK_THROWS_AS(MakeSl2(Poly::X(k3), Poly::Constant(k3, 1),
                          Poly::Constant(k3, 1), Poly::Zero(k3)),
                  Error);

  Sl2 shear = MakeSl2(Poly::Constant(k2, 1), Poly::Parse(k2, "X^2"),
                      Poly::Zero(k2), Poly::Constant(k2, 1));
  CHECK(TranslationDistance(shear) == 4);
}

TEST_CASE("translation distance is subadditive") {
  FieldPtr k = Field::MakeQ(3);
  Rng rng(5150);
  auto random_unimodular = [&](int factors) {
    Sl2 g = Sl2Identity(k);
    for (int i = 0; i < factors; ++i) {
      Poly p = RandomPoly(k, rng, static_cast<int>(rng.Below(3)));
      Sl2 e = rng.Below(2) == 0
                  ? MakeSl2(Poly::Constant(k, 1), p, Poly::Zero(k),
                            Poly::Constant(k, 1))
                  : MakeSl2(Poly::Constant(k, 1), Poly::Zero(k), p,
                            Poly::Constant(k, 1));
      g = Sl2Mul(g, e);
    }
    return g;
  };
  for (int it = 0; it < 40; ++it) {
    Sl2 g = random_unimodular(3);
    Sl2 h = random_unimodular(3);
    CHECK(TranslationDistance(Sl2Mul(g, h)) <=
          TranslationDistance(g) + TranslationDistance(h));
  }
}

TEST_CASE("moebius action on cusps") {
  FieldPtr k = Field::MakeQ(2);
  // The shear z -> z + 1 sends 1/X to (X+1)/X.
  Sl2 shear = MakeSl2(Poly::Constant(k, 1), Poly::Constant(k, 1),
                      Poly::Zero(k), Poly::Constant(k, 1));
  auto [num, den] = MoebiusCusp(shear, Poly::Constant(k, 1), Poly::X(k));
  CHECK(num == Poly::Parse(k, "X+1"));
  CHECK(den == Poly::X(k));

  // Applying the inverse brings the cusp back.
  auto [num2, den2] = MoebiusCusp(Sl2Inverse(shear), num, den);
  CHECK(num2.IsOne());
  CHECK(den2 == Poly::X(k));

  // Images stay reduced with monic denominator.
  Rng rng(99);
  for (int it = 0; it < 30; ++it) {
    Poly den_r = RandomPoly(k, rng, 2 + static_cast<int>(rng.Below(3)));
    Poly num_r = RandomPoly(k, rng, static_cast<int>(rng.Below(2)));
    if (PolyGcd(num_r, den_r).deg() != 0) continue;
    Sl2 g = MakeSl2(Poly::X(k), Poly::Constant(k, 1), Poly::Constant(k, 1),
                    Poly::Zero(k));
    auto [n3, d3] = MoebiusCusp(g, num_r, den_r);
    CHECK(PolyGcd(n3, d3).deg() == 0);
    CHECK(d3.IsMonic());
  }
}

}  // namespace
}  // namespace ffdioph
