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

#include "doctest.h"
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

TEST_CASE("rational expansion, worked example") {
  FieldPtr k = Field::MakeQ(2);
  // (X^2+X+1)/X = (X+1) + 1/X.
  CfRational cf =
      CfExpandRational(Poly::Parse(k, "X^2+X+1"), Poly::X(k));
  CHECK(cf.Format() == "[X+1; X]");
  CHECK(cf.digits.size() == 1);

  CfRational tail = CfExpandRational(Poly::Constant(k, 1),
                                     Poly::Parse(k, "X+1"));
  CHECK(tail.Format() == "[0; X+1]");

  // A common factor does not change the value, hence not the expansion.
  CfRational red = CfExpandRational(Poly::Parse(k, "X^2+X"),
                                    Poly::Parse(k, "X^2"));
  CHECK(red.Format() ==
        CfExpandRational(Poly::Parse(k, "X+1"), Poly::X(k)).Format());

  CHECK_THROWS_AS(CfExpandRational(Poly::X(k), Poly::Zero(k)), Error);
}

TEST_CASE("evaluation inverts expansion") {
  for (uint32_t q : {2u, 3u}) {
    FieldPtr k = Field::MakeQ(q);
    Rng rng(40 + q);
    for (int it = 0; it < 60; ++it) {
      Poly den = RandomPoly(k, rng, 1 + static_cast<int>(rng.Below(8)));
      Poly num = RandomPoly(k, rng, static_cast<int>(rng.Below(10)));
      CfRational cf = CfExpandRational(num, den);
      CfConvergents conv = CfEval(cf.a0, cf.digits);
      REQUIRE(!conv.p.empty());
      // The last convergent is the fraction itself (cross multiply to dodge
      // unit normalization).
      CHECK(conv.p.back() * den == conv.q.back() * num);
      for (const Poly& a : cf.digits) CHECK(a.deg() >= 1);
      // Consecutive convergents have unit determinant.
      for (size_t n = 1; n < conv.p.size(); ++n) {
        Poly det = conv.p[n] * conv.q[n - 1] - conv.p[n - 1] * conv.q[n];
        CHECK(det.deg() == 0);
        CHECK(PolyGcd(conv.p[n], conv.q[n]).deg() == 0);
      }
    }
  }
}

TEST_CASE("evaluation rejects short digits") {
  FieldPtr k = Field::MakeQ(2);
  std::vector<Poly> digits = {Poly::Constant(k, 1)};
  CHECK_THROWS_AS(CfEval(Poly::Zero(k), digits), Error);
}

TEST_CASE("stream expansion matches the rational algorithm") {
  for (uint32_t q : {2u, 3u}) {
    FieldPtr k = Field::MakeQ(q);
    Rng rng(90 + q);
    for (int it = 0; it < 40; ++it) {
      Poly den = RandomPoly(k, rng, 1 + static_cast<int>(rng.Below(8)));
      Poly num = RandomPoly(k, rng, static_cast<int>(rng.Below(10)));
      CfRational want = CfExpandRational(num, den);

      RationalSource src(num, den);
      CfExpansion got = CfExpand(&src);
      CHECK(got.status == CfStatus::kTerminated);
      CHECK(got.a0 == want.a0);
      REQUIRE(got.digits.size() == want.digits.size());
      for (size_t i = 0; i < want.digits.size(); ++i)
        CHECK(got.digits[i] == want.digits[i]);
    }
  }
}

TEST_CASE("distance to convergents is exact") {
  FieldPtr k = Field::MakeQ(2);
  Rng rng(7);
  for (int it = 0; it < 30; ++it) {
    Poly den = RandomPoly(k, rng, 6 + static_cast<int>(rng.Below(3)));
    Poly num = RandomPoly(k, rng, static_cast<int>(rng.Below(6)));
    RationalSource src(num, den);
    CfExpansion ex = CfExpand(&src);
    if (ex.conv_q.size() < 2) continue;
    for (size_t n = 0; n + 1 < ex.conv_q.size(); ++n) {
      RationalSource probe(num, den);
      int nu = NuOfDifference(&probe, ex.conv_p[n], ex.conv_q[n]);
      CHECK(nu == ex.conv_q[n].deg() + ex.conv_q[n + 1].deg());
    }
    // Exact equality at the last convergent.
    RationalSource last(num, den);
    int nu = NuOfDifference(&last, ex.conv_p.back(), ex.conv_q.back());
    CHECK(nu == kPosInfVal);
  }
}

TEST_CASE("convergent recognition") {
  FieldPtr k = Field::MakeQ(2);
  Poly num = Poly::Parse(k, "X^2+X+1");
  Poly den = Poly::X(k);
  RationalSource src(num, den);
  CfExpansion ex = CfExpand(&src);

  for (size_t n = 0; n < ex.conv_q.size(); ++n) {
    RationalSource probe(num, den);
    ConvergentCheck c = IsConvergent(&probe, ex.conv_p[n], ex.conv_q[n]);
    CHECK(c.is_convergent);
    CHECK(c.index == static_cast<int>(n));
  }

  RationalSource probe(num, den);
  ConvergentCheck c =
      IsConvergent(&probe, Poly::Constant(k, 1), Poly::Parse(k, "X^2"));
  CHECK(!c.is_convergent);
}

TEST_CASE("quality beyond the Legendre line implies convergent") {
  // Scan all reduced pairs with deg P, deg Q <= 3 against a fixed stream:
  // whenever nu(f - P/Q) > 2 deg Q the pair must appear among the
  // convergents.
  FieldPtr k = Field::MakeQ(2);
  StreamSource src(k, Rng::Stream(2024, 3));
  CfExpansion ex = CfExpand(&src, 64, 8);

  auto from_mask = [&](uint32_t m) {
    return Poly::FromCoeffs(k, {m & 1, (m >> 1) & 1, (m >> 2) & 1,
                                (m >> 3) & 1});
  };
  int qualifying = 0;
  for (uint32_t dmask = 1; dmask < (1u << 4); ++dmask) {
    Poly den = from_mask(dmask);
    for (uint32_t nmask = 0; nmask < (1u << 4); ++nmask) {
      Poly num = from_mask(nmask);
      if (!num.IsZero() && PolyGcd(num, den).deg() != 0) continue;
      if (num.IsZero() && den.deg() != 0) continue;  // 0/Q is 0/1
      StreamSource probe(k, Rng::Stream(2024, 3));
      int nu = NuOfDifference(&probe, num, den, 256);
      if (nu <= 2 * den.deg()) continue;
      ++qualifying;
      bool found = false;
      for (size_t n = 0; n < ex.conv_q.size() && !found; ++n)
        found = ex.conv_p[n] * den == ex.conv_q[n] * num;
      CHECK(found);
    }
  }
  CHECK(qualifying > 0);
}

TEST_CASE("digit events carry a consistent degree chain") {
  FieldPtr k = Field::MakeQ(3);
  StreamSource src(k, Rng::Stream(17, 0));
  CfStreamOptions opts;
  opts.max_digits = 25;
  int prev_deg = 0;
  int events = 0;
  CfStreamResult res = CfStreamDigits(&src, opts, [&](const CfDigitEvent& ev) {
    ++events;
    CHECK(ev.index == events);
    CHECK(ev.deg_a >= 1);
    CHECK(ev.deg_q_prev == prev_deg);
    CHECK(ev.deg_q == ev.deg_q_prev + ev.deg_a);
    prev_deg = ev.deg_q;
    return true;
  });
  CHECK(res.status == CfStatus::kBudgetReached);
  CHECK(res.digits == 25);
  CHECK(events == 25);
  CHECK(res.deg_q == prev_deg);
}

TEST_CASE("degree budget delivers the crossing digit") {
  FieldPtr k = Field::MakeQ(2);
  StreamSource src(k, Rng::Stream(55, 4));
  CfStreamOptions opts;
  opts.max_qdeg = 10;
  int last_deg = 0;
  CfStreamResult res = CfStreamDigits(&src, opts, [&](const CfDigitEvent& ev) {
    last_deg = ev.deg_q;
    return true;
  });
  CHECK(res.status == CfStatus::kBudgetReached);
  CHECK(last_deg >= 10);
  CHECK(res.deg_q == last_deg);
}

TEST_CASE("callback can stop the stream") {
  FieldPtr k = Field::MakeQ(2);
  StreamSource src(k, Rng::Stream(55, 4));
  CfStreamOptions opts;
  int events = 0;
  CfStreamResult res = CfStreamDigits(&src, opts, [&](const CfDigitEvent&) {
    return ++events < 3;
  });
  CHECK(events == 3);
  CHECK(res.digits == 3);
  CHECK(res.status == CfStatus::kBudgetReached);
}

TEST_CASE("finite windows exhaust precision honestly") {
  FieldPtr k = Field::MakeQ(2);
  // Only three certified coefficients: a rational tail can never be proven.
  RationalSource full(Poly::Constant(k, 1), Poly::Parse(k, "X+1"));
  WindowSource narrow(full.Realize(3));
  CfExpansion ex = CfExpand(&narrow);
  CHECK(ex.status == CfStatus::kPrecisionExhausted);
  CHECK(ex.realized_prec <= 3);
}

TEST_CASE("tracked residues follow the convergent denominators") {
  FieldPtr k = Field::MakeQ(2);
  std::vector<Poly> digits = {Poly::X(k), Poly::Parse(k, "X+1"), Poly::X(k),
                              Poly::Parse(k, "X^2+1")};
  CfConvergents conv = CfEval(Poly::Zero(k), digits);
  RationalSource src(conv.p.back(), conv.q.back());

  CfStreamOptions opts;
  opts.track_mod = Poly::X(k);
  opts.materialize_digits = true;
  size_t n = 0;
  CfStreamDigits(&src, opts, [&](const CfDigitEvent& ev) {
    REQUIRE(ev.q_mod != nullptr);
    REQUIRE(ev.a != nullptr);
    ++n;
    CHECK(*ev.q_mod == PolyDivMod(conv.q[n], Poly::X(k)).second);
    CHECK(*ev.a == digits[n - 1]);
    return true;
  });
  CHECK(n == digits.size());
}

TEST_CASE("restart growth reproduces the prefix") {
  // An expansion computed digit by digit with a tiny initial precision must
  // agree with one computed from a generous window in a single pass.
  FieldPtr k = Field::MakeQ(2);
  StreamSource a(k, Rng::Stream(31337, 0));
  CfStreamOptions small_opts;
  small_opts.initial_prec = 2;
  small_opts.max_digits = 30;
  std::vector<int> degs_a;
  CfStreamDigits(&a, small_opts, [&](const CfDigitEvent& ev) {
    degs_a.push_back(ev.deg_a);
    return true;
  });

  StreamSource b(k, Rng::Stream(31337, 0));
  CfStreamOptions big_opts;
  big_opts.initial_prec = 512;
  big_opts.max_digits = 30;
  std::vector<int> degs_b;
  CfStreamDigits(&b, big_opts, [&](const CfDigitEvent& ev) {
    degs_b.push_back(ev.deg_a);
    return true;
  });
  CHECK(degs_a == degs_b);
}

}  // namespace
}  // namespace ffdioph
