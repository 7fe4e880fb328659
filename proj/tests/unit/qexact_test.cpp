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

#include "ffdioph/qexact.hpp"

#include "doctest.h"
#include "ffdioph/errors.hpp"

namespace ffdioph {
namespace {

TEST_CASE("normalization cancels powers of q") {
  QExact v(2, 4, 3);  // 4 / 2^3
  CHECK(v.num() == 1);
  CHECK(v.kexp() == 1);
  CHECK(v.Render() == "1/2");

  QExact w(2, 6, 1);  // 6 / 2 = 3
  CHECK(w.num() == 3);
  CHECK(w.kexp() == 0);
  CHECK(w.Render() == "3");

  // Negative exponents fold into the numerator.
  QExact u(3, 2, -2);  // 2 * 9
  CHECK(u.num() == 18);
  CHECK(u.kexp() == 0);
}

TEST_CASE("arithmetic is exact") {
  QExact a = QExact::PowQ(2, -4);
  QExact b = QExact::PowQ(2, -2);
  CHECK((a + b).Render() == "5/16");
  CHECK((b - a).Render() == "3/16");
  CHECK((a * b) == QExact::PowQ(2, -6));
  CHECK((-a).num() == -1);

  QExact sum = QExact::Zero(2);
  for (int i = 1; i <= 4; ++i) sum = sum + QExact::PowQ(2, -i);
  CHECK(sum.Render() == "15/16");
}

TEST_CASE("comparisons") {
  CHECK(QExact::PowQ(2, -3) < QExact::PowQ(2, -2));
  CHECK(QExact::One(2) == QExact(2, 4, 2));
  CHECK(QExact::Zero(3).IsZero());
  CHECK(QExact(3, 5, 2) > QExact(3, 4, 2));
}

TEST_CASE("double conversion") {
  CHECK(QExact::PowQ(2, -3).ToDouble() == doctest::Approx(0.125));
  CHECK(QExact(2, 33, 4).ToDouble() == doctest::Approx(33.0 / 16.0));
}

TEST_CASE("mixed bases are rejected") {
  QExact a = QExact::One(2);
  QExact b = QExact::One(3);
  CHECK_THROWS_AS(a + b, Error);
  CHECK_THROWS_AS(QExact(1, 1, 0), Error);
}

}  // namespace
}  // namespace ffdioph
