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
//
// Cylinder sets in the unit ball of the Laurent-series field and exact
// Haar-measure computations on finite unions of them.
//
// The ambient space is O = { f : nu(f) >= 0 }, carrying the probability
// measure under which the coefficients c_0, c_1, ... of
// f = c_0 + c_1 X^-1 + c_2 X^-2 + ... are i.i.d. uniform on F_q.  A "ball of
// radius k" is the set of f agreeing with a given center in c_0 .. c_{k-1};
// its measure is q^-k, and every metric ball of the absolute value |.| = q^-nu
// intersected with O is of this form.

#ifndef FFDIOPH_MEASURE_HPP_
#define FFDIOPH_MEASURE_HPP_

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "ffdioph/field.hpp"
#include "ffdioph/laurent.hpp"
#include "ffdioph/poly.hpp"
#include "ffdioph/qexact.hpp"
#include "ffdioph/testfn.hpp"

namespace ffdioph {

// A single cylinder: all series in O whose first `radius()` coefficients
// equal `prefix`.  Radius 0 is the whole unit ball.
class Ball {
 public:
  Ball(FieldPtr k, std::vector<uint32_t> prefix);

  // Cylinder of the given radius around an explicit series.  The series must
  // lie in O (nu >= 0) and must be known to at least `radius` coefficients.
  static Ball FromSeries(const LaurentSeries& center, int radius);

  // Cylinder of the given radius around the rational point num/den, which
  // must lie in O (deg num <= deg den, den != 0).
  static Ball FromCusp(const Poly& num, const Poly& den, int radius);

  const FieldPtr& field() const { return k_; }
  int radius() const { return static_cast<int>(prefix_.size()); }
  const std::vector<uint32_t>& prefix() const { return prefix_; }

  QExact Measure() const { return QExact::PowQ(k_->q(), -radius()); }

  // Membership test.  A disagreement inside the known coefficient window
  // decides "no" even when the series is shorter than the radius; only an
  // agreement that cannot be extended far enough raises kPrecisionExhausted.
  bool ContainsSeries(const LaurentSeries& f) const;

  std::string Format() const;

 private:
  FieldPtr k_;
  std::vector<uint32_t> prefix_;
};

// Ultrametric dichotomy: two cylinders are nested, equal, or disjoint; no
// partial overlap exists.
enum class BallRelation {
  kEqual,
  kFirstInsideSecond,
  kSecondInsideFirst,
  kDisjoint,
};

std::string BallRelationName(BallRelation r);

BallRelation Relate(const Ball& b1, const Ball& b2);

// A finite union of cylinders, kept as a coefficient trie so that unions and
// intersections coalesce overlapping balls and the total measure is exact.
class BallSet {
 public:
  explicit BallSet(FieldPtr k) : k_(std::move(k)) {}
  BallSet(const BallSet& o);
  BallSet& operator=(const BallSet& o);
  BallSet(BallSet&&) = default;
  BallSet& operator=(BallSet&&) = default;

  const FieldPtr& field() const { return k_; }
  bool IsEmpty() const { return !root_; }

  void Insert(const Ball& b);
  void UnionWith(const BallSet& o);
  void IntersectWith(const BallSet& o);

  QExact Measure() const;
  // Number of maximal disjoint cylinders the set decomposes into.
  int64_t BallCount() const;
  // The maximal disjoint cylinders, ordered by coefficient prefix.
  std::vector<Ball> ListBalls() const;

  bool ContainsSeries(const LaurentSeries& f) const;

 private:
  struct Node {
    bool full = false;
    std::map<uint32_t, std::unique_ptr<Node>> kids;
  };

  static std::unique_ptr<Node> Clone(const Node* n);
  void InsertRec(Node* n, const std::vector<uint32_t>& prefix, size_t depth);
  static std::unique_ptr<Node> Meet(const Node* a, const Node* b, uint32_t q);
  void Coalesce(Node* n);

  FieldPtr k_;
  std::unique_ptr<Node> root_;
};

// The depth-d layer of the phi-approximable set: the union over orbit points
// P/Q at depth d (den divisible by q0, reduced, in O) of the ball of radius
// phi.ThresholdRadius(d) around P/Q.  `budget` caps the number of orbit
// points enumerated.
BallSet ApproxSetAtDepth(const FieldPtr& k, const TestFunction& phi,
                         const Poly& q0, int d,
                         uint64_t budget = 1ull << 22);

// Exact measure of the depth-d layer.  In the strict regime
// ThresholdRadius(d) >= 2d + 1 the balls are pairwise disjoint and the
// measure is count * q^-k(d) without any enumeration of coefficients;
// otherwise the cylinder trie is built and measured.
QExact ApproxSetMeasure(const FieldPtr& k, const TestFunction& phi,
                        const Poly& q0, int d, uint64_t budget = 1ull << 22);

// The window-indexed set A_n: the union of the depth-d layers over all d
// with N*n <= 2d < N*(n+1).  With the default width N = 2 (depths are even,
// so width 2 makes every window hit exactly one degree) A_n is the depth-n
// layer.
BallSet BuildApproxWindow(const FieldPtr& k, const TestFunction& phi,
                          const Poly& q0, int n, int window_width = 2,
                          uint64_t budget = 1ull << 22);

// Exact measure of A_n.  Single-depth windows reuse the disjointness
// shortcut; wider windows always build the trie (balls of different depths
// can nest across layers).
QExact ApproxWindowMeasure(const FieldPtr& k, const TestFunction& phi,
                           const Poly& q0, int n, int window_width = 2,
                           uint64_t budget = 1ull << 22);

}  // namespace ffdioph

#endif  // FFDIOPH_MEASURE_HPP_
