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

#include "ffdioph/measure.hpp"

#include <algorithm>
#include <utility>

#include "ffdioph/orbit.hpp"

namespace ffdioph {

Ball::Ball(FieldPtr k, std::vector<uint32_t> prefix)
    : k_(std::move(k)), prefix_(std::move(prefix)) {
  for (uint32_t c : prefix_) {
    if (c >= k_->q())
      Fail(ErrorKind::kCoefficientOutOfRange,
           "cylinder prefix entry " + std::to_string(c) +
               " is not an element code of F_" + std::to_string(k_->q()));
  }
}

Ball Ball::FromSeries(const LaurentSeries& center, int radius) {
  if (radius < 0) Fail(ErrorKind::kUsage, "cylinder radius must be >= 0");
  if (!center.IsZeroToPrec() && center.nu() < 0)
    Fail(ErrorKind::kNotInUnitBall,
         "cylinder centers must have nu >= 0, got nu = " +
             std::to_string(center.nu()));
  if (center.prec() < radius)
    Fail(ErrorKind::kPrecisionExhausted,
         "center known to " + std::to_string(center.prec()) +
             " coefficients, need " + std::to_string(radius));
  std::vector<uint32_t> prefix(static_cast<size_t>(radius));
  for (int i = 0; i < radius; ++i)
    prefix[static_cast<size_t>(i)] = center.coeff(i);
  return Ball(center.field(), std::move(prefix));
}

Ball Ball::FromCusp(const Poly& num, const Poly& den, int radius) {
  if (radius < 0) Fail(ErrorKind::kUsage, "cylinder radius must be >= 0");
  if (den.IsZero())
    Fail(ErrorKind::kDivisionByZeroPoly, "cylinder center has zero denominator");
  if (num.deg() > den.deg())
    Fail(ErrorKind::kNotInUnitBall,
         "rational center lies outside the unit ball: deg num > deg den");
  if (radius == 0) return Ball(num.field(), {});
  RationalSource src(num, den);
  return FromSeries(src.Realize(radius), radius);
}

bool Ball::ContainsSeries(const LaurentSeries& f) const {
  RequireSameField(k_, f.field());
  if (!f.IsZeroToPrec() && f.nu() < 0) return false;
  for (int i = 0; i < radius(); ++i) {
    if (i >= f.prec())
      Fail(ErrorKind::kPrecisionExhausted,
           "series agrees with the cylinder prefix as far as it is known; "
           "membership needs " +
               std::to_string(radius()) + " coefficients");
    if (f.coeff(i) != prefix_[static_cast<size_t>(i)]) return false;
  }
  return true;
}

std::string Ball::Format() const {
  std::string s = "[";
  for (size_t i = 0; i < prefix_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(prefix_[i]);
  }
  s += "]";
  return s;
}

std::string BallRelationName(BallRelation r) {
  switch (r) {
    case BallRelation::kEqual:
      return "equal";
    case BallRelation::kFirstInsideSecond:
      return "first-inside-second";
    case BallRelation::kSecondInsideFirst:
      return "second-inside-first";
    case BallRelation::kDisjoint:
      return "disjoint";
  }
  return "?";
}

BallRelation Relate(const Ball& b1, const Ball& b2) {
  RequireSameField(b1.field(), b2.field());
  const int shared = std::min(b1.radius(), b2.radius());
  for (int i = 0; i < shared; ++i)
    if (b1.prefix()[static_cast<size_t>(i)] !=
        b2.prefix()[static_cast<size_t>(i)])
      return BallRelation::kDisjoint;
  if (b1.radius() == b2.radius()) return BallRelation::kEqual;
  return b1.radius() > b2.radius() ? BallRelation::kFirstInsideSecond
                                   : BallRelation::kSecondInsideFirst;
}

BallSet::BallSet(const BallSet& o) : k_(o.k_), root_(Clone(o.root_.get())) {}

BallSet& BallSet::operator=(const BallSet& o) {
  if (this != &o) {
    k_ = o.k_;
    root_ = Clone(o.root_.get());
  }
  return *this;
}

std::unique_ptr<BallSet::Node> BallSet::Clone(const Node* n) {
  if (!n) return nullptr;
  auto out = std::make_unique<Node>();
  out->full = n->full;
  for (const auto& [c, kid] : n->kids) out->kids[c] = Clone(kid.get());
  return out;
}

void BallSet::Insert(const Ball& b) {
  RequireSameField(k_, b.field());
  if (!root_) root_ = std::make_unique<Node>();
  InsertRec(root_.get(), b.prefix(), 0);
}

void BallSet::InsertRec(Node* n, const std::vector<uint32_t>& prefix,
                        size_t depth) {
  if (n->full) return;  // Already covered by a coarser cylinder.
  if (depth == prefix.size()) {
    n->full = true;
    n->kids.clear();
    return;
  }
  auto& kid = n->kids[prefix[depth]];
  if (!kid) kid = std::make_unique<Node>();
  InsertRec(kid.get(), prefix, depth + 1);
  Coalesce(n);
}

void BallSet::Coalesce(Node* n) {
  if (n->full || n->kids.size() != k_->q()) return;
  for (const auto& [c, kid] : n->kids)
    if (!kid->full) return;
  n->full = true;
  n->kids.clear();
}

void BallSet::UnionWith(const BallSet& o) {
  RequireSameField(k_, o.k_);
  for (const Ball& b : o.ListBalls()) Insert(b);
}

std::unique_ptr<BallSet::Node> BallSet::Meet(const Node* a, const Node* b,
                                             uint32_t q) {
  if (!a || !b) return nullptr;
  if (a->full) return Clone(b);
  if (b->full) return Clone(a);
  auto out = std::make_unique<Node>();
  for (const auto& [c, kid] : a->kids) {
    auto it = b->kids.find(c);
    if (it == b->kids.end()) continue;
    auto meet = Meet(kid.get(), it->second.get(), q);
    if (meet) out->kids[c] = std::move(meet);
  }
  if (out->kids.empty()) return nullptr;
  if (out->kids.size() == q) {
    bool all_full = true;
    for (const auto& [c, kid] : out->kids)
      if (!kid->full) all_full = false;
    if (all_full) {
      out->full = true;
      out->kids.clear();
    }
  }
  return out;
}

void BallSet::IntersectWith(const BallSet& o) {
  RequireSameField(k_, o.k_);
  root_ = Meet(root_.get(), o.root_.get(), k_->q());
}

QExact BallSet::Measure() const {
  const uint32_t q = k_->q();
  // Gather the count of maximal cylinders at each depth, then form
  // sum_d count_d * q^-d exactly.
  std::map<int, BigInt> per_depth;
  int max_depth = 0;
  struct Frame {
    const Node* n;
    int depth;
  };
  std::vector<Frame> stack;
  if (root_) stack.push_back({root_.get(), 0});
  while (!stack.empty()) {
    auto [n, depth] = stack.back();
    stack.pop_back();
    if (n->full) {
      ++per_depth[depth];
      max_depth = std::max(max_depth, depth);
      continue;
    }
    for (const auto& [c, kid] : n->kids)
      stack.push_back({kid.get(), depth + 1});
  }
  BigInt num = 0;
  for (const auto& [depth, count] : per_depth)
    num += count * BigPow(q, max_depth - depth);
  return QExact(q, num, max_depth);
}

int64_t BallSet::BallCount() const {
  int64_t count = 0;
  std::vector<const Node*> stack;
  if (root_) stack.push_back(root_.get());
  while (!stack.empty()) {
    const Node* n = stack.back();
    stack.pop_back();
    if (n->full) {
      ++count;
      continue;
    }
    for (const auto& [c, kid] : n->kids) stack.push_back(kid.get());
  }
  return count;
}

std::vector<Ball> BallSet::ListBalls() const {
  std::vector<Ball> out;
  std::vector<uint32_t> prefix;
  struct Walker {
    const FieldPtr& k;
    std::vector<Ball>& out;
    std::vector<uint32_t>& prefix;
    void Visit(const Node* n) {
      if (n->full) {
        out.emplace_back(k, prefix);
        return;
      }
      for (const auto& [c, kid] : n->kids) {
        prefix.push_back(c);
        Visit(kid.get());
        prefix.pop_back();
      }
    }
  };
  if (root_) Walker{k_, out, prefix}.Visit(root_.get());
  return out;
}

bool BallSet::ContainsSeries(const LaurentSeries& f) const {
  RequireSameField(k_, f.field());
  if (!f.IsZeroToPrec() && f.nu() < 0) return false;
  const Node* n = root_.get();
  int depth = 0;
  while (n) {
    if (n->full) return true;
    if (n->kids.empty()) return false;
    if (depth >= f.prec())
      Fail(ErrorKind::kPrecisionExhausted,
           "membership undecided after " + std::to_string(f.prec()) +
               " known coefficients");
    auto it = n->kids.find(f.coeff(depth));
    if (it == n->kids.end()) return false;
    n = it->second.get();
    ++depth;
  }
  return false;
}

BallSet ApproxSetAtDepth(const FieldPtr& k, const TestFunction& phi,
                         const Poly& q0, int d, uint64_t budget) {
  const int radius = phi.ThresholdRadius(d);
  BallSet set(k);
  for (const auto& [num, den] : OrbitEnumerate(k, q0, d, budget))
    set.Insert(Ball::FromCusp(num, den, radius));
  return set;
}

QExact ApproxSetMeasure(const FieldPtr& k, const TestFunction& phi,
                        const Poly& q0, int d, uint64_t budget) {
  const uint32_t q = k->q();
  const int radius = phi.ThresholdRadius(d);
  const BigInt count = OrbitCountAtDepth(k, q0, d);
  if (count == 0) return QExact::Zero(q);
  if (radius == 0) return QExact::One(q);
  if (radius >= 2 * d + 1) {
    // Centers at equal depth are at pairwise distance nu <= 2d, so the
    // cylinders are disjoint and the union measure is a plain product.
    return QExact(q, count, radius);
  }
  return ApproxSetAtDepth(k, phi, q0, d, budget).Measure();
}

namespace {

// Degrees d with width*n <= 2d < width*(n+1).
std::vector<int> WindowDepths(int n, int width) {
  if (n < 0) Fail(ErrorKind::kUsage, "window index must be >= 0");
  if (width < 2) Fail(ErrorKind::kUsage, "window width must be >= 2");
  std::vector<int> depths;
  const int lo = width * n;
  const int hi = width * (n + 1);
  for (int d = (lo + 1) / 2; 2 * d < hi; ++d)
    if (2 * d >= lo) depths.push_back(d);
  return depths;
}

}  // namespace

BallSet BuildApproxWindow(const FieldPtr& k, const TestFunction& phi,
                          const Poly& q0, int n, int window_width,
                          uint64_t budget) {
  BallSet set(k);
  for (int d : WindowDepths(n, window_width))
    set.UnionWith(ApproxSetAtDepth(k, phi, q0, d, budget));
  return set;
}

QExact ApproxWindowMeasure(const FieldPtr& k, const TestFunction& phi,
                           const Poly& q0, int n, int window_width,
                           uint64_t budget) {
  const std::vector<int> depths = WindowDepths(n, window_width);
  if (depths.size() == 1)
    return ApproxSetMeasure(k, phi, q0, depths[0], budget);
  return BuildApproxWindow(k, phi, q0, n, window_width, budget).Measure();
}

}  // namespace ffdioph
