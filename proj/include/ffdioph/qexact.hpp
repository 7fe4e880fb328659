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

#ifndef FFDIOPH_QEXACT_HPP_
#define FFDIOPH_QEXACT_HPP_

#include <cstdint>
#include <string>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>

#include "ffdioph/errors.hpp"

namespace ffdioph {

using BigInt = boost::multiprecision::cpp_int;

inline BigInt BigPow(uint32_t base, int exp) {
  BigInt r = 1;
  BigInt b = base;
  for (int e = exp; e > 0; e >>= 1) {
    if (e & 1) r *= b;
    b *= b;
  }
  return r;
}

// An exact rational num / q^k.  Measures of coefficient cylinders and their
// finite unions always have this shape, so no general-denominator rationals
// are needed; keeping the denominator a power of q also keeps the printed
// form ("num/q^k" with the power multiplied out) canonical.
class QExact {
 public:
  QExact(uint32_t q, BigInt num, int kexp) : q_(q), num_(std::move(num)) {
    if (q < 2) Fail(ErrorKind::kUsage, "exact rationals need q >= 2");
    if (kexp < 0) {
      num_ *= BigPow(q, -kexp);
      kexp = 0;
    }
    kexp_ = kexp;
    Normalize();
  }

  static QExact Zero(uint32_t q) { return QExact(q, 0, 0); }
  static QExact One(uint32_t q) { return QExact(q, 1, 0); }
  // q^exp for any sign of exp.
  static QExact PowQ(uint32_t q, int exp) {
    return exp >= 0 ? QExact(q, BigPow(q, exp), 0) : QExact(q, 1, -exp);
  }

  uint32_t q() const { return q_; }
  const BigInt& num() const { return num_; }
  int kexp() const { return kexp_; }
  bool IsZero() const { return num_ == 0; }

  QExact operator+(const QExact& o) const {
    Check(o);
    const int k = std::max(kexp_, o.kexp_);
    return QExact(q_,
                  num_ * BigPow(q_, k - kexp_) + o.num_ * BigPow(q_, k - o.kexp_),
                  k);
  }
  QExact operator-() const { return QExact(q_, -num_, kexp_); }
  QExact operator-(const QExact& o) const { return *this + (-o); }
  QExact operator*(const QExact& o) const {
    Check(o);
    return QExact(q_, num_ * o.num_, kexp_ + o.kexp_);
  }

  bool operator==(const QExact& o) const {
    Check(o);
    return kexp_ == o.kexp_ && num_ == o.num_;
  }
  bool operator!=(const QExact& o) const { return !(*this == o); }
  bool operator<(const QExact& o) const {
    Check(o);
    const int k = std::max(kexp_, o.kexp_);
    return num_ * BigPow(q_, k - kexp_) < o.num_ * BigPow(q_, k - o.kexp_);
  }
  bool operator<=(const QExact& o) const { return *this < o || *this == o; }
  bool operator>(const QExact& o) const { return o < *this; }
  bool operator>=(const QExact& o) const { return o <= *this; }

  // "0", "33/16", "-1/4", ...: the denominator printed as the integer q^k.
  std::string Render() const {
    if (kexp_ == 0) return num_.str();
    return num_.str() + "/" + BigPow(q_, kexp_).str();
  }

  double ToDouble() const {
    namespace mp = boost::multiprecision;
    return mp::cpp_rational(num_, BigPow(q_, kexp_)).convert_to<double>();
  }

 private:
  void Normalize() {
    if (num_ == 0) {
      kexp_ = 0;
      return;
    }
    while (kexp_ > 0 && num_ % q_ == 0) {
      num_ /= q_;
      --kexp_;
    }
  }

  void Check(const QExact& o) const {
    if (q_ != o.q_)
      Fail(ErrorKind::kFieldMismatch,
           "exact rationals over different q cannot mix");
  }

  uint32_t q_;
  BigInt num_;
  int kexp_;  // >= 0
};

}  // namespace ffdioph

#endif  // FFDIOPH_QEXACT_HPP_
