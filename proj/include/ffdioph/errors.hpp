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

#ifndef FFDIOPH_ERRORS_HPP_
#define FFDIOPH_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace ffdioph {

// Every failure in the library throws Error with a machine-checkable kind.
// Budget and precision failures are explicit errors, never silent truncation.
enum class ErrorKind {
  kNonPrimeP,
  kReducibleModulus,
  kInvalidModulus,
  kCoefficientOutOfRange,
  kSyntaxError,
  kDivisionByZeroPoly,
  kBothZero,
  kFieldMismatch,
  kZeroInverse,
  kPrecisionExhausted,
  kPrecisionTooSmall,
  kEqualSeries,
  kMalformedDigits,
  kNotReduced,
  kNotInUnitBall,
  kNotUnimodular,
  kBudgetExceeded,
  kPhiOutOfRegime,
  kThresholdOnBoundary,
  kEmptyWindow,
  kNoCertifiedDigits,
  kUnsupportedFamily,
  kUsage,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void Fail(ErrorKind kind, const std::string& what) {
  throw Error(kind, what);
}

}  // namespace ffdioph

#endif  // FFDIOPH_ERRORS_HPP_
