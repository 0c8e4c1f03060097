// Copyright 2026 The quotlift Authors
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

#ifndef QUOTLIFT_ERRORS_H_
#define QUOTLIFT_ERRORS_H_

#include <stdexcept>
#include <string>

namespace quotlift {

// Malformed input: bad partitions, non-permutations, out-of-range points,
// unparsable JSON. The CLI maps this to exit code 2.
class InputError : public std::invalid_argument {
 public:
  explicit InputError(const std::string& what) : std::invalid_argument(what) {}
};

// A stated precondition of an operation does not hold (containment,
// normality witness, invariance demands).
class PreconditionError : public std::logic_error {
 public:
  explicit PreconditionError(const std::string& what)
      : std::logic_error(what) {}
};

// A checked inequality or construction invariant failed. `constraint` names
// the inequality so that reports can point at it.
class ConstraintViolation : public std::runtime_error {
 public:
  ConstraintViolation(std::string constraint, const std::string& what)
      : std::runtime_error(what), constraint_(std::move(constraint)) {}
  const std::string& constraint() const { return constraint_; }

 private:
  std::string constraint_;
};

// A lazy query or construction ran past the enumerated window.
class WindowError : public std::out_of_range {
 public:
  explicit WindowError(const std::string& what) : std::out_of_range(what) {}
};

}  // namespace quotlift

#endif  // QUOTLIFT_ERRORS_H_
