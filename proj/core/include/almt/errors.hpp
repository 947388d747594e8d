// Copyright 2026 The almt Authors.
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

#ifndef ALMT_ERRORS_HPP_
#define ALMT_ERRORS_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace almt {

// Bad caller input: malformed files, out-of-range arguments, infeasible
// profiles. The CLI maps these to exit code 2.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A depth sequence that no ordered strictly-binary tree realizes.
class InfeasibleProfile : public InputError {
 public:
  InfeasibleProfile(std::size_t index, const std::string& what)
      : InputError(what), index_(index) {}

  // First position at which the stack reduction fails; equals the profile
  // length when the sequence ends with unfinished subtrees.
  std::size_t index() const { return index_; }

 private:
  std::size_t index_;
};

// Operation refused because its precondition does not hold (set on a bit
// that is already set, undo with an empty journal, oracle above its bound).
class Refused : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Relative entropy or average length is undefined because some symbol has
// q_i = 0 while p_i > 0.
class UndefinedDivergence : public InputError {
 public:
  UndefinedDivergence(std::size_t index, const std::string& what)
      : InputError(what), index_(index) {}
  std::size_t index() const { return index_; }

 private:
  std::size_t index_;
};

// Internal consistency check failed. Exit code 3 in the CLI.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace almt

#endif  // ALMT_ERRORS_HPP_
