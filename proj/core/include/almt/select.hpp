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

#ifndef ALMT_SELECT_HPP_
#define ALMT_SELECT_HPP_

#include <cstddef>
#include <cstdint>
#include <span>

namespace almt {

enum class SelectMethod {
  kMedianOfMedians,  // worst-case linear, groups of five
  kRandomized,       // expected linear quickselect
};

// k-th smallest value, 1-based rank. Throws InputError when values is empty
// or k is outside [1, size].
double select_kth(std::span<const double> values, std::size_t k,
                  SelectMethod method = SelectMethod::kMedianOfMedians);

// Same, permuting values in place. Adds the number of element moves and
// comparisons performed to *work when work is non-null.
double select_kth_inplace(std::span<double> values, std::size_t k, SelectMethod method,
                          std::uint64_t* work = nullptr);

}  // namespace almt

#endif  // ALMT_SELECT_HPP_
