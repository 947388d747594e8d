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

#ifndef ALMT_WEIGHTS_HPP_
#define ALMT_WEIGHTS_HPP_

#include <cmath>
#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

#include "almt/minimax.hpp"

namespace almt {

// Weights must be finite with |w| <= 2^50 so that ceilings, shifted levels
// and depth sums stay exact in both double and int64 arithmetic.
inline constexpr double kMaxAbsWeight = 1125899906842624.0;

inline bool is_integral(double w) { return w == std::floor(w); }
inline Level ceil_level(double w) { return static_cast<Level>(std::ceil(w)); }
inline double fractional_part(double w) { return w - std::floor(w); }

// Throws InputError for an empty sequence or a weight out of range.
void check_weights(std::span<const double> w);

// Real weights with the derived data the search needs.
class WeightSeq {
 public:
  explicit WeightSeq(std::vector<double> weights);

  std::size_t size() const { return weights_.size(); }
  std::span<const double> weights() const { return weights_; }
  std::span<const double> fractions() const { return fractions_; }
  // Number of distinct ceil(w_i).
  std::size_t distinct_ceilings() const { return distinct_; }
  bool all_integral() const { return all_integral_; }

  // ceil(w_i - b) for an offset b in [0, 1). Computed from the stored
  // fractional parts: floor(w_i) + [f_i > b].
  std::vector<Level> shifted_ceilings(double b) const;

 private:
  std::vector<double> weights_;
  std::vector<double> fractions_;
  std::size_t distinct_ = 0;
  bool all_integral_ = true;
};

std::size_t count_distinct_ceilings(std::span<const double> w);

// One weight per line or comma separated; blank lines are skipped. Errors
// name the 1-based line.
std::vector<double> parse_weights(std::string_view text);

// Rejects non-integral values.
std::vector<Level> to_int_weights(std::span<const double> w);

}  // namespace almt

#endif  // ALMT_WEIGHTS_HPP_
