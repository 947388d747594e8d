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

#ifndef ALMT_MINIMAX_HPP_
#define ALMT_MINIMAX_HPP_

// Integer-weight alphabetic minimax trees.
//
// For weights y_1..y_n the alphabetic minimax cost is the minimum, over all
// ordered binary trees with n leaves, of max_i (y_i + depth of leaf i). Only
// strictly binary trees are produced; a tree is identified with its
// left-to-right leaf depth sequence.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace almt {

using Level = std::int64_t;

inline constexpr std::size_t kDefaultOracleBound = 16;

struct IntMinimaxTree {
  Level cost = 0;
  std::vector<int> depths;
};

// ceil(log2(x)) for x >= 1.
int ceil_log2(std::uint64_t x);

// ceil(x / 2^shift) for x >= 1. Large shifts saturate at 1.
std::uint64_t ceil_shift(std::uint64_t x, Level shift);

// Interval dynamic program, O(n^3). Throws Refused when n > bound.
Level alpha_int_oracle(std::span<const Level> y,
                       std::size_t bound = kDefaultOracleBound);

// Single left-to-right pass over the level structure of y. O(n).
Level alpha_int_cost(std::span<const Level> y);

// Cost plus a canonical witness. The witness is obtained by placing every
// leaf, left to right, in the leftmost free slot at the deepest depth its
// bound allows, then suppressing unary nodes.
IntMinimaxTree alpha_int_fast(std::span<const Level> y);

// Leftmost-deepest placement under per-leaf depth bounds. Returns the leaf
// depths of the contracted strictly binary tree, or nullopt when no ordered
// tree meets the bounds. Every returned depth is <= its bound.
std::optional<std::vector<int>> fit_depths(std::span<const Level> bounds);

// max_i (w_i + depths_i). Throws InputError on length mismatch.
Level tree_cost(std::span<const int> depths, std::span<const Level> w);
double tree_cost(std::span<const int> depths, std::span<const double> w);

// Stack reduction: push each depth, merge equal top pairs into their value
// minus one; valid iff exactly {0} remains.
bool is_valid_profile(std::span<const int> depths);

// Throws InfeasibleProfile naming the first failing index.
void check_profile(std::span<const int> depths);

}  // namespace almt

#endif  // ALMT_MINIMAX_HPP_
