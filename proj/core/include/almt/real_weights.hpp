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

#ifndef ALMT_REAL_WEIGHTS_HPP_
#define ALMT_REAL_WEIGHTS_HPP_

// Alphabetic minimax trees for real weights.
//
// With B the sorted fractional parts of w, the smallest b in B for which
// alpha(ceil(w - b)) equals alpha(ceil(w - max B)) gives
// alpha(w) = alpha(ceil(w - b)) + b, and any optimal tree for the integer
// sequence ceil(w - b) is optimal for w. alpha_real_sorted finds b by binary
// search over sorted B; alpha_real_new finds it by a median search over the
// unsorted fractional parts, answering each probe with a LevelTree.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "almt/level_tree.hpp"
#include "almt/minimax.hpp"
#include "almt/select.hpp"
#include "almt/weights.hpp"

namespace almt {

inline constexpr std::size_t kDefaultRealOracleBound = 12;

enum class Strategy { kNew, kSorted };

std::string_view to_string(Strategy s);

struct SearchStats {
  std::uint64_t sets = 0;
  std::uint64_t undos = 0;
  std::uint64_t finds = 0;
  std::uint64_t find_steps = 0;
  std::uint64_t unions = 0;
  std::uint64_t deunions = 0;
  std::uint64_t partition_work = 0;
  std::uint64_t steps = 0;
  std::uint64_t cost_queries = 0;
  // Largest multiset processed at step k, indexed by k.
  std::vector<std::uint64_t> step_sizes;
};

struct RealCostResult {
  double alpha = 0;
  double offset = 0;
  Level int_cost = 0;
  std::vector<int> depths;
  Strategy strategy = Strategy::kSorted;
  SearchStats stats;
};

struct SearchOptions;

// A fractional part with the index of its weight.
struct FracItem {
  double value;
  int index;
};

// Storage for alpha_real_new that outlives a call. Passing the same
// workspace to repeated searches reuses the level tree and item buffers
// instead of allocating them afresh; results are identical either way.
// One workspace per thread.
class SearchWorkspace {
 public:
  SearchWorkspace() = default;

 private:
  friend RealCostResult alpha_real_new(const WeightSeq& w, const SearchOptions& options);

  std::optional<LevelTree> tree_;
  std::vector<FracItem> items_;
  std::vector<double> scratch_;
};

struct SearchOptions {
  SelectMethod select = SelectMethod::kMedianOfMedians;
  // Run LevelTree::audit() after every probe. Test use only.
  bool audit = false;
  // Optional reusable storage; nullptr allocates per call.
  SearchWorkspace* workspace = nullptr;
};

// O(n log n) baseline: sort the fractional parts, then binary search.
RealCostResult alpha_real_sorted(const WeightSeq& w);

// Median search without sorting; O(n) set/undo operations in total.
RealCostResult alpha_real_new(const WeightSeq& w, const SearchOptions& options = {});

// Enumerates every ordered strictly-binary tree. Throws Refused when
// n > bound.
double alpha_real_oracle(std::span<const double> w,
                         std::size_t bound = kDefaultRealOracleBound);

// kNew iff d * ceil(log2 log2 max(n,4)) < ceil(log2 max(n,4)).
Strategy choose_strategy(std::size_t n, std::size_t d);
Strategy choose_strategy(const WeightSeq& w);

// Dispatches on choose_strategy.
RealCostResult alpha_real(const WeightSeq& w);
RealCostResult alpha_real(const WeightSeq& w, Strategy strategy);

}  // namespace almt

#endif  // ALMT_REAL_WEIGHTS_HPP_
