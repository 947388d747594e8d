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

#include "almt/real_weights.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "almt/errors.hpp"
#include "almt/level_tree.hpp"

namespace almt {

std::string_view to_string(Strategy s) { return s == Strategy::kNew ? "new" : "sorted"; }

namespace {

RealCostResult integral_result(const WeightSeq& w, Strategy strategy) {
  const auto y = w.shifted_ceilings(0.0);
  IntMinimaxTree t = alpha_int_fast(y);
  RealCostResult out;
  out.int_cost = t.cost;
  out.alpha = static_cast<double>(t.cost);
  out.offset = 0.0;
  out.depths = std::move(t.depths);
  out.strategy = strategy;
  return out;
}

void finish(const WeightSeq& w, double offset, RealCostResult& out) {
  IntMinimaxTree t = alpha_int_fast(w.shifted_ceilings(offset));
  out.offset = offset;
  out.int_cost = t.cost;
  out.alpha = static_cast<double>(t.cost) + offset;
  out.depths = std::move(t.depths);
}

}  // namespace

RealCostResult alpha_real_sorted(const WeightSeq& w) {
  if (w.all_integral()) return integral_result(w, Strategy::kSorted);
  std::vector<double> b(w.fractions().begin(), w.fractions().end());
  std::sort(b.begin(), b.end());
  b.erase(std::unique(b.begin(), b.end()), b.end());

  RealCostResult out;
  out.strategy = Strategy::kSorted;
  auto probe = [&](double offset) {
    ++out.stats.cost_queries;
    return alpha_int_cost(w.shifted_ceilings(offset));
  };
  const Level target = probe(b.back());
  // Cost is nonincreasing in the offset; find the first b_j reaching target.
  std::size_t lo = 0;
  std::size_t hi = b.size() - 1;
  while (lo < hi) {
    const std::size_t mid = lo + (hi - lo) / 2;
    ++out.stats.steps;
    if (probe(b[mid]) == target) {
      hi = mid;
    } else {
      lo = mid + 1;
    }
  }
  finish(w, b[lo], out);
  return out;
}

RealCostResult alpha_real_new(const WeightSeq& w, const SearchOptions& options) {
  if (w.all_integral()) return integral_result(w, Strategy::kNew);
  const auto fractions = w.fractions();
  const std::size_t n = w.size();

  RealCostResult out;
  out.strategy = Strategy::kNew;
  const double top = *std::max_element(fractions.begin(), fractions.end());
  const Level target = alpha_int_cost(w.shifted_ceilings(top));

  SearchWorkspace local;
  SearchWorkspace& ws = options.workspace != nullptr ? *options.workspace : local;
  if (ws.tree_) {
    ws.tree_->reset(w.weights());
  } else {
    ws.tree_.emplace(w.weights());
  }
  LevelTree& tree = *ws.tree_;
  std::vector<FracItem>& items = ws.items_;
  items.resize(n);
  for (std::size_t i = 0; i < n; ++i) items[i] = {fractions[i], static_cast<int>(i)};
  std::vector<double>& scratch = ws.scratch_;

  double candidate = top;
  std::size_t lo = 0;
  std::size_t hi = n;
  while (lo < hi) {
    const std::size_t m = hi - lo;
    out.stats.step_sizes.push_back(m);
    ++out.stats.steps;
    scratch.resize(m);
    for (std::size_t i = 0; i < m; ++i) scratch[i] = items[lo + i].value;
    const double median =
        select_kth_inplace(scratch, (m + 1) / 2, options.select, &out.stats.partition_work);

    // [lo, less) < median, [less, greater) == median, [greater, hi) > median.
    std::size_t less = lo;
    std::size_t mid = lo;
    std::size_t greater = hi;
    while (mid < greater) {
      if (items[mid].value < median) {
        std::swap(items[less++], items[mid++]);
      } else if (items[mid].value > median) {
        std::swap(items[mid], items[--greater]);
      } else {
        ++mid;
      }
    }
    out.stats.partition_work += m;

    std::uint64_t issued = 0;
    for (std::size_t i = lo; i < greater; ++i) {
      if (items[i].value != 0.0) {
        tree.set(static_cast<std::size_t>(items[i].index));
        ++issued;
      }
    }
    ++out.stats.cost_queries;
    const Level cost = tree.cost();
    if (options.audit) tree.audit();
    if (cost < target) {
      throw InvariantViolation("median search: probe cost " + std::to_string(cost) +
                               " below target " + std::to_string(target));
    }
    if (cost == target) {
      candidate = median;
      for (std::uint64_t k = 0; k < issued; ++k) tree.undo();
      hi = less;
    } else {
      // These sets are never undone; the search only moves right from here.
      tree.commit();
      lo = greater;
    }
  }

  out.stats.sets = tree.counters().sets;
  out.stats.undos = tree.counters().undos;
  out.stats.finds = tree.union_find().finds();
  out.stats.find_steps = tree.union_find().find_steps();
  out.stats.unions = tree.union_find().unions();
  out.stats.deunions = tree.union_find().deunions();
  finish(w, candidate, out);
  return out;
}

double alpha_real_oracle(std::span<const double> w, std::size_t bound) {
  check_weights(w);
  const std::size_t n = w.size();
  if (n > bound) {
    throw Refused("real oracle refuses n = " + std::to_string(n) + " (bound " +
                  std::to_string(bound) + ")");
  }
  // Depth-first over all trees: each pending segment [lo, hi] at a depth is
  // either a single leaf or split at every possible point.
  struct Segment {
    int lo;
    int hi;
    int depth;
  };
  double best = std::numeric_limits<double>::infinity();
  std::vector<Segment> pending{{0, static_cast<int>(n) - 1, 0}};
  auto walk = [&](auto&& self, std::vector<Segment>& todo, double worst) -> void {
    if (worst >= best) return;
    if (todo.empty()) {
      best = worst;
      return;
    }
    const Segment s = todo.back();
    todo.pop_back();
    if (s.lo == s.hi) {
      self(self, todo, std::max(worst, w[s.lo] + s.depth));
    } else {
      for (int k = s.lo; k < s.hi; ++k) {
        todo.push_back({k + 1, s.hi, s.depth + 1});
        todo.push_back({s.lo, k, s.depth + 1});
        self(self, todo, worst);
        todo.pop_back();
        todo.pop_back();
      }
    }
    todo.push_back(s);
  };
  walk(walk, pending, -std::numeric_limits<double>::infinity());
  return best;
}

Strategy choose_strategy(std::size_t n, std::size_t d) {
  const std::uint64_t m = std::max<std::size_t>(n, 4);
  const int log_n = ceil_log2(m);
  const int log_log_n = ceil_log2(static_cast<std::uint64_t>(log_n));
  return static_cast<std::uint64_t>(d) * static_cast<std::uint64_t>(log_log_n) <
                 static_cast<std::uint64_t>(log_n)
             ? Strategy::kNew
             : Strategy::kSorted;
}

Strategy choose_strategy(const WeightSeq& w) {
  return choose_strategy(w.size(), w.distinct_ceilings());
}

RealCostResult alpha_real(const WeightSeq& w) { return alpha_real(w, choose_strategy(w)); }

RealCostResult alpha_real(const WeightSeq& w, Strategy strategy) {
  return strategy == Strategy::kNew ? alpha_real_new(w) : alpha_real_sorted(w);
}

}  // namespace almt
