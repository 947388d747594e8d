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

#include "almt/minimax.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <string>

#include "almt/errors.hpp"

namespace almt {
namespace {

void check_nonempty(std::span<const Level> y) {
  if (y.empty()) throw InputError("weight sequence is empty");
}

}  // namespace

int ceil_log2(std::uint64_t x) {
  if (x <= 1) return 0;
  return 64 - std::countl_zero(x - 1);
}

std::uint64_t ceil_shift(std::uint64_t x, Level shift) {
  if (shift <= 0) return x;
  if (shift >= 63) return x == 0 ? 0 : 1;
  const std::uint64_t unit = std::uint64_t{1} << shift;
  return (x + unit - 1) >> shift;
}

Level alpha_int_oracle(std::span<const Level> y, std::size_t bound) {
  check_nonempty(y);
  const std::size_t n = y.size();
  if (n > bound) {
    throw Refused("integer oracle refuses n = " + std::to_string(n) +
                  " (bound " + std::to_string(bound) + ")");
  }
  // best[i][j] is the cost of the best subtree over leaves i..j.
  std::vector<std::vector<Level>> best(n, std::vector<Level>(n));
  for (std::size_t i = 0; i < n; ++i) best[i][i] = y[i];
  for (std::size_t len = 2; len <= n; ++len) {
    for (std::size_t i = 0; i + len <= n; ++i) {
      const std::size_t j = i + len - 1;
      Level m = std::numeric_limits<Level>::max();
      for (std::size_t k = i; k < j; ++k) {
        m = std::min(m, std::max(best[i][k], best[k + 1][j]));
      }
      best[i][j] = m + 1;
    }
  }
  return best[0][n - 1];
}

Level alpha_int_cost(std::span<const Level> y) {
  check_nonempty(y);
  // Open level intervals, levels strictly decreasing towards the back. Each
  // carries the number of subtrees needed at its own level.
  struct Open {
    Level level;
    std::uint64_t load;
  };
  std::vector<Open> open;
  for (const Level v : y) {
    bool closed_any = false;
    Open closed{};
    while (!open.empty() && open.back().level < v) {
      Open top = open.back();
      open.pop_back();
      if (closed_any) top.load += ceil_shift(closed.load, top.level - closed.level);
      closed = top;
      closed_any = true;
    }
    if (!open.empty() && open.back().level == v) {
      Open& top = open.back();
      if (closed_any) top.load += ceil_shift(closed.load, v - closed.level);
      top.load += 1;
    } else {
      Open fresh{v, 1};
      if (closed_any) fresh.load += ceil_shift(closed.load, v - closed.level);
      open.push_back(fresh);
    }
  }
  while (open.size() > 1) {
    const Open top = open.back();
    open.pop_back();
    open.back().load += ceil_shift(top.load, open.back().level - top.level);
  }
  return open.front().level + ceil_log2(open.front().load);
}

std::optional<std::vector<int>> fit_depths(std::span<const Level> bounds) {
  const std::size_t n = bounds.size();
  if (n == 0) return std::vector<int>{};
  constexpr Level kNone = std::numeric_limits<Level>::max();

  // Consumed prefix of [0, 1) as the sorted positions of its one bits.
  std::vector<Level> bits;
  auto carry_add = [&bits](Level pos) {
    while (!bits.empty() && bits.back() == pos) {
      bits.pop_back();
      --pos;
    }
    bits.push_back(pos);
    return pos;
  };

  // lca[i] is the depth of the lowest common ancestor of leaves i and i+1.
  std::vector<Level> lca(n - 1);
  Level last_carry = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const Level bound = bounds[i];
    if (bound < 0) return std::nullopt;
    if (!bits.empty() && bits.front() == 0) return std::nullopt;
    Level round_up = kNone;
    if (!bits.empty() && bits.back() > bound) {
      while (!bits.empty() && bits.back() > bound) bits.pop_back();
      round_up = carry_add(bound);
      if (round_up == 0) return std::nullopt;
    }
    if (i > 0) lca[i - 1] = std::min(last_carry, round_up) - 1;
    last_carry = carry_add(bound);
  }

  // A leaf's depth after suppressing unary nodes is the number of branching
  // ancestors; those are the strict running minima of lca on either side.
  std::vector<int> depths(n, 0);
  std::vector<Level> records;
  for (std::size_t i = 1; i < n; ++i) {
    while (!records.empty() && records.back() >= lca[i - 1]) records.pop_back();
    records.push_back(lca[i - 1]);
    depths[i] += static_cast<int>(records.size());
  }
  records.clear();
  for (std::size_t i = n - 1; i-- > 0;) {
    while (!records.empty() && records.back() >= lca[i]) records.pop_back();
    records.push_back(lca[i]);
    depths[i] += static_cast<int>(records.size());
  }
  return depths;
}

IntMinimaxTree alpha_int_fast(std::span<const Level> y) {
  IntMinimaxTree out;
  out.cost = alpha_int_cost(y);
  std::vector<Level> bounds(y.size());
  for (std::size_t i = 0; i < y.size(); ++i) bounds[i] = out.cost - y[i];
  auto depths = fit_depths(bounds);
  if (!depths) {
    throw InvariantViolation("no tree fits the computed minimax cost " +
                             std::to_string(out.cost));
  }
  out.depths = std::move(*depths);
  return out;
}

Level tree_cost(std::span<const int> depths, std::span<const Level> w) {
  if (depths.size() != w.size() || w.empty()) {
    throw InputError("tree_cost: depth and weight sequences differ in length");
  }
  Level m = std::numeric_limits<Level>::min();
  for (std::size_t i = 0; i < w.size(); ++i) m = std::max(m, w[i] + depths[i]);
  return m;
}

double tree_cost(std::span<const int> depths, std::span<const double> w) {
  if (depths.size() != w.size() || w.empty()) {
    throw InputError("tree_cost: depth and weight sequences differ in length");
  }
  double m = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < w.size(); ++i) {
    m = std::max(m, w[i] + static_cast<double>(depths[i]));
  }
  return m;
}

void check_profile(std::span<const int> depths) {
  if (depths.empty()) throw InfeasibleProfile(0, "empty depth profile");
  std::vector<int> pending;
  for (std::size_t i = 0; i < depths.size(); ++i) {
    int d = depths[i];
    auto fail = [&](const char* why) {
      throw InfeasibleProfile(
          i, "depth profile infeasible at index " + std::to_string(i) + ": " + why);
    };
    if (d < 0) fail("negative depth");
    if (pending.size() == 1 && pending.front() == 0) fail("tree already complete");
    if (!pending.empty() && d < pending.back()) fail("leaf shallower than an unfinished sibling");
    while (!pending.empty() && pending.back() == d) {
      pending.pop_back();
      --d;
    }
    pending.push_back(d);
  }
  if (!(pending.size() == 1 && pending.front() == 0)) {
    throw InfeasibleProfile(depths.size(),
                            "depth profile leaves " + std::to_string(pending.size()) +
                                " unfinished subtree(s)");
  }
}

bool is_valid_profile(std::span<const int> depths) {
  try {
    check_profile(depths);
    return true;
  } catch (const InfeasibleProfile&) {
    return false;
  }
}

}  // namespace almt
