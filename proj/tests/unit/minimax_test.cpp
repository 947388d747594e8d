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

#include <gtest/gtest.h>

#include <random>
#include <vector>

#include "almt/errors.hpp"
#include "almt/tree.hpp"
#include "oracles.hpp"

namespace almt {
namespace {

using Seq = std::vector<Level>;

const Seq kTenLeaves = {4, 5, 2, 2, 2, 1, 2, 3, 6, 4};

TEST(AlphaIntOracle, SingleLeaf) { EXPECT_EQ(alpha_int_oracle(Seq{5}), 5); }

TEST(AlphaIntOracle, BalancedFour) { EXPECT_EQ(alpha_int_oracle(Seq{0, 0, 0, 0}), 2); }

TEST(AlphaIntOracle, ThreeLeaves) { EXPECT_EQ(alpha_int_oracle(Seq{0, 1, 0}), 3); }

TEST(AlphaIntOracle, TenLeafWeights) { EXPECT_EQ(alpha_int_oracle(kTenLeaves), 8); }

TEST(AlphaIntOracle, RefusesAboveBound) {
  EXPECT_THROW(alpha_int_oracle(Seq(17, 0)), Refused);
  EXPECT_EQ(alpha_int_oracle(Seq(17, 0), 17), 5);
}

TEST(AlphaIntOracle, MatchesTreeEnumeration) {
  std::mt19937_64 rng(11);
  for (int n = 1; n <= 8; ++n) {
    const auto profiles = testing::all_profiles(n);
    for (int trial = 0; trial < 50; ++trial) {
      Seq y(n);
      for (auto& v : y) v = static_cast<Level>(rng() % 9) - 4;
      EXPECT_EQ(alpha_int_oracle(y), testing::brute_force_alpha(y, profiles));
    }
  }
}

TEST(AlphaIntFast, DecrementedUniformRun) {
  EXPECT_EQ(alpha_int_fast(Seq{1, 1, 2, 2, 2}).cost, 4);
}

TEST(AlphaIntFast, UniformWeightsGiveBalancedCost) {
  for (Level k : {-3, 0, 7}) {
    for (std::size_t n : {1, 2, 3, 5, 8, 9, 100, 1024, 1025}) {
      EXPECT_EQ(alpha_int_fast(Seq(n, k)).cost, k + ceil_log2(n)) << "n=" << n;
    }
  }
}

TEST(AlphaIntFast, TenLeafWitness) {
  const IntMinimaxTree t = alpha_int_fast(kTenLeaves);
  EXPECT_EQ(t.cost, 8);
  EXPECT_TRUE(is_valid_profile(t.depths));
  EXPECT_EQ(tree_cost(t.depths, kTenLeaves), 8);
  // Canonical witness: leftmost-deepest placement, unary nodes suppressed.
  EXPECT_EQ(t.depths, (std::vector<int>{3, 3, 5, 5, 5, 5, 4, 4, 2, 2}));
}

TEST(AlphaIntFast, NegativeAndWideWeights) {
  EXPECT_EQ(alpha_int_fast(Seq{0, -1000}).cost, 1);
  EXPECT_EQ(alpha_int_fast(Seq{-5, -5}).cost, -4);
  const Seq skew = {40, 0, 0, 0, 0, 0, 0, 0};
  const auto t = alpha_int_fast(skew);
  EXPECT_EQ(t.cost, 41);
  EXPECT_TRUE(is_valid_profile(t.depths));
}

TEST(AlphaIntFast, OracleEquivalenceExhaustive) {
  for (int n = 1; n <= 6; ++n) {
    Seq y(n, 0);
    while (true) {
      const IntMinimaxTree t = alpha_int_fast(y);
      ASSERT_EQ(t.cost, alpha_int_oracle(y));
      ASSERT_EQ(alpha_int_cost(y), t.cost);
      ASSERT_TRUE(is_valid_profile(t.depths));
      ASSERT_EQ(tree_cost(t.depths, y), t.cost);
      int i = 0;
      while (i < n && y[i] == 4) y[i++] = 0;
      if (i == n) break;
      ++y[i];
    }
  }
}

TEST(AlphaIntFast, OracleEquivalenceRandom) {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 10000; ++trial) {
    const int n = 7 + static_cast<int>(rng() % 4);
    Seq y(n);
    for (auto& v : y) v = static_cast<Level>(rng() % 5);
    const IntMinimaxTree t = alpha_int_fast(y);
    ASSERT_EQ(t.cost, alpha_int_oracle(y));
    ASSERT_EQ(tree_cost(t.depths, y), t.cost);
  }
}

TEST(AlphaIntFast, ShiftInvariance) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 2000; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 40);
    Seq y(n);
    for (auto& v : y) v = static_cast<Level>(rng() % 11) - 5;
    const Level c = static_cast<Level>(rng() % 17) - 8;
    Seq shifted = y;
    for (auto& v : shifted) v += c;
    ASSERT_EQ(alpha_int_fast(shifted).cost, alpha_int_fast(y).cost + c);
  }
}

TEST(AlphaIntFast, MonotoneUnderDecrement) {
  std::mt19937_64 rng(6);
  for (int trial = 0; trial < 2000; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 40);
    Seq y(n);
    for (auto& v : y) v = static_cast<Level>(rng() % 7);
    const Level before = alpha_int_fast(y).cost;
    --y[rng() % n];
    ASSERT_LE(alpha_int_fast(y).cost, before);
  }
}

TEST(AlphaIntFast, CostBounds) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 2000; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 300);
    Seq y(n);
    for (auto& v : y) v = static_cast<Level>(rng() % 20) - 10;
    const Level top = *std::max_element(y.begin(), y.end());
    const IntMinimaxTree t = alpha_int_fast(y);
    ASSERT_GE(t.cost, top);
    ASSERT_LE(t.cost, top + ceil_log2(n));
    ASSERT_TRUE(is_valid_profile(t.depths));
    ASSERT_EQ(tree_cost(t.depths, y), t.cost);
  }
}

TEST(AlphaIntFast, RejectsEmpty) { EXPECT_THROW(alpha_int_fast(Seq{}), InputError); }

TEST(FitDepths, AgreesWithKraftPlacement) {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 5000; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 12);
    std::vector<Level> bounds(n);
    for (auto& b : bounds) b = static_cast<Level>(rng() % 6);
    const auto depths = fit_depths(bounds);
    ASSERT_EQ(depths.has_value(), testing::fits_bounds(bounds));
    if (depths) {
      ASSERT_TRUE(is_valid_profile(*depths));
      for (int i = 0; i < n; ++i) ASSERT_LE((*depths)[i], bounds[i]);
    }
  }
}

TEST(FitDepths, Infeasible) {
  EXPECT_FALSE(fit_depths(std::vector<Level>{0, 0}).has_value());
  EXPECT_FALSE(fit_depths(std::vector<Level>{1, 1, 1}).has_value());
  EXPECT_FALSE(fit_depths(std::vector<Level>{2, -1}).has_value());
  EXPECT_EQ(*fit_depths(std::vector<Level>{0}), std::vector<int>{0});
}

TEST(TreeCost, Examples) {
  EXPECT_EQ(tree_cost(std::vector<int>{1, 1}, Seq{3, 7}), 8);
  EXPECT_EQ(tree_cost(std::vector<int>{1, 2, 2}, Seq{0, 0, 0}), 2);
  EXPECT_EQ(tree_cost(std::vector<int>{4, 3, 6, 6, 6, 7, 6, 5, 2, 4}, kTenLeaves), 8);
  EXPECT_DOUBLE_EQ(tree_cost(std::vector<int>{1, 1}, std::vector<double>{1.2, 0.3}), 2.2);
}

TEST(TreeCost, LengthMismatch) {
  EXPECT_THROW(tree_cost(std::vector<int>{1, 1}, Seq{1}), InputError);
}

TEST(CheckProfile, NamesFirstFailingIndex) {
  auto index_of = [](std::vector<int> d) -> std::size_t {
    try {
      check_profile(d);
    } catch (const InfeasibleProfile& e) {
      return e.index();
    }
    return static_cast<std::size_t>(-1);
  };
  EXPECT_EQ(index_of({2, 2, 2}), 3u);
  EXPECT_EQ(index_of({2, 1, 2}), 1u);
  EXPECT_EQ(index_of({1, 1, 1}), 2u);
  EXPECT_EQ(index_of({0, 1}), 1u);
  EXPECT_EQ(index_of({1, -1}), 1u);
  EXPECT_EQ(index_of({1, 1}), static_cast<std::size_t>(-1));
}

TEST(DepthsToTree, TwoLeaves) {
  const auto t = OrderedTree::from_depths(std::vector<int>{1, 1});
  EXPECT_EQ(t.size(), 3u);
  EXPECT_EQ(t.parent_array(), (std::vector<int>{-1, 0, 0}));
  EXPECT_EQ(t.to_parens(), "(()())");
}

TEST(DepthsToTree, LeftLeafRightInternal) {
  const auto t = OrderedTree::from_depths(std::vector<int>{1, 2, 2});
  EXPECT_EQ(t.parent_array(), (std::vector<int>{-1, 0, 0, 2, 2}));
  EXPECT_TRUE(t.is_leaf(t.left(0)));
  EXPECT_FALSE(t.is_leaf(t.right(0)));
  EXPECT_EQ(t.to_parens(), "(()(()()))");
}

TEST(DepthsToTree, SingleLeaf) {
  const auto t = OrderedTree::from_depths(std::vector<int>{0});
  EXPECT_EQ(t.parent_array(), std::vector<int>{-1});
  EXPECT_EQ(t.to_parens(), "()");
}

TEST(DepthsToTree, RejectsResidue) {
  EXPECT_THROW(OrderedTree::from_depths(std::vector<int>{2, 2, 2}), InfeasibleProfile);
}

TEST(DepthsToTree, RoundTripsEveryProfile) {
  for (int n = 1; n <= 9; ++n) {
    for (const auto& p : testing::all_profiles(n)) {
      const auto t = OrderedTree::from_depths(p);
      ASSERT_EQ(t.leaf_depths(), p);
      ASSERT_EQ(t.size(), 2u * n - 1);
    }
  }
}

TEST(ValidProfile, AcceptsExactlyTheEnumeratedProfiles) {
  // All sequences over {0..4} of length 4 vs the enumerated set.
  const auto profiles = testing::all_profiles(4);
  std::vector<int> d(4, 0);
  int accepted = 0;
  while (true) {
    if (is_valid_profile(d)) {
      ++accepted;
      EXPECT_NE(std::find(profiles.begin(), profiles.end(), d), profiles.end());
    }
    int i = 0;
    while (i < 4 && d[i] == 4) d[i++] = 0;
    if (i == 4) break;
    ++d[i];
  }
  EXPECT_EQ(accepted, static_cast<int>(profiles.size()));
}

TEST(CeilHelpers, Values) {
  EXPECT_EQ(ceil_log2(1), 0);
  EXPECT_EQ(ceil_log2(2), 1);
  EXPECT_EQ(ceil_log2(5), 3);
  EXPECT_EQ(ceil_log2(1024), 10);
  EXPECT_EQ(ceil_shift(5, 1), 3u);
  EXPECT_EQ(ceil_shift(5, 0), 5u);
  EXPECT_EQ(ceil_shift(5, 100), 1u);
}

}  // namespace
}  // namespace almt
