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

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "almt/errors.hpp"
#include "almt/instances.hpp"
#include "almt/minimax.hpp"
#include "oracles.hpp"

namespace almt {
namespace {

using Vec = std::vector<double>;

// Weights drawn with few distinct fractional parts so ties are exercised.
Vec random_weights(std::mt19937_64& rng, int n) {
  static constexpr double kFractions[] = {0.0, 0.125, 0.25, 0.5, 0.75, 0.3, 0.9};
  Vec w(n);
  for (auto& x : w) {
    x = static_cast<double>(static_cast<int>(rng() % 7) - 3) + kFractions[rng() % 7];
  }
  return w;
}

void expect_consistent(const WeightSeq& w, const RealCostResult& r) {
  EXPECT_EQ(r.alpha, static_cast<double>(r.int_cost) + r.offset);
  EXPECT_TRUE(is_valid_profile(r.depths));
  EXPECT_NEAR(tree_cost(r.depths, w.weights()), r.alpha, 1e-9);
}

TEST(AlphaRealOracle, Examples) {
  EXPECT_DOUBLE_EQ(alpha_real_oracle(Vec{0.5}), 0.5);
  EXPECT_DOUBLE_EQ(alpha_real_oracle(Vec{1.2, 0.3}), 2.2);
  EXPECT_DOUBLE_EQ(alpha_real_oracle(Vec{0.9, 0.1, 0.9}), 2.9);
  EXPECT_THROW(alpha_real_oracle(Vec(13, 0.5)), Refused);
}

TEST(AlphaRealOracle, MatchesIntervalDpOnIntegers) {
  const auto profiles = testing::all_profiles(7);
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 7);
    std::vector<Level> y(n);
    for (auto& v : y) v = static_cast<Level>(rng() % 5);
    const Vec w(y.begin(), y.end());
    EXPECT_EQ(alpha_real_oracle(w), static_cast<double>(alpha_int_oracle(y)));
  }
}

TEST(AlphaRealSorted, Examples) {
  const auto a = alpha_real_sorted(WeightSeq({1.2, 0.3}));
  EXPECT_NEAR(a.alpha, 2.2, 1e-12);
  EXPECT_NEAR(a.offset, 0.2, 1e-12);
  EXPECT_EQ(a.depths, (std::vector<int>{1, 1}));
  const auto b = alpha_real_sorted(WeightSeq({0.5, 0.5}));
  EXPECT_EQ(b.alpha, 1.5);
  EXPECT_EQ(b.offset, 0.5);
  const auto c = alpha_real_sorted(WeightSeq({3, 1, 2}));
  EXPECT_EQ(c.offset, 0.0);
  EXPECT_EQ(c.alpha, static_cast<double>(alpha_int_fast(std::vector<Level>{3, 1, 2}).cost));
}

TEST(AlphaRealNew, Examples) {
  const auto a = alpha_real_new(WeightSeq({1.2, 0.3}));
  EXPECT_NEAR(a.alpha, 2.2, 1e-12);
  EXPECT_NEAR(a.offset, 0.2, 1e-12);
  const auto c = alpha_real_new(WeightSeq({3, 1, 2}));
  EXPECT_EQ(c.offset, 0.0);
  EXPECT_EQ(c.stats.sets, 0u);
  const auto single = alpha_real_new(WeightSeq({-2.75}));
  EXPECT_EQ(single.alpha, -2.75);
}

TEST(AlphaRealNew, IntegralOffsetWhenSomeWeightsAreIntegral) {
  // The unshifted ceilings already achieve the optimum, so b = 0.
  const WeightSeq w({1, 0.5});
  const auto a = alpha_real_new(w);
  const auto b = alpha_real_sorted(w);
  EXPECT_EQ(a.alpha, 2.0);
  EXPECT_EQ(a.offset, 0.0);
  EXPECT_EQ(b.offset, 0.0);
  EXPECT_EQ(alpha_real_oracle(w.weights()), 2.0);
}

TEST(RealWeights, CrossAlgorithmAgreementSmall) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 10000; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 10);
    const WeightSeq w(random_weights(rng, n));
    SearchOptions options;
    options.audit = true;
    options.select = trial % 2 ? SelectMethod::kRandomized : SelectMethod::kMedianOfMedians;
    const auto a = alpha_real_new(w, options);
    const auto b = alpha_real_sorted(w);
    ASSERT_EQ(a.offset, b.offset);
    ASSERT_NEAR(a.alpha, b.alpha, 1e-9);
    ASSERT_NEAR(a.alpha, alpha_real_oracle(w.weights()), 1e-9);
    expect_consistent(w, a);
    expect_consistent(w, b);
  }
}

TEST(RealWeights, CrossAlgorithmAgreementControlledD) {
  for (std::size_t n : {17u, 250u, 1000u}) {
    for (std::size_t d : {std::size_t{1}, std::size_t{2}, std::size_t{4}, n}) {
      for (std::uint64_t t = 0; t < 5; ++t) {
        const WeightSeq w(generate_weights(n, d, trial_seed(99, t)));
        ASSERT_EQ(w.distinct_ceilings(), d);
        const auto a = alpha_real_new(w);
        const auto b = alpha_real_sorted(w);
        ASSERT_EQ(a.offset, b.offset) << "n=" << n << " d=" << d;
        ASSERT_NEAR(a.alpha, b.alpha, 1e-9);
        expect_consistent(w, a);
      }
    }
  }
}

TEST(RealWeights, CostIsMonotoneInOffset) {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 500; ++trial) {
    const WeightSeq w(random_weights(rng, 1 + static_cast<int>(rng() % 12)));
    Vec b(w.fractions().begin(), w.fractions().end());
    std::sort(b.begin(), b.end());
    Level previous = alpha_int_fast(w.shifted_ceilings(0.0)).cost;
    for (double offset : b) {
      const Level cost = alpha_int_fast(w.shifted_ceilings(offset)).cost;
      ASSERT_LE(cost, previous);
      previous = cost;
    }
  }
}

TEST(RealWeights, ReductionPicksSmallestOffsetReachingTarget) {
  std::mt19937_64 rng(19);
  for (int trial = 0; trial < 500; ++trial) {
    const WeightSeq w(random_weights(rng, 1 + static_cast<int>(rng() % 9)));
    Vec b(w.fractions().begin(), w.fractions().end());
    b.push_back(0.0);
    std::sort(b.begin(), b.end());
    const Level target = alpha_int_fast(w.shifted_ceilings(b.back())).cost;
    double best = b.back();
    for (double offset : b) {
      if (alpha_int_fast(w.shifted_ceilings(offset)).cost == target) {
        best = offset;
        break;
      }
    }
    const auto r = alpha_real(w);
    EXPECT_EQ(r.offset, best);
    EXPECT_NEAR(r.alpha, static_cast<double>(target) + best, 1e-12);
    EXPECT_NEAR(r.alpha, alpha_real_oracle(w.weights()), 1e-9);
  }
}

TEST(RealWeights, SetBudgetAndWorkAccounting) {
  for (std::size_t d : {1u, 2u, 4u, 8u}) {
    const std::size_t n = 1 << 14;
    const WeightSeq w(generate_weights(n, d, 7 + d));
    const auto r = alpha_real_new(w);
    EXPECT_LE(r.stats.sets, 4 * n);
    EXPECT_LE(r.stats.undos, r.stats.sets);
    EXPECT_LE(r.stats.deunions, r.stats.unions);
    EXPECT_LE(r.stats.partition_work, 40 * n);
    ASSERT_EQ(r.stats.step_sizes.size(), r.stats.steps);
    ASSERT_FALSE(r.stats.step_sizes.empty());
    EXPECT_EQ(r.stats.step_sizes[0], n);
    for (std::size_t k = 1; k < r.stats.step_sizes.size(); ++k) {
      // Without duplicate values each step at least halves the multiset.
      EXPECT_LE(r.stats.step_sizes[k], r.stats.step_sizes[k - 1] / 2) << "k=" << k;
    }
  }
}

TEST(AlphaRealNew, WorkspaceGivesIdenticalResults) {
  SearchWorkspace workspace;
  SearchOptions reuse;
  reuse.workspace = &workspace;
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 60; ++trial) {
    // Sizes go up and down so the workspace both grows and shrinks.
    const std::size_t n = 1 + rng() % (trial % 2 ? 3000 : 40);
    const std::size_t d = 1 + rng() % n;
    const WeightSeq w(generate_weights(n, d, rng()));
    const auto fresh = alpha_real_new(w);
    const auto reused = alpha_real_new(w, reuse);
    ASSERT_EQ(fresh.alpha, reused.alpha);
    ASSERT_EQ(fresh.offset, reused.offset);
    ASSERT_EQ(fresh.depths, reused.depths);
    ASSERT_EQ(fresh.stats.sets, reused.stats.sets);
    ASSERT_EQ(fresh.stats.undos, reused.stats.undos);
    ASSERT_EQ(fresh.stats.unions, reused.stats.unions);
    ASSERT_EQ(fresh.stats.finds, reused.stats.finds);
    ASSERT_EQ(fresh.stats.step_sizes, reused.stats.step_sizes);
  }
}

TEST(ChooseStrategy, Examples) {
  EXPECT_EQ(choose_strategy(std::size_t{1} << 20, 1), Strategy::kNew);
  EXPECT_EQ(choose_strategy(16, 16), Strategy::kSorted);
  EXPECT_EQ(choose_strategy(1, 1), Strategy::kNew);
  EXPECT_EQ(choose_strategy(std::size_t{1} << 20, 4), Strategy::kSorted);
  EXPECT_EQ(choose_strategy(std::size_t{1} << 20, 3), Strategy::kNew);
  EXPECT_EQ(to_string(Strategy::kNew), "new");
  EXPECT_EQ(to_string(Strategy::kSorted), "sorted");
}

TEST(ChooseStrategy, DispatchesOnSingleLeaf) {
  const auto r = alpha_real(WeightSeq({0.25}));
  EXPECT_EQ(r.strategy, Strategy::kNew);
  EXPECT_EQ(r.alpha, 0.25);
  EXPECT_EQ(r.depths, (std::vector<int>{0}));
}

}  // namespace
}  // namespace almt
