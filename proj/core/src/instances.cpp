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

#include "almt/instances.hpp"

#include <cmath>
#include <random>
#include <utility>

#include "almt/errors.hpp"

namespace almt {

std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t trial) {
  return seed ^ ((trial + 1) * 0x9E3779B97F4A7C15ULL);
}

std::vector<double> generate_weights(std::size_t n, std::size_t d, std::uint64_t seed) {
  if (n == 0 || d == 0 || d > n) throw InputError("generator needs 1 <= d <= n");
  std::mt19937_64 rng(seed);
  auto below = [&rng](std::uint64_t bound) { return rng() % bound; };

  std::vector<std::int64_t> ceilings(n);
  for (std::size_t i = 0; i < n; ++i) {
    ceilings[i] = -static_cast<std::int64_t>(i < d ? i : below(d));
  }
  for (std::size_t i = n; i-- > 1;) std::swap(ceilings[i], ceilings[below(i + 1)]);

  std::vector<double> w(n);
  for (std::size_t i = 0; i < n; ++i) {
    // u in (0, 1) with 32 random bits; the guard covers ceilings so large
    // that c - u rounds onto an integer.
    const double u = (static_cast<double>(rng() >> 32) + 0.5) * 0x1p-32;
    w[i] = static_cast<double>(ceilings[i]) - u;
    if (std::ceil(w[i]) != static_cast<double>(ceilings[i])) {
      w[i] = static_cast<double>(ceilings[i]) - 0.5;
    }
  }
  return w;
}

}  // namespace almt
