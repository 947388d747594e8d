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

#ifndef ALMT_INSTANCES_HPP_
#define ALMT_INSTANCES_HPP_

#include <cstddef>
#include <cstdint>
#include <vector>

namespace almt {

// Reproducible weight sequences with exactly d distinct ceilings. The
// ceilings are 0, -1, ..., -(d-1), each used at least once, the rest drawn
// uniformly; every fractional part is uniform in (0, 1) at 2^-32 resolution. Only the standard
// mt19937_64 stream and explicit bit manipulation are used, so output is
// identical on every platform.
std::vector<double> generate_weights(std::size_t n, std::size_t d, std::uint64_t seed);

// Seed of trial t derived from a base seed.
std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t trial);

}  // namespace almt

#endif  // ALMT_INSTANCES_HPP_
