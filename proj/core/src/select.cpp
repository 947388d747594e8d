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

#include "almt/select.hpp"

#include <random>
#include <string>
#include <utility>
#include <vector>

#include "almt/errors.hpp"

namespace almt {
namespace {

struct Split {
  std::size_t less;     // [0, less) < pivot
  std::size_t greater;  // [greater, n) > pivot
};

Split partition3(std::span<double> a, double pivot, std::uint64_t& work) {
  std::size_t lt = 0;
  std::size_t i = 0;
  std::size_t gt = a.size();
  while (i < gt) {
    if (a[i] < pivot) {
      std::swap(a[lt++], a[i++]);
    } else if (a[i] > pivot) {
      std::swap(a[i], a[--gt]);
    } else {
      ++i;
    }
  }
  work += a.size();
  return {lt, gt};
}

void insertion_sort(std::span<double> a, std::uint64_t& work) {
  for (std::size_t i = 1; i < a.size(); ++i) {
    const double x = a[i];
    std::size_t j = i;
    while (j > 0 && a[j - 1] > x) {
      a[j] = a[j - 1];
      --j;
    }
    a[j] = x;
  }
  work += a.size();
}

// k is 0-based.
double median_of_medians(std::span<double> a, std::size_t k, std::uint64_t& work) {
  while (true) {
    if (a.size() <= 5) {
      insertion_sort(a, work);
      return a[k];
    }
    std::size_t medians = 0;
    for (std::size_t i = 0; i < a.size(); i += 5) {
      const std::size_t len = std::min<std::size_t>(5, a.size() - i);
      insertion_sort(a.subspan(i, len), work);
      std::swap(a[medians++], a[i + (len - 1) / 2]);
    }
    const double pivot = median_of_medians(a.first(medians), (medians - 1) / 2, work);
    const Split s = partition3(a, pivot, work);
    if (k < s.less) {
      a = a.first(s.less);
    } else if (k < s.greater) {
      return pivot;
    } else {
      a = a.subspan(s.greater);
      k -= s.greater;
    }
  }
}

double quickselect(std::span<double> a, std::size_t k, std::uint64_t& work) {
  std::mt19937_64 rng(0x9E3779B97F4A7C15ULL ^ a.size());
  while (true) {
    if (a.size() <= 5) {
      insertion_sort(a, work);
      return a[k];
    }
    const double pivot = a[std::uniform_int_distribution<std::size_t>(0, a.size() - 1)(rng)];
    const Split s = partition3(a, pivot, work);
    if (k < s.less) {
      a = a.first(s.less);
    } else if (k < s.greater) {
      return pivot;
    } else {
      a = a.subspan(s.greater);
      k -= s.greater;
    }
  }
}

}  // namespace

double select_kth_inplace(std::span<double> values, std::size_t k, SelectMethod method,
                          std::uint64_t* work) {
  if (values.empty()) throw InputError("select_kth: empty input");
  if (k < 1 || k > values.size()) {
    throw InputError("select_kth: rank " + std::to_string(k) + " outside [1, " +
                     std::to_string(values.size()) + "]");
  }
  std::uint64_t local = 0;
  const double out = method == SelectMethod::kMedianOfMedians
                         ? median_of_medians(values, k - 1, local)
                         : quickselect(values, k - 1, local);
  if (work != nullptr) *work += local;
  return out;
}

double select_kth(std::span<const double> values, std::size_t k, SelectMethod method) {
  std::vector<double> copy(values.begin(), values.end());
  return select_kth_inplace(copy, k, method);
}

}  // namespace almt
