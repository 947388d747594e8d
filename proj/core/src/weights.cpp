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

#include "almt/weights.hpp"

#include <charconv>
#include <string>
#include <unordered_set>

#include "almt/errors.hpp"

namespace almt {

void check_weights(std::span<const double> w) {
  if (w.empty()) throw InputError("weight sequence is empty");
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (!std::isfinite(w[i]) || std::fabs(w[i]) > kMaxAbsWeight) {
      throw InputError("weight " + std::to_string(i) + " is not finite or exceeds 2^50");
    }
  }
}

WeightSeq::WeightSeq(std::vector<double> weights) : weights_(std::move(weights)) {
  check_weights(weights_);
  fractions_.reserve(weights_.size());
  for (const double w : weights_) {
    fractions_.push_back(fractional_part(w));
    if (fractions_.back() != 0.0) all_integral_ = false;
  }
  distinct_ = count_distinct_ceilings(weights_);
}

std::vector<Level> WeightSeq::shifted_ceilings(double b) const {
  std::vector<Level> out(weights_.size());
  for (std::size_t i = 0; i < weights_.size(); ++i) {
    out[i] = static_cast<Level>(std::floor(weights_[i])) + (fractions_[i] > b ? 1 : 0);
  }
  return out;
}

std::size_t count_distinct_ceilings(std::span<const double> w) {
  std::unordered_set<Level> seen;
  seen.reserve(w.size());
  for (const double x : w) seen.insert(ceil_level(x));
  return seen.size();
}

namespace {

std::string_view trim(std::string_view s) {
  const auto* ws = " \t\r\f\v";
  const auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

}  // namespace

std::vector<double> parse_weights(std::string_view text) {
  std::vector<double> out;
  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    if (line_no == 1 && line.starts_with("\xEF\xBB\xBF")) line.remove_prefix(3);
    if (trim(line).empty()) continue;
    while (true) {
      const auto comma = line.find(',');
      const std::string_view field = trim(line.substr(0, comma));
      double value = 0;
      const char* first = field.data();
      const char* last = field.data() + field.size();
      if (!field.empty() && *first == '+') ++first;
      const auto res = std::from_chars(first, last, value);
      if (field.empty() || res.ec != std::errc{} || res.ptr != last) {
        throw InputError("line " + std::to_string(line_no) + ": cannot parse weight '" +
                         std::string(field) + "'");
      }
      if (!std::isfinite(value) || std::fabs(value) > kMaxAbsWeight) {
        throw InputError("line " + std::to_string(line_no) +
                         ": weight is not finite or exceeds 2^50");
      }
      out.push_back(value);
      if (comma == std::string_view::npos) break;
      line.remove_prefix(comma + 1);
    }
  }
  if (out.empty()) throw InputError("no weights found");
  return out;
}

std::vector<Level> to_int_weights(std::span<const double> w) {
  std::vector<Level> out;
  out.reserve(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (!is_integral(w[i])) {
      throw InputError("weight " + std::to_string(i) + " is not an integer");
    }
    out.push_back(static_cast<Level>(w[i]));
  }
  return out;
}

}  // namespace almt
