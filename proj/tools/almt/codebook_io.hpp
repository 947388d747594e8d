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

#ifndef ALMT_TOOLS_CODEBOOK_IO_HPP_
#define ALMT_TOOLS_CODEBOOK_IO_HPP_

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "almt/coder.hpp"
#include "json.hpp"

namespace almt::tools {

// Printable ASCII other than '\' is kept; '\' becomes "\\" and any other
// byte becomes "\xNN". The result is always valid JSON string content.
std::string escape_label(std::string_view label);
std::string unescape_label(std::string_view text);

// Labels in bytewise order with their counts.
struct Counts {
  std::vector<std::string> labels;
  std::vector<std::uint64_t> counts;
};

// One single-byte label per byte value that occurs in data.
Counts count_bytes(std::string_view data);

// All 256 single-byte labels, counted over data.
Counts count_all_bytes(std::string_view data);

// "label,count" per line; the label is everything before the last comma.
// Blank lines are skipped and a leading "label,count" header is allowed.
Counts parse_counts_csv(std::string_view text);

nlohmann::ordered_json codebook_to_json(const CodeBook& code, const Distribution& q);

struct LoadedCodeBook {
  CodeBook code;
  Distribution q;
};

LoadedCodeBook codebook_from_json(const nlohmann::json& j);

}  // namespace almt::tools

#endif  // ALMT_TOOLS_CODEBOOK_IO_HPP_
