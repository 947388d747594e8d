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

#include "almt/codebook_io.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <map>

#include "almt/errors.hpp"

namespace almt::tools {

std::string escape_label(std::string_view label) {
  std::string out;
  for (const char c : label) {
    const auto u = static_cast<unsigned char>(c);
    if (c == '\\') {
      out += "\\\\";
    } else if (u >= 0x20 && u < 0x7f) {
      out += c;
    } else {
      char buf[5];
      std::snprintf(buf, sizeof buf, "\\x%02x", u);
      out += buf;
    }
  }
  return out;
}

std::string unescape_label(std::string_view text) {
  std::string out;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] != '\\') {
      out += text[i];
      continue;
    }
    if (i + 1 < text.size() && text[i + 1] == '\\') {
      out += '\\';
      ++i;
      continue;
    }
    unsigned value = 0;
    if (i + 3 < text.size() && text[i + 1] == 'x') {
      const auto r = std::from_chars(text.data() + i + 2, text.data() + i + 4, value, 16);
      if (r.ec == std::errc() && r.ptr == text.data() + i + 4) {
        out += static_cast<char>(value);
        i += 3;
        continue;
      }
    }
    throw InputError("bad escape in label '" + std::string(text) + "'");
  }
  return out;
}

Counts count_bytes(std::string_view data) {
  const Counts all = count_all_bytes(data);
  Counts out;
  for (std::size_t i = 0; i < all.labels.size(); ++i) {
    if (all.counts[i] > 0) {
      out.labels.push_back(all.labels[i]);
      out.counts.push_back(all.counts[i]);
    }
  }
  return out;
}

Counts count_all_bytes(std::string_view data) {
  Counts out;
  out.counts.assign(256, 0);
  for (const char c : data) ++out.counts[static_cast<unsigned char>(c)];
  for (int b = 0; b < 256; ++b) out.labels.emplace_back(1, static_cast<char>(b));
  return out;
}

Counts parse_counts_csv(std::string_view text) {
  std::map<std::string, std::uint64_t> seen;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty()) continue;
    if (line_no == 1 && line == "label,count") continue;
    const std::size_t comma = line.rfind(',');
    const std::string where = "line " + std::to_string(line_no) + ": ";
    if (comma == std::string_view::npos) throw InputError(where + "expected 'label,count'");
    std::string_view num = line.substr(comma + 1);
    while (!num.empty() && num.front() == ' ') num.remove_prefix(1);
    while (!num.empty() && num.back() == ' ') num.remove_suffix(1);
    std::uint64_t count = 0;
    const auto r = std::from_chars(num.data(), num.data() + num.size(), count);
    if (num.empty() || r.ec != std::errc() || r.ptr != num.data() + num.size()) {
      throw InputError(where + "cannot parse count '" + std::string(num) + "'");
    }
    const std::string label = unescape_label(line.substr(0, comma));
    if (!seen.emplace(label, count).second) {
      throw InputError(where + "duplicate label '" + escape_label(label) + "'");
    }
  }
  if (seen.empty()) throw InputError("no labels found");
  Counts out;
  for (const auto& [label, count] : seen) {
    out.labels.push_back(label);
    out.counts.push_back(count);
  }
  return out;
}

nlohmann::ordered_json codebook_to_json(const CodeBook& code, const Distribution& q) {
  auto out = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < code.size(); ++i) {
    out.push_back({{"label", escape_label(code[i].label)}, {"codeword", code[i].bits}, {"q", q[i]}});
  }
  return out;
}

LoadedCodeBook codebook_from_json(const nlohmann::json& j) {
  if (!j.is_array() || j.empty()) throw InputError("codebook must be a nonempty JSON array");
  std::vector<CodeWord> words;
  std::vector<std::string> labels;
  std::vector<double> q;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const auto& e = j[i];
    if (!e.is_object() || !e.contains("label") || !e.contains("codeword") || !e.contains("q") ||
        !e["label"].is_string() || !e["codeword"].is_string() || !e["q"].is_number()) {
      throw InputError("codebook entry " + std::to_string(i) +
                       " must have string label, string codeword and numeric q");
    }
    const std::string label = unescape_label(e["label"].get<std::string>());
    words.push_back({label, e["codeword"].get<std::string>()});
    labels.push_back(label);
    q.push_back(e["q"].get<double>());
  }
  return {CodeBook(std::move(words)), Distribution(std::move(labels), std::move(q))};
}

}  // namespace almt::tools
