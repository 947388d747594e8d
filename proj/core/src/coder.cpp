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

#include "almt/coder.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <map>
#include <string>

#include "almt/errors.hpp"
#include "almt/minimax.hpp"
#include "almt/real_weights.hpp"
#include "almt/weights.hpp"

namespace almt {
namespace {

constexpr double kSumTolerance = 1e-9;

void check_labels(const std::vector<std::string>& labels) {
  for (std::size_t i = 1; i < labels.size(); ++i) {
    if (!(labels[i - 1] < labels[i])) {
      throw InputError("labels must be strictly increasing (index " + std::to_string(i) + ")");
    }
  }
}

int find_label(const std::vector<std::string>& labels, std::string_view label) {
  const auto it = std::lower_bound(labels.begin(), labels.end(), label,
                                   [](const std::string& a, std::string_view b) { return a < b; });
  if (it == labels.end() || *it != label) return -1;
  return static_cast<int>(it - labels.begin());
}

void require_positive(const Distribution& q) {
  for (std::size_t i = 0; i < q.size(); ++i) {
    if (!(q[i] > 0)) {
      throw UndefinedDivergence(i, "q is zero for symbol index " + std::to_string(i) +
                                       "; the code length formula is undefined there");
    }
  }
}

std::vector<double> log2_weights(const Distribution& q) {
  std::vector<double> w(q.size());
  for (std::size_t i = 0; i < q.size(); ++i) w[i] = std::log2(q[i]);
  return w;
}

}  // namespace

Distribution::Distribution(std::vector<std::string> labels, std::vector<double> probabilities)
    : labels_(std::move(labels)), p_(std::move(probabilities)) {
  if (p_.empty()) throw InputError("distribution is empty");
  if (labels_.size() != p_.size()) throw InputError("labels and probabilities differ in length");
  check_labels(labels_);
  double sum = 0;
  for (std::size_t i = 0; i < p_.size(); ++i) {
    if (!std::isfinite(p_[i]) || p_[i] < 0) {
      throw InputError("probability " + std::to_string(i) + " is negative or not finite");
    }
    sum += p_[i];
  }
  if (std::fabs(sum - 1.0) > kSumTolerance) {
    throw InputError("probabilities sum to " + std::to_string(sum) + ", not 1");
  }
}

int Distribution::find(std::string_view label) const { return find_label(labels_, label); }

Distribution empirical_distribution(std::vector<std::string> labels,
                                    std::span<const std::uint64_t> counts,
                                    Smoothing smoothing) {
  if (labels.size() != counts.size()) throw InputError("labels and counts differ in length");
  const std::uint64_t extra = smoothing == Smoothing::kAddOne ? 1 : 0;
  long double total = 0;
  for (const auto c : counts) total += static_cast<long double>(c + extra);
  if (total == 0) throw InputError("all counts are zero");
  std::vector<double> p(counts.size());
  for (std::size_t i = 0; i < counts.size(); ++i) {
    p[i] = static_cast<double>(static_cast<long double>(counts[i] + extra) / total);
  }
  return Distribution(std::move(labels), std::move(p));
}

double entropy(std::span<const double> p) {
  double h = 0;
  for (const double x : p) {
    if (x > 0) h -= x * std::log2(x);
  }
  return h;
}

double relative_entropy(std::span<const double> p, std::span<const double> q) {
  if (p.size() != q.size()) throw InputError("relative entropy: length mismatch");
  double d = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] == 0) continue;
    if (!(q[i] > 0)) {
      throw UndefinedDivergence(i, "q is zero where p is positive (symbol index " +
                                       std::to_string(i) + "); relative entropy is undefined");
    }
    d += p[i] * std::log2(p[i] / q[i]);
  }
  return d;
}

std::vector<std::string> canonical_codewords(std::span<const int> depths) {
  check_profile(depths);
  std::vector<std::string> out;
  out.reserve(depths.size());
  std::string cur(static_cast<std::size_t>(depths[0]), '0');
  out.push_back(cur);
  for (std::size_t i = 1; i < depths.size(); ++i) {
    std::size_t j = cur.size();
    while (j > 0 && cur[j - 1] == '1') cur[--j] = '0';
    cur[j - 1] = '1';
    cur.resize(static_cast<std::size_t>(depths[i]), '0');
    out.push_back(cur);
  }
  return out;
}

bool is_alphabetic(std::span<const CodeWord> words) {
  for (std::size_t i = 1; i < words.size(); ++i) {
    if (!(words[i - 1].bits < words[i].bits)) return false;
  }
  return true;
}

bool is_prefix_free(std::span<const CodeWord> words) {
  std::vector<std::string_view> sorted;
  sorted.reserve(words.size());
  for (const auto& w : words) sorted.push_back(w.bits);
  std::sort(sorted.begin(), sorted.end());
  // After sorting, a prefix of any word is immediately followed by a word it
  // prefixes.
  for (std::size_t i = 1; i < sorted.size(); ++i) {
    if (sorted[i].starts_with(sorted[i - 1])) return false;
  }
  return true;
}

bool satisfies_kraft_equality(std::span<const CodeWord> words) {
  if (words.empty()) return false;
  std::map<std::size_t, std::uint64_t, std::greater<>> count;
  for (const auto& w : words) ++count[w.bits.size()];
  // Carry pairs of 2^-l into 2^-(l-1) from the deepest length up.
  while (true) {
    auto it = count.begin();
    const auto [len, c] = *it;
    if (len == 0) return count.size() == 1 && c == 1;
    if (c % 2 != 0) return false;
    count.erase(it);
    count[len - 1] += c / 2;
  }
}

CodeBook::CodeBook(std::vector<CodeWord> words) : words_(std::move(words)) {
  if (words_.empty()) throw InputError("codebook is empty");
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if (i > 0 && !(words_[i - 1].label < words_[i].label)) {
      throw InputError("codebook labels must be strictly increasing (index " +
                       std::to_string(i) + ")");
    }
    if (words_[i].bits.find_first_not_of("01") != std::string::npos) {
      throw InputError("codeword " + std::to_string(i) + " contains characters other than 0/1");
    }
  }
  if (!is_prefix_free(words_)) throw InputError("codebook is not prefix-free");
  if (!is_alphabetic(words_)) throw InputError("codebook is not alphabetic");
  if (!satisfies_kraft_equality(words_)) throw InputError("codebook is not complete");
}

std::vector<int> CodeBook::lengths() const {
  std::vector<int> out;
  out.reserve(words_.size());
  for (const auto& w : words_) out.push_back(static_cast<int>(w.bits.size()));
  return out;
}

int CodeBook::find(std::string_view label) const {
  const auto it = std::lower_bound(
      words_.begin(), words_.end(), label,
      [](const CodeWord& a, std::string_view b) { return a.label < b; });
  if (it == words_.end() || it->label != label) return -1;
  return static_cast<int>(it - words_.begin());
}

CodeBook build_code(const Distribution& q) {
  require_positive(q);
  const RealCostResult r = alpha_real(WeightSeq(log2_weights(q)));
  const auto bits = canonical_codewords(r.depths);
  std::vector<CodeWord> words;
  words.reserve(q.size());
  for (std::size_t i = 0; i < q.size(); ++i) words.push_back({q.labels()[i], bits[i]});
  return CodeBook(std::move(words));
}

double redundancy_bound(const Distribution& q) {
  require_positive(q);
  return alpha_real(WeightSeq(log2_weights(q))).alpha;
}

double achieved_redundancy(const Distribution& q, const CodeBook& code) {
  if (q.size() != code.size()) throw InputError("distribution and codebook differ in size");
  require_positive(q);
  double m = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < q.size(); ++i) {
    m = std::max(m, std::log2(q[i]) + static_cast<double>(code[i].bits.size()));
  }
  return m;
}

CodeReport evaluate(const Distribution& p, const CodeBook& code, const Distribution& q) {
  if (p.size() != code.size() || q.size() != code.size()) {
    throw InputError("distributions and codebook differ in size");
  }
  for (std::size_t i = 0; i < code.size(); ++i) {
    if (p.labels()[i] != code[i].label || q.labels()[i] != code[i].label) {
      throw InputError("label mismatch at index " + std::to_string(i));
    }
  }
  CodeReport r;
  r.relative_entropy = relative_entropy(p.probabilities(), q.probabilities());
  require_positive(q);
  for (std::size_t i = 0; i < code.size(); ++i) {
    r.avg_len += p[i] * static_cast<double>(code[i].bits.size());
  }
  r.entropy = entropy(p.probabilities());
  r.excess = r.avg_len - r.entropy - r.relative_entropy;
  r.bound = redundancy_bound(q);
  return r;
}

std::string encode(std::span<const std::string> symbols, const CodeBook& code) {
  std::string out;
  for (const auto& s : symbols) {
    const int i = code.find(s);
    if (i < 0) throw InputError("symbol '" + s + "' is not in the codebook");
    out += code[static_cast<std::size_t>(i)].bits;
  }
  return out;
}

std::vector<std::string> decode(std::string_view bits, const CodeBook& code) {
  // Binary trie over the codewords; leaves carry the symbol index.
  struct TrieNode {
    int child[2] = {-1, -1};
    int symbol = -1;
  };
  std::vector<TrieNode> trie(1);
  for (std::size_t s = 0; s < code.size(); ++s) {
    int node = 0;
    for (const char c : code[s].bits) {
      const int b = c - '0';
      if (trie[node].child[b] < 0) {
        trie[node].child[b] = static_cast<int>(trie.size());
        trie.emplace_back();
      }
      node = trie[node].child[b];
    }
    trie[node].symbol = static_cast<int>(s);
  }

  std::vector<std::string> out;
  if (code.size() == 1) {
    if (!bits.empty()) throw InputError("decode: single-symbol code expects no bits");
    return out;
  }
  int node = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] != '0' && bits[i] != '1') {
      throw InputError("decode: invalid bit at offset " + std::to_string(i));
    }
    if (node == 0) start = i;
    node = trie[node].child[bits[i] - '0'];
    if (trie[node].symbol >= 0) {
      out.push_back(code[static_cast<std::size_t>(trie[node].symbol)].label);
      node = 0;
    }
  }
  if (node != 0) {
    throw InputError("decode: dangling suffix at bit offset " + std::to_string(start));
  }
  return out;
}

}  // namespace almt
