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

#ifndef ALMT_CODER_HPP_
#define ALMT_CODER_HPP_

// Alphabetic prefix codes built from a sample distribution Q. The trie of
// the code is an alphabetic minimax tree for log2 q_1, ..., log2 q_n, which
// minimizes the worst case over P of avg_len - H(P) - D(P||Q).

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace almt {

enum class Smoothing { kNone, kAddOne };

class Distribution {
 public:
  // Labels must be strictly increasing (bytewise) and probabilities must be
  // nonnegative with sum 1 within 1e-9.
  Distribution(std::vector<std::string> labels, std::vector<double> probabilities);

  std::size_t size() const { return p_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  std::span<const double> probabilities() const { return p_; }
  double operator[](std::size_t i) const { return p_[i]; }
  // Index of label, or -1.
  int find(std::string_view label) const;

 private:
  std::vector<std::string> labels_;
  std::vector<double> p_;
};

// Normalizes counts. kAddOne adds one to every count first. Throws
// InputError when every count is zero.
Distribution empirical_distribution(std::vector<std::string> labels,
                                    std::span<const std::uint64_t> counts,
                                    Smoothing smoothing = Smoothing::kNone);

// Base-2 entropy and relative entropy. Terms with p_i = 0 contribute 0.
// relative_entropy throws UndefinedDivergence if q_i = 0 < p_i.
double entropy(std::span<const double> p);
double relative_entropy(std::span<const double> p, std::span<const double> q);

struct CodeWord {
  std::string label;
  std::string bits;  // '0' / '1'
};

class CodeBook {
 public:
  // Throws InputError unless the codewords form a complete alphabetic
  // prefix code over strictly increasing labels.
  explicit CodeBook(std::vector<CodeWord> words);

  std::size_t size() const { return words_.size(); }
  const std::vector<CodeWord>& words() const { return words_; }
  const CodeWord& operator[](std::size_t i) const { return words_[i]; }
  std::vector<int> lengths() const;
  int find(std::string_view label) const;

 private:
  std::vector<CodeWord> words_;
};

// Codewords of a valid depth profile, assigned left to right: each word is
// the previous one plus one, padded with zeros or truncated to its length.
std::vector<std::string> canonical_codewords(std::span<const int> depths);

// Checks the three code invariants without throwing.
bool is_prefix_free(std::span<const CodeWord> words);
bool is_alphabetic(std::span<const CodeWord> words);
// sum 2^-|c_i| == 1, exactly.
bool satisfies_kraft_equality(std::span<const CodeWord> words);

// Requires every q_i > 0 (throws UndefinedDivergence otherwise).
CodeBook build_code(const Distribution& q);
// alpha(log2 q_1, ..., log2 q_n).
double redundancy_bound(const Distribution& q);
// max_i (log2 q_i + |c_i|) for a given code.
double achieved_redundancy(const Distribution& q, const CodeBook& code);

struct CodeReport {
  double avg_len = 0;
  double entropy = 0;
  double relative_entropy = 0;
  double excess = 0;
  double bound = 0;
};

// P and Q must use the codebook's labels in the same order.
CodeReport evaluate(const Distribution& p, const CodeBook& code, const Distribution& q);

// Bits as a '0'/'1' string. encode throws InputError for a symbol outside
// the codebook; decode throws InputError naming the bit offset of a
// dangling suffix.
std::string encode(std::span<const std::string> symbols, const CodeBook& code);
std::vector<std::string> decode(std::string_view bits, const CodeBook& code);

}  // namespace almt

#endif  // ALMT_CODER_HPP_
