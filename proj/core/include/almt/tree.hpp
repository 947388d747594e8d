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

#ifndef ALMT_TREE_HPP_
#define ALMT_TREE_HPP_

#include <span>
#include <string>
#include <vector>

namespace almt {

// An ordered strictly-binary tree stored as a preorder node array. Node 0 is
// the root; parent(0) == -1.
class OrderedTree {
 public:
  // Throws InfeasibleProfile if no tree has these leaf depths.
  static OrderedTree from_depths(std::span<const int> depths);

  std::size_t size() const { return parent_.size(); }
  std::size_t leaf_count() const { return leaves_.size(); }

  const std::vector<int>& parent_array() const { return parent_; }
  // Node ids of the leaves, left to right.
  const std::vector<int>& leaves() const { return leaves_; }
  bool is_leaf(int node) const { return left_[node] < 0; }
  int left(int node) const { return left_[node]; }
  int right(int node) const { return right_[node]; }

  std::vector<int> leaf_depths() const;

  // Leaf = "()", internal node = "(" left right ")".
  std::string to_parens() const;

 private:
  std::vector<int> parent_;
  std::vector<int> left_;
  std::vector<int> right_;
  std::vector<int> leaves_;
};

}  // namespace almt

#endif  // ALMT_TREE_HPP_
