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

#ifndef ALMT_UNION_FIND_HPP_
#define ALMT_UNION_FIND_HPP_

#include <cstdint>
#include <vector>

namespace almt {

// Disjoint sets with LIFO deunion. Union by rank and no path compression, so
// find never mutates and every union is reversed exactly by one deunion.
// find is O(log n) worst case.
class UnionFind {
 public:
  UnionFind() = default;
  explicit UnionFind(int size);

  // Back to size singletons with empty journal and zero counters. Keeps
  // allocated capacity.
  void reset(int size);

  int size() const { return static_cast<int>(parent_.size()); }

  // Appends a singleton and returns its id.
  int add();
  // Removes the most recently added element. It must be a singleton that no
  // live union refers to.
  void pop();

  int find(int e) const;
  // Merges two distinct representatives and returns the new one. Throws
  // Refused if a and b are already in the same set.
  int unite(int a, int b);
  // Reverses the most recent union not yet reversed. Throws Refused when
  // there is none.
  void deunion();
  // Makes every live union permanent: they can no longer be reversed.
  void commit() { journal_.clear(); }

  std::size_t union_depth() const { return journal_.size(); }

  std::uint64_t finds() const { return finds_; }
  std::uint64_t find_steps() const { return find_steps_; }
  std::uint64_t unions() const { return unions_; }
  std::uint64_t deunions() const { return deunions_; }

  const std::vector<int>& parents() const { return parent_; }
  const std::vector<std::uint8_t>& ranks() const { return rank_; }

 private:
  struct Merge {
    int child;
    int root;
    bool rank_bumped;
  };

  std::vector<int> parent_;
  std::vector<std::uint8_t> rank_;
  std::vector<Merge> journal_;
  mutable std::uint64_t finds_ = 0;
  mutable std::uint64_t find_steps_ = 0;
  std::uint64_t unions_ = 0;
  std::uint64_t deunions_ = 0;
};

}  // namespace almt

#endif  // ALMT_UNION_FIND_HPP_
