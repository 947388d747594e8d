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

#ifndef ALMT_LEVEL_TREE_HPP_
#define ALMT_LEVEL_TREE_HPP_

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "almt/minimax.hpp"
#include "almt/union_find.hpp"

namespace almt {

// Incremental alphabetic minimax cost for Y = ceil(w_i) - x_i.
//
// One node per level interval: a leaf per weight, an internal node per
// maximal run of positions with y <= h that contains some y == h, and a
// root above everything. A leaf hangs off the internal node at its own
// level; internal children sit strictly below their parent. The load of an
// internal node u is the least number of subtrees of weight <= level(u)
// covering its run:
//
//   load(u) = #leaf children + sum_c ceil(load(c) / 2^(level(u) - level(c)))
//
// and the cost is level(top) + ceil(log2(load(top))) for the root's only
// child. set(i) decrements y_i and repairs the tree along the path to the
// root; sibling merges go through a union-find so no child is reparented.
// Every change is journaled and undo() rolls back one set() exactly.
//
// Single writer. Indices are 0-based.
class LevelTree {
 public:
  struct Counters {
    std::uint64_t sets = 0;
    std::uint64_t undos = 0;
    std::uint64_t nodes_created = 0;
  };

  explicit LevelTree(std::span<const double> weights);
  // Builds with the given bits already set (bits[i] != 0 requires a
  // non-integral weight). The journal starts empty.
  LevelTree(std::span<const double> weights, std::span<const std::uint8_t> bits);

  // Rebuilds for new weights with all bits clear, reusing allocated storage.
  // Counters restart from zero.
  void reset(std::span<const double> weights);

  std::size_t size() const { return weights_.size(); }

  // x_i := 1. Throws Refused if x_i is already 1 or w_i is an integer.
  void set(std::size_t i);
  // Rolls back the most recent set() not yet undone. Throws Refused if none.
  void undo();
  // Makes every set() so far permanent and drops its undo history. The
  // journal keeps its capacity for later sets.
  void commit();
  Level cost() const;

  bool bit(std::size_t i) const { return bits_[i] != 0; }
  Level level_of(std::size_t i) const { return nodes_[i].level; }
  std::vector<Level> levels() const;
  std::size_t journal_depth() const { return segments_; }

  const Counters& counters() const { return counters_; }
  const UnionFind& union_find() const { return uf_; }

  // Deterministic JSON dump of the arena, bits and journal depth.
  std::string serialize() const;
  // Nested rendering of the live tree without node ids, for comparing a
  // dynamically maintained tree with a fresh build.
  std::string shape() const;
  // Walks the live tree and rechecks links, levels, loads and leaf order.
  // Throws InvariantViolation on the first mismatch.
  void audit() const;

 private:
  enum class Field : std::uint8_t {
    kLevel,
    kLoad,
    kParent,
    kPrev,
    kNext,
    kHead,
    kTail,
    kLeafChildren,
    kAlive,
  };
  enum class Op : std::uint8_t { kSegment, kField, kCreate, kUnion, kBit };
  struct Mod {
    Op op;
    Field field;
    int node;
    std::int64_t old;
  };

  struct Node {
    Level level = 0;
    std::uint64_t load = 1;
    int parent = -1;  // resolve with uf_.find
    int prev = -1;
    int next = -1;
    int head = -1;
    int tail = -1;
    int leaf_children = 0;
    bool leaf = false;
    bool alive = true;
  };

  void build();
  int make_node(Level level);
  void append_child(int parent, int child);

  std::int64_t get(int node, Field f) const;
  void put(int node, Field f, std::int64_t value);
  void assign(int node, Field f, std::int64_t value);

  std::uint64_t contribution(int child, Level parent_level) const;
  void change_load(int node, std::uint64_t load);
  // Puts node in place of the sibling range first..last of parent, whose
  // outer neighbours were before and after.
  void splice_range(int parent, int first, int last, int before, int after, int node);

  std::vector<double> weights_;
  std::vector<std::uint8_t> bits_;
  std::vector<Node> nodes_;
  int root_ = -1;
  Level sentinel_ = 0;
  UnionFind uf_;
  std::vector<Mod> journal_;
  std::size_t segments_ = 0;
  Counters counters_;
};

}  // namespace almt

#endif  // ALMT_LEVEL_TREE_HPP_
