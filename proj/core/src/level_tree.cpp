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

#include "almt/level_tree.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <utility>

#include "almt/errors.hpp"
#include "almt/weights.hpp"
#include "json.hpp"

namespace almt {

LevelTree::LevelTree(std::span<const double> weights)
    : weights_(weights.begin(), weights.end()), bits_(weights.size(), 0) {
  build();
}

LevelTree::LevelTree(std::span<const double> weights,
                     std::span<const std::uint8_t> bits)
    : weights_(weights.begin(), weights.end()), bits_(weights.size(), 0) {
  if (bits.size() != weights.size()) {
    throw InputError("level tree: bit vector length differs from weights");
  }
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] == 0) continue;
    if (is_integral(weights_[i])) {
      throw Refused("level tree: bit " + std::to_string(i) + " set on an integral weight");
    }
    bits_[i] = 1;
  }
  build();
}

void LevelTree::reset(std::span<const double> weights) {
  weights_.assign(weights.begin(), weights.end());
  bits_.assign(weights.size(), 0);
  nodes_.clear();
  journal_.clear();
  segments_ = 0;
  counters_ = {};
  root_ = -1;
  build();
}

void LevelTree::build() {
  check_weights(weights_);
  const std::size_t n = weights_.size();
  Level top = std::numeric_limits<Level>::min();
  nodes_.reserve(2 * n + 1);
  for (std::size_t i = 0; i < n; ++i) {
    Node leaf;
    leaf.leaf = true;
    leaf.level = ceil_level(weights_[i]) - bits_[i];
    top = std::max(top, leaf.level);
    nodes_.push_back(leaf);
  }
  sentinel_ = top + ceil_log2(n) + 2;
  uf_.reset(static_cast<int>(n));
  root_ = make_node(sentinel_);

  // Open runs, levels strictly decreasing towards the back. A run is closed
  // (and its load final) before it is attached to its parent.
  std::vector<int> open{root_};
  for (std::size_t i = 0; i < n; ++i) {
    const Level y = nodes_[i].level;
    int closed = -1;
    while (nodes_[open.back()].level < y) {
      const int t = open.back();
      open.pop_back();
      if (closed >= 0) append_child(t, closed);
      closed = t;
    }
    int host = open.back();
    if (nodes_[host].level != y) {
      host = make_node(y);
      open.push_back(host);
    }
    if (closed >= 0) append_child(host, closed);
    append_child(host, static_cast<int>(i));
  }
  int closed = -1;
  while (open.size() > 1) {
    const int t = open.back();
    open.pop_back();
    if (closed >= 0) append_child(t, closed);
    closed = t;
  }
  append_child(root_, closed);
}

int LevelTree::make_node(Level level) {
  Node node;
  node.level = level;
  node.load = 0;
  nodes_.push_back(node);
  uf_.add();
  ++counters_.nodes_created;
  return static_cast<int>(nodes_.size()) - 1;
}

void LevelTree::append_child(int parent, int child) {
  Node& p = nodes_[parent];
  Node& c = nodes_[child];
  c.parent = parent;
  c.prev = p.tail;
  c.next = -1;
  if (p.tail >= 0) {
    nodes_[p.tail].next = child;
  } else {
    p.head = child;
  }
  p.tail = child;
  if (c.leaf) ++p.leaf_children;
  p.load += contribution(child, p.level);
}

std::uint64_t LevelTree::contribution(int child, Level parent_level) const {
  if (child < 0) return 0;
  const Node& c = nodes_[child];
  if (c.leaf) return 1;
  return ceil_shift(c.load, parent_level - c.level);
}

std::int64_t LevelTree::get(int node, Field f) const {
  const Node& n = nodes_[node];
  switch (f) {
    case Field::kLevel: return n.level;
    case Field::kLoad: return static_cast<std::int64_t>(n.load);
    case Field::kParent: return n.parent;
    case Field::kPrev: return n.prev;
    case Field::kNext: return n.next;
    case Field::kHead: return n.head;
    case Field::kTail: return n.tail;
    case Field::kLeafChildren: return n.leaf_children;
    case Field::kAlive: return n.alive ? 1 : 0;
  }
  return 0;
}

void LevelTree::put(int node, Field f, std::int64_t value) {
  Node& n = nodes_[node];
  switch (f) {
    case Field::kLevel: n.level = value; break;
    case Field::kLoad: n.load = static_cast<std::uint64_t>(value); break;
    case Field::kParent: n.parent = static_cast<int>(value); break;
    case Field::kPrev: n.prev = static_cast<int>(value); break;
    case Field::kNext: n.next = static_cast<int>(value); break;
    case Field::kHead: n.head = static_cast<int>(value); break;
    case Field::kTail: n.tail = static_cast<int>(value); break;
    case Field::kLeafChildren: n.leaf_children = static_cast<int>(value); break;
    case Field::kAlive: n.alive = value != 0; break;
  }
}

void LevelTree::assign(int node, Field f, std::int64_t value) {
  const std::int64_t old = get(node, f);
  if (old == value) return;
  journal_.push_back({Op::kField, f, node, old});
  put(node, f, value);
}

void LevelTree::change_load(int node, std::uint64_t load) {
  while (true) {
    const std::uint64_t old = nodes_[node].load;
    if (old == load) return;
    assign(node, Field::kLoad, static_cast<std::int64_t>(load));
    if (node == root_) return;
    const int parent = uf_.find(nodes_[node].parent);
    const Level gap = nodes_[parent].level - nodes_[node].level;
    const std::uint64_t before = ceil_shift(old, gap);
    const std::uint64_t after = ceil_shift(load, gap);
    if (before == after) return;
    load = nodes_[parent].load - before + after;
    node = parent;
  }
}

void LevelTree::splice_range(int parent, int first, int last, int before,
                             int after, int node) {
  if (first != node) assign(first, Field::kPrev, -1);
  if (last != node) assign(last, Field::kNext, -1);
  assign(node, Field::kPrev, before);
  assign(node, Field::kNext, after);
  if (before >= 0) {
    assign(before, Field::kNext, node);
  } else {
    assign(parent, Field::kHead, node);
  }
  if (after >= 0) {
    assign(after, Field::kPrev, node);
  } else {
    assign(parent, Field::kTail, node);
  }
  assign(node, Field::kParent, parent);
}

void LevelTree::set(std::size_t i) {
  if (i >= size()) throw Refused("set: index " + std::to_string(i) + " out of range");
  if (bits_[i] != 0) throw Refused("set: bit " + std::to_string(i) + " is already set");
  if (is_integral(weights_[i])) {
    throw Refused("set: weight " + std::to_string(i) + " is an integer");
  }
  journal_.push_back({Op::kSegment, Field::kLevel, static_cast<int>(i), 0});
  ++segments_;
  ++counters_.sets;
  journal_.push_back({Op::kBit, Field::kLevel, static_cast<int>(i), 0});
  bits_[i] = 1;

  const int v = static_cast<int>(i);
  const Level h = nodes_[v].level;
  const Level low = h - 1;
  const int p = uf_.find(nodes_[v].parent);
  const int a = nodes_[v].prev;
  const int b = nodes_[v].next;
  const int ai = (a >= 0 && !nodes_[a].leaf) ? a : -1;
  const int bi = (b >= 0 && !nodes_[b].leaf) ? b : -1;
  const bool vanishes = nodes_[p].leaf_children == 1;
  const bool a_merge = ai >= 0 && nodes_[ai].level == low;
  const bool b_merge = bi >= 0 && nodes_[bi].level == low;
  const int first = ai >= 0 ? ai : v;
  const int last = bi >= 0 ? bi : v;
  const int before = nodes_[first].prev;
  const int after = nodes_[last].next;
  const Level p_level = nodes_[p].level;
  const std::uint64_t p_load = nodes_[p].load;
  const std::uint64_t removed = 1 + contribution(ai, h) + contribution(bi, h);

  assign(v, Field::kLevel, low);

  // q becomes the run at level h-1 that contains v.
  int q = -1;
  if (a_merge && b_merge) {
    const Node& na = nodes_[ai];
    const Node& nb = nodes_[bi];
    const std::uint64_t load = na.load + nb.load + 1;
    const int leaf_children = na.leaf_children + nb.leaf_children + 1;
    const int a_head = na.head;
    const int a_tail = na.tail;
    const int b_head = nb.head;
    const int b_tail = nb.tail;
    journal_.push_back({Op::kUnion, Field::kLevel, -1, 0});
    q = uf_.unite(ai, bi);
    const int other = q == ai ? bi : ai;
    assign(a_tail, Field::kNext, v);
    assign(v, Field::kPrev, a_tail);
    assign(v, Field::kNext, b_head);
    assign(b_head, Field::kPrev, v);
    assign(q, Field::kHead, a_head);
    assign(q, Field::kTail, b_tail);
    assign(q, Field::kLeafChildren, leaf_children);
    assign(q, Field::kLoad, static_cast<std::int64_t>(load));
    assign(v, Field::kParent, q);
    assign(other, Field::kAlive, 0);
  } else if (a_merge) {
    q = ai;
    const int a_tail = nodes_[q].tail;
    std::uint64_t load = nodes_[q].load + 1;
    assign(a_tail, Field::kNext, v);
    assign(v, Field::kPrev, a_tail);
    if (bi >= 0) {
      load += contribution(bi, low);
      assign(bi, Field::kNext, -1);
      assign(bi, Field::kParent, q);
      assign(q, Field::kTail, bi);
    } else {
      assign(v, Field::kNext, -1);
      assign(q, Field::kTail, v);
    }
    assign(v, Field::kParent, q);
    assign(q, Field::kLeafChildren, nodes_[q].leaf_children + 1);
    assign(q, Field::kLoad, static_cast<std::int64_t>(load));
  } else if (b_merge) {
    q = bi;
    const int b_head = nodes_[q].head;
    std::uint64_t load = nodes_[q].load + 1;
    assign(b_head, Field::kPrev, v);
    assign(v, Field::kNext, b_head);
    if (ai >= 0) {
      load += contribution(ai, low);
      assign(ai, Field::kPrev, -1);
      assign(ai, Field::kParent, q);
      assign(q, Field::kHead, ai);
    } else {
      assign(v, Field::kPrev, -1);
      assign(q, Field::kHead, v);
    }
    assign(v, Field::kParent, q);
    assign(q, Field::kLeafChildren, nodes_[q].leaf_children + 1);
    assign(q, Field::kLoad, static_cast<std::int64_t>(load));
  } else if (vanishes) {
    // v was the only leaf of p, so p's children are exactly first..last and
    // p itself drops to level h-1.
    q = p;
    assign(p, Field::kLevel, low);
    const std::uint64_t load = 1 + contribution(ai, low) + contribution(bi, low);
    assign(p, Field::kLoad, static_cast<std::int64_t>(load));
  } else {
    journal_.push_back({Op::kCreate, Field::kLevel, -1, 0});
    q = make_node(low);
    nodes_[q].head = first;
    nodes_[q].tail = last;
    nodes_[q].leaf_children = 1;
    nodes_[q].load = 1 + contribution(ai, low) + contribution(bi, low);
    nodes_[q].parent = p;
  }

  if (!vanishes) {
    splice_range(p, first, last, before, after, q);
    if (!(a_merge || b_merge)) {
      if (ai >= 0) assign(ai, Field::kParent, q);
      if (bi >= 0) assign(bi, Field::kParent, q);
      assign(v, Field::kParent, q);
    }
    assign(p, Field::kLeafChildren, nodes_[p].leaf_children - 1);
    change_load(p, p_load - removed + contribution(q, p_level));
    return;
  }

  const int g = uf_.find(nodes_[p].parent);
  const std::uint64_t old_share = ceil_shift(p_load, nodes_[g].level - p_level);
  if (q != p) {
    const int pp = nodes_[p].prev;
    const int pn = nodes_[p].next;
    assign(q, Field::kPrev, pp);
    assign(q, Field::kNext, pn);
    if (pp >= 0) {
      assign(pp, Field::kNext, q);
    } else {
      assign(g, Field::kHead, q);
    }
    if (pn >= 0) {
      assign(pn, Field::kPrev, q);
    } else {
      assign(g, Field::kTail, q);
    }
    assign(q, Field::kParent, g);
    assign(p, Field::kAlive, 0);
  }
  change_load(g, nodes_[g].load - old_share + contribution(q, nodes_[g].level));
}

void LevelTree::commit() {
  journal_.clear();
  segments_ = 0;
  uf_.commit();
}

void LevelTree::undo() {
  if (segments_ == 0) throw Refused("undo: no set operation to undo");
  while (true) {
    const Mod m = journal_.back();
    journal_.pop_back();
    switch (m.op) {
      case Op::kSegment:
        --segments_;
        ++counters_.undos;
        return;
      case Op::kField:
        put(m.node, m.field, m.old);
        break;
      case Op::kCreate:
        nodes_.pop_back();
        uf_.pop();
        break;
      case Op::kUnion:
        uf_.deunion();
        break;
      case Op::kBit:
        bits_[m.node] = 0;
        break;
    }
  }
}

Level LevelTree::cost() const {
  const Node& top = nodes_[nodes_[root_].head];
  return top.level + ceil_log2(top.load);
}

std::vector<Level> LevelTree::levels() const {
  std::vector<Level> out(size());
  for (std::size_t i = 0; i < size(); ++i) out[i] = nodes_[i].level;
  return out;
}

std::string LevelTree::serialize() const {
  nlohmann::ordered_json nodes = nlohmann::ordered_json::array();
  for (std::size_t id = 0; id < nodes_.size(); ++id) {
    const Node& n = nodes_[id];
    nlohmann::ordered_json j;
    j["id"] = id;
    if (!n.alive) {
      j["kind"] = "retired";
      nodes.push_back(std::move(j));
      continue;
    }
    j["kind"] = n.leaf ? "leaf" : (static_cast<int>(id) == root_ ? "root" : "internal");
    j["level"] = n.level;
    j["load"] = n.load;
    nlohmann::ordered_json children = nlohmann::ordered_json::array();
    for (int c = n.leaf ? -1 : n.head; c >= 0; c = nodes_[c].next) children.push_back(c);
    j["children"] = std::move(children);
    j["parent"] = n.parent < 0 ? -1 : uf_.find(n.parent);
    nodes.push_back(std::move(j));
  }
  std::string bits;
  bits.reserve(bits_.size());
  for (const auto x : bits_) bits.push_back(x != 0 ? '1' : '0');
  nlohmann::ordered_json out;
  out["n"] = size();
  out["root"] = root_;
  out["bits"] = bits;
  out["journal_depth"] = segments_;
  out["nodes"] = std::move(nodes);
  return out.dump();
}

std::string LevelTree::shape() const {
  std::string out;
  // (node, next child to visit); -2 marks "children not started".
  std::vector<std::pair<int, int>> stack{{root_, -2}};
  while (!stack.empty()) {
    auto& [node, cursor] = stack.back();
    const Node& n = nodes_[node];
    if (cursor == -2) {
      if (node == root_) {
        out += "R{";
      } else {
        out += "[" + std::to_string(n.level) + ":" + std::to_string(n.load) + " ";
      }
      cursor = n.head;
    }
    if (cursor < 0) {
      out += node == root_ ? "}" : "]";
      stack.pop_back();
      continue;
    }
    const int child = cursor;
    cursor = nodes_[child].next;
    if (nodes_[child].leaf) {
      out += std::to_string(child) + " ";
    } else {
      stack.push_back({child, -2});
    }
  }
  return out;
}

void LevelTree::audit() const {
  auto fail = [](const std::string& what) { throw InvariantViolation("level tree: " + what); };
  const Node& root = nodes_[root_];
  if (!root.alive || root.level != sentinel_) fail("root corrupted");
  if (root.head < 0 || root.head != root.tail) fail("root must have exactly one child");
  if (nodes_[root.head].leaf) fail("root child must be internal");

  std::size_t next_leaf = 0;
  std::vector<std::pair<int, int>> stack{{root_, -2}};
  std::vector<std::uint64_t> sums;
  std::vector<int> leaf_counts;
  std::vector<int> last_child;
  while (!stack.empty()) {
    auto& [node, cursor] = stack.back();
    const Node& u = nodes_[node];
    if (cursor == -2) {
      if (!u.alive || u.leaf) fail("dead or leaf node on the live tree");
      if (u.head < 0) fail("internal node " + std::to_string(node) + " has no children");
      cursor = u.head;
      sums.push_back(0);
      leaf_counts.push_back(0);
      last_child.push_back(-1);
      if (nodes_[u.head].prev != -1) fail("head has a left sibling");
    }
    if (cursor < 0) {
      if (u.tail != last_child.back()) fail("tail mismatch at " + std::to_string(node));
      if (u.leaf_children != leaf_counts.back()) {
        fail("leaf child count mismatch at " + std::to_string(node));
      }
      if (node != root_ && u.leaf_children == 0) {
        fail("internal node " + std::to_string(node) + " without a leaf at its level");
      }
      if (u.load != sums.back()) fail("load mismatch at " + std::to_string(node));
      sums.pop_back();
      leaf_counts.pop_back();
      last_child.pop_back();
      stack.pop_back();
      continue;
    }
    const int child = cursor;
    const Node& c = nodes_[child];
    if (!c.alive) fail("dead child " + std::to_string(child));
    if (c.prev != last_child.back()) fail("broken sibling link at " + std::to_string(child));
    if (uf_.find(c.parent) != node) fail("parent mismatch at " + std::to_string(child));
    if (last_child.back() >= 0 && !c.leaf && !nodes_[last_child.back()].leaf) {
      fail("adjacent internal siblings under " + std::to_string(node));
    }
    cursor = c.next;
    last_child.back() = child;
    if (c.leaf) {
      if (node == root_) fail("leaf attached to the root");
      if (c.level != u.level) fail("leaf level differs from its parent");
      if (static_cast<std::size_t>(child) != next_leaf) fail("leaves out of order");
      if (c.load != 1) fail("leaf load must be 1");
      if (c.level != ceil_level(weights_[child]) - bits_[child]) fail("leaf level stale");
      ++next_leaf;
      ++leaf_counts.back();
      sums.back() += 1;
    } else {
      if (c.level >= u.level) fail("child level not below parent");
      sums.back() += ceil_shift(c.load, u.level - c.level);
      stack.push_back({child, -2});
    }
  }
  if (next_leaf != size()) fail("not every leaf is reachable");
}

}  // namespace almt
