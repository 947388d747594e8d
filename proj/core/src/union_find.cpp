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

#include "almt/union_find.hpp"

#include <numeric>

#include "almt/errors.hpp"

namespace almt {

UnionFind::UnionFind(int size) : parent_(size), rank_(size, 0) {
  std::iota(parent_.begin(), parent_.end(), 0);
}

void UnionFind::reset(int size) {
  parent_.resize(static_cast<std::size_t>(size));
  std::iota(parent_.begin(), parent_.end(), 0);
  rank_.assign(static_cast<std::size_t>(size), 0);
  journal_.clear();
  finds_ = 0;
  find_steps_ = 0;
  unions_ = 0;
  deunions_ = 0;
}

int UnionFind::add() {
  const int id = size();
  parent_.push_back(id);
  rank_.push_back(0);
  return id;
}

void UnionFind::pop() {
  if (parent_.empty()) throw Refused("union-find: pop on empty universe");
  const int id = size() - 1;
  if (parent_[id] != id || rank_[id] != 0) {
    throw Refused("union-find: pop of an element that takes part in a union");
  }
  parent_.pop_back();
  rank_.pop_back();
}

int UnionFind::find(int e) const {
  ++finds_;
  while (parent_[e] != e) {
    e = parent_[e];
    ++find_steps_;
  }
  return e;
}

int UnionFind::unite(int a, int b) {
  a = find(a);
  b = find(b);
  if (a == b) throw Refused("union-find: union of elements already joined");
  if (rank_[a] < rank_[b]) std::swap(a, b);
  const bool bump = rank_[a] == rank_[b];
  parent_[b] = a;
  if (bump) ++rank_[a];
  journal_.push_back({b, a, bump});
  ++unions_;
  return a;
}

void UnionFind::deunion() {
  if (journal_.empty()) throw Refused("union-find: deunion with no live union");
  const Merge m = journal_.back();
  journal_.pop_back();
  parent_[m.child] = m.child;
  if (m.rank_bumped) --rank_[m.root];
  ++deunions_;
}

}  // namespace almt
