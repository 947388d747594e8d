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

#include "almt/tree.hpp"

#include "almt/errors.hpp"
#include "almt/minimax.hpp"

namespace almt {

OrderedTree OrderedTree::from_depths(std::span<const int> depths) {
  check_profile(depths);
  OrderedTree t;
  auto add_node = [&t](int parent) {
    const int id = static_cast<int>(t.parent_.size());
    t.parent_.push_back(parent);
    t.left_.push_back(-1);
    t.right_.push_back(-1);
    if (parent >= 0) {
      if (t.left_[parent] < 0) {
        t.left_[parent] = id;
      } else {
        t.right_[parent] = id;
      }
    }
    return id;
  };

  if (depths.size() == 1) {
    t.leaves_.push_back(add_node(-1));
    return t;
  }

  // Internal nodes still missing a child, with their depths.
  struct Frame {
    int node;
    int depth;
  };
  std::vector<Frame> path{{add_node(-1), 0}};
  for (const int d : depths) {
    while (path.back().depth + 1 < d) {
      const int child = add_node(path.back().node);
      path.push_back({child, path.back().depth + 1});
    }
    t.leaves_.push_back(add_node(path.back().node));
    while (!path.empty() && t.right_[path.back().node] >= 0) path.pop_back();
  }
  return t;
}

std::vector<int> OrderedTree::leaf_depths() const {
  std::vector<int> depth(parent_.size(), 0);
  // Preorder numbering puts every parent before its children.
  for (std::size_t v = 1; v < parent_.size(); ++v) depth[v] = depth[parent_[v]] + 1;
  std::vector<int> out;
  out.reserve(leaves_.size());
  for (const int leaf : leaves_) out.push_back(depth[leaf]);
  return out;
}

std::string OrderedTree::to_parens() const {
  std::string out;
  out.reserve(parent_.size() * 2);
  std::vector<std::pair<int, bool>> stack{{0, false}};
  while (!stack.empty()) {
    auto [node, closing] = stack.back();
    stack.pop_back();
    if (closing) {
      out.push_back(')');
      continue;
    }
    out.push_back('(');
    stack.push_back({node, true});
    if (left_[node] >= 0) {
      stack.push_back({right_[node], false});
      stack.push_back({left_[node], false});
    }
  }
  return out;
}

}  // namespace almt
