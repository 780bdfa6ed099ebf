// Copyright 2026 The tripconf Authors
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

#include "tripconf/subtree_restrict.hpp"

#include "tripconf/error.hpp"

namespace tripconf {

void InducedBuilder::Build(const Tree& t, const LcaIndex& idx, std::span<const NodeId> leaves) {
  arena_.clear();
  spine_.clear();
  NodeId current = arena_.AddLeaf(t.taxon(leaves[0]));
  for (std::size_t i = 0; i + 1 < leaves.size(); ++i) {
    const NodeId joint = idx.lca(leaves[i], leaves[i + 1]);
    const std::int32_t joint_depth = t.depth(joint);
    NodeId subtree = current;
    while (!spine_.empty() && spine_.back().second > joint_depth) {
      const NodeId top = spine_.back().first;
      spine_.pop_back();
      arena_.right[top] = subtree;
      subtree = top;
    }
    const NodeId inner = arena_.AddInternal(subtree, kNoNode);
    spine_.emplace_back(inner, joint_depth);
    current = arena_.AddLeaf(t.taxon(leaves[i + 1]));
  }
  NodeId subtree = current;
  while (!spine_.empty()) {
    const NodeId top = spine_.back().first;
    spine_.pop_back();
    arena_.right[top] = subtree;
    subtree = top;
  }
  arena_.root = subtree;
}

void InducedBuilder::BuildInto(const Tree& t, const LcaIndex& idx,
                               std::span<const NodeId> leaves, Tree& out,
                               TaxonIndexing indexing) {
  Build(t, idx, leaves);
  out.Assign(arena_, t.taxon_universe(), indexing);
}

RestrictedTree induced_subtree(const Tree& t, const LcaIndex& idx, std::span<const NodeId> leaves,
                               TaxonIndexing indexing) {
  if (leaves.empty()) throw Error(ErrorCode::kEmptySubset, "leaf subset is empty");
  for (std::size_t i = 0; i < leaves.size(); ++i) {
    const NodeId v = leaves[i];
    if (v < 0 || static_cast<std::size_t>(v) >= t.node_count() || !t.is_leaf(v)) {
      throw Error(ErrorCode::kInvalidArgument, "subset member is not a leaf of the tree");
    }
    if (i > 0 && t.post_index(leaves[i - 1]) >= t.post_index(v)) {
      throw Error(ErrorCode::kUnorderedInput, "leaf subset is not strictly in post-order");
    }
  }
  RestrictedTree result;
  InducedBuilder builder;
  builder.BuildInto(t, idx, leaves, result.tree, indexing);

  // Leaf order is preserved, so leaf i of the result is leaves[i]; an inner
  // node contracts to the LCA of its outermost leaves.
  const Tree& r = result.tree;
  result.origin.resize(r.node_count());
  for (NodeId v = 0; v < static_cast<NodeId>(r.node_count()); ++v) {
    const auto rank = static_cast<std::size_t>(r.leaf_rank(v));
    if (r.is_leaf(v)) {
      result.origin[v] = leaves[rank];
    } else {
      const auto last = rank + static_cast<std::size_t>(r.subtree_leaf_count(v)) - 1;
      result.origin[v] = idx.lca(leaves[rank], leaves[last]);
    }
  }
  return result;
}

}  // namespace tripconf
