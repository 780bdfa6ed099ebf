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

#include "tripconf/leafset_equivalence.hpp"

#include "tripconf/error.hpp"

namespace tripconf {

LeafEquivalence::LeafEquivalence(const Tree& p, const Tree& q, const LcaIndex& q_index)
    : p_(&p), q_(&q) {
  if (!p.is_complete() || !q.is_complete() || p.taxon_universe() != q.taxon_universe()) {
    throw Error(ErrorCode::kTaxonMismatch, "trees are not over the same taxon set");
  }
  map_.assign(p.node_count(), kNoNode);
  for (const NodeId leaf : p.leaves()) map_[leaf] = q.leaf_of(p.taxon(leaf));
  Propagate(q_index);
}

LeafEquivalence::LeafEquivalence(const Tree& p, const Tree& q, const LcaIndex& q_index,
                                 std::span<NodeId> taxon_scratch)
    : p_(&p), q_(&q) {
  if (p.leaf_count() != q.leaf_count()) {
    throw Error(ErrorCode::kTaxonMismatch, "trees have different leaf counts");
  }
  for (const NodeId leaf : q.leaves()) taxon_scratch[q.taxon(leaf)] = leaf;
  map_.assign(p.node_count(), kNoNode);
  bool complete = true;
  for (const NodeId leaf : p.leaves()) {
    map_[leaf] = taxon_scratch[p.taxon(leaf)];
    complete = complete && map_[leaf] != kNoNode;
  }
  for (const NodeId leaf : q.leaves()) taxon_scratch[q.taxon(leaf)] = kNoNode;
  if (!complete) throw Error(ErrorCode::kTaxonMismatch, "trees carry different taxa");
  Propagate(q_index);
}

void LeafEquivalence::Propagate(const LcaIndex& q_index) {
  // Post-order ids: children are final before their parent is visited.
  for (NodeId v = 0; v < static_cast<NodeId>(p_->node_count()); ++v) {
    if (!p_->is_leaf(v)) map_[v] = q_index.lca(map_[p_->left(v)], map_[p_->right(v)]);
  }
}

}  // namespace tripconf
