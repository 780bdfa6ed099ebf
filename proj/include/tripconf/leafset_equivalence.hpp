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

#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "tripconf/lca_index.hpp"
#include "tripconf/tree.hpp"

namespace tripconf {

// Answers "do P_u and Q_v carry the same leaf set?" in O(1).
//
// m(u) is the lowest node of Q whose leaf set contains L(P_u): the matching
// leaf for a leaf, and lca_Q(m(u'), m(u'')) for an inner node with children
// u', u''. Since L(P_u) is a subset of L(Q_m(u)), equal leaf counts on top of
// m(u) == v imply equal sets.
class LeafEquivalence {
 public:
  LeafEquivalence() = default;
  // Both trees must be complete over the same taxon universe. Throws
  // kTaxonMismatch.
  LeafEquivalence(const Tree& p, const Tree& q, const LcaIndex& q_index);
  // For trees over a subset of the universe (restricted trees).
  // `taxon_scratch` has one entry per taxon of the universe, all kNoNode on
  // entry; it is restored before returning.
  LeafEquivalence(const Tree& p, const Tree& q, const LcaIndex& q_index,
                  std::span<NodeId> taxon_scratch);

  NodeId image(NodeId u) const { return map_[u]; }
  bool equal(NodeId u, NodeId v) const {
    return map_[u] == v && p_->subtree_leaf_count(u) == q_->subtree_leaf_count(v);
  }
  std::uint64_t build_work() const { return map_.size(); }

 private:
  void Propagate(const LcaIndex& q_index);

  const Tree* p_ = nullptr;
  const Tree* q_ = nullptr;
  std::vector<NodeId> map_;
};

inline LeafEquivalence build_leaf_equivalence(const Tree& p, const Tree& q,
                                              const LcaIndex& q_index) {
  return LeafEquivalence(p, q, q_index);
}

inline bool leafsets_equal(const LeafEquivalence& e, NodeId u, NodeId v) { return e.equal(u, v); }

}  // namespace tripconf
