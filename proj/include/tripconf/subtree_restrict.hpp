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
#include <utility>
#include <vector>

#include "tripconf/lca_index.hpp"
#include "tripconf/tree.hpp"

namespace tripconf {

// T restricted to a leaf subset Z: leaves are Z with their original taxa,
// unary nodes are suppressed. origin[v] is the node of T that v contracts
// to; for internal v it is the LCA in T of the leaves below v.
struct RestrictedTree {
  Tree tree;
  std::vector<NodeId> origin;
};

// Builds T|Z in O(|Z|) from leaves given in T's post-order. Throws
// kEmptySubset, kUnorderedInput, kInvalidArgument (a member is not a leaf).
RestrictedTree induced_subtree(const Tree& t, const LcaIndex& idx, std::span<const NodeId> leaves,
                               TaxonIndexing indexing = TaxonIndexing::kBuild);

// Reusable buffers for the stack sweep behind induced_subtree. Inputs are
// trusted: non-empty, post-ordered leaves of t.
//
// The internal nodes of T|Z are the LCAs of consecutive members of Z. The
// sweep keeps the right spine of the tree built so far on a stack ordered by
// depth in T; each new LCA adopts the deeper spine entries as its left
// subtree, and entries popped later receive their right child.
class InducedBuilder {
 public:
  void Build(const Tree& t, const LcaIndex& idx, std::span<const NodeId> leaves);
  // Build followed by conversion into `out`, reusing its storage.
  void BuildInto(const Tree& t, const LcaIndex& idx, std::span<const NodeId> leaves, Tree& out,
                 TaxonIndexing indexing);

  const BinaryArena& arena() const { return arena_; }

 private:
  BinaryArena arena_;
  std::vector<std::pair<NodeId, std::int32_t>> spine_;
};

}  // namespace tripconf
