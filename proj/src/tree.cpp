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

#include "tripconf/tree.hpp"

#include <algorithm>
#include <string>

#include "tripconf/error.hpp"

namespace tripconf {

const char* ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kSyntax: return "SyntaxError";
    case ErrorCode::kNonBinary: return "NonBinary";
    case ErrorCode::kDuplicateLabel: return "DuplicateLabel";
    case ErrorCode::kEmptyTree: return "EmptyTree";
    case ErrorCode::kTaxonMismatch: return "TaxonMismatch";
    case ErrorCode::kEmptySubset: return "EmptySubset";
    case ErrorCode::kUnorderedInput: return "UnorderedInput";
    case ErrorCode::kNonDistinctTaxa: return "NonDistinctTaxa";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

TaxonSet::TaxonSet(std::vector<std::string> names) {
  for (auto& name : names) {
    if (index_.count(name) != 0) {
      throw Error(ErrorCode::kDuplicateLabel, "duplicate taxon label '" + name + "'");
    }
    Intern(name);
  }
}

TaxonId TaxonSet::Intern(std::string_view name) {
  std::string key(name);
  auto it = index_.find(key);
  if (it != index_.end()) return it->second;
  const auto id = static_cast<TaxonId>(names_.size());
  names_.push_back(key);
  index_.emplace(std::move(key), id);
  return id;
}

std::optional<TaxonId> TaxonSet::Find(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

NodeId BinaryArena::AddLeaf(TaxonId t) {
  left.push_back(kNoNode);
  right.push_back(kNoNode);
  taxon.push_back(t);
  return static_cast<NodeId>(taxon.size()) - 1;
}

NodeId BinaryArena::AddInternal(NodeId l, NodeId r) {
  left.push_back(l);
  right.push_back(r);
  taxon.push_back(kNoTaxon);
  return static_cast<NodeId>(taxon.size()) - 1;
}

void BinaryArena::clear() {
  left.clear();
  right.clear();
  taxon.clear();
  root = kNoNode;
}

Tree Tree::FromArena(const BinaryArena& arena, std::size_t universe, TaxonIndexing indexing) {
  Tree t;
  t.Assign(arena, universe, indexing);
  return t;
}

void Tree::Assign(const BinaryArena& arena, std::size_t universe, TaxonIndexing indexing) {
  const auto n = arena.size();
  if (n == 0 || arena.root == kNoNode) throw Error(ErrorCode::kEmptyTree, "tree has no nodes");
  if (arena.root < 0 || static_cast<std::size_t>(arena.root) >= n) {
    throw Error(ErrorCode::kInvalidArgument, "root is not a node of the arena");
  }

  // scratch_ maps arena ids to post-order ids; -2 marks "on the stack".
  scratch_.assign(n, kNoNode);
  std::vector<NodeId> order;
  order.reserve(n);
  std::vector<NodeId> stack;
  stack.push_back(arena.root);
  while (!stack.empty()) {
    const NodeId item = stack.back();
    stack.pop_back();
    if (item < 0) {
      const NodeId v = ~item;
      scratch_[v] = static_cast<NodeId>(order.size());
      order.push_back(v);
      continue;
    }
    if (scratch_[item] != kNoNode) {
      throw Error(ErrorCode::kInvalidArgument, "node reachable twice; input is not a tree");
    }
    scratch_[item] = -2;
    const NodeId l = arena.left[item];
    const NodeId r = arena.right[item];
    if ((l == kNoNode) != (r == kNoNode)) {
      throw Error(ErrorCode::kNonBinary, "internal node with exactly one child");
    }
    stack.push_back(~item);
    if (l != kNoNode) {
      if (arena.taxon[item] != kNoTaxon) {
        throw Error(ErrorCode::kInvalidArgument, "internal node carries a taxon");
      }
      stack.push_back(r);
      stack.push_back(l);
    } else if (arena.taxon[item] < 0) {
      throw Error(ErrorCode::kInvalidArgument, "leaf without taxon");
    }
  }
  if (order.size() != n) {
    throw Error(ErrorCode::kInvalidArgument, "arena contains nodes unreachable from the root");
  }

  parent_.assign(n, kNoNode);
  left_.resize(n);
  right_.resize(n);
  taxon_.resize(n);
  depth_.resize(n);
  leaf_count_.resize(n);
  leaf_rank_.resize(n);
  leaves_.clear();
  TaxonId max_taxon = kNoTaxon;
  for (std::size_t i = 0; i < n; ++i) {
    const NodeId old = order[i];
    const auto v = static_cast<NodeId>(i);
    taxon_[v] = arena.taxon[old];
    if (arena.left[old] == kNoNode) {
      left_[v] = right_[v] = kNoNode;
      leaf_count_[v] = 1;
      leaf_rank_[v] = static_cast<std::int32_t>(leaves_.size());
      leaves_.push_back(v);
      max_taxon = std::max(max_taxon, taxon_[v]);
    } else {
      const NodeId l = scratch_[arena.left[old]];
      const NodeId r = scratch_[arena.right[old]];
      left_[v] = l;
      right_[v] = r;
      parent_[l] = v;
      parent_[r] = v;
      leaf_count_[v] = leaf_count_[l] + leaf_count_[r];
      leaf_rank_[v] = leaf_rank_[l];
    }
  }
  const NodeId top = static_cast<NodeId>(n) - 1;
  depth_[top] = 0;
  for (NodeId v = top - 1; v >= 0; --v) depth_[v] = depth_[parent_[v]] + 1;

  universe_ = universe == 0 ? static_cast<std::size_t>(max_taxon) + 1 : universe;
  if (static_cast<std::size_t>(max_taxon) >= universe_) {
    throw Error(ErrorCode::kInvalidArgument, "taxon identifier outside the taxon universe");
  }
  leaf_of_taxon_.clear();
  if (indexing == TaxonIndexing::kBuild) {
    leaf_of_taxon_.assign(universe_, kNoNode);
    for (const NodeId leaf : leaves_) {
      NodeId& slot = leaf_of_taxon_[taxon_[leaf]];
      if (slot != kNoNode) {
        throw Error(ErrorCode::kDuplicateLabel,
                    "taxon " + std::to_string(taxon_[leaf]) + " labels two leaves");
      }
      slot = leaf;
    }
  }
}

NodeId Tree::leaf_of(TaxonId t) const {
  if (leaf_of_taxon_.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "tree was built without a taxon index");
  }
  if (t < 0 || static_cast<std::size_t>(t) >= leaf_of_taxon_.size()) return kNoNode;
  return leaf_of_taxon_[t];
}

Tree build_tree(const Topology& topology) {
  if (topology.nodes.empty() || topology.root == kNoNode) {
    throw Error(ErrorCode::kEmptyTree, "tree has no nodes");
  }
  BinaryArena arena;
  arena.left.resize(topology.nodes.size(), kNoNode);
  arena.right.resize(topology.nodes.size(), kNoNode);
  arena.taxon.resize(topology.nodes.size(), kNoTaxon);
  arena.root = topology.root;
  for (std::size_t i = 0; i < topology.nodes.size(); ++i) {
    const auto& node = topology.nodes[i];
    if (node.children.empty()) {
      arena.taxon[i] = node.taxon;
      continue;
    }
    if (node.children.size() != 2) {
      throw Error(ErrorCode::kNonBinary, "internal node with " +
                                             std::to_string(node.children.size()) +
                                             " children; only binary trees are supported");
    }
    for (const NodeId c : node.children) {
      if (c < 0 || static_cast<std::size_t>(c) >= topology.nodes.size()) {
        throw Error(ErrorCode::kInvalidArgument, "child reference out of range");
      }
    }
    arena.left[i] = node.children[0];
    arena.right[i] = node.children[1];
    arena.taxon[i] = node.taxon;
  }
  return Tree::FromArena(arena, topology.taxon_count, TaxonIndexing::kBuild);
}

std::vector<TaxonId> subtree_leaves(const Tree& t, NodeId v) {
  std::vector<TaxonId> out;
  out.reserve(static_cast<std::size_t>(t.subtree_leaf_count(v)));
  for (const NodeId leaf : t.leaves_below(v)) out.push_back(t.taxon(leaf));
  return out;
}

Tree relabel_leaves(const Tree& t, std::span<const TaxonId> mapping) {
  BinaryArena arena;
  arena.left.reserve(t.node_count());
  for (NodeId v = 0; v < static_cast<NodeId>(t.node_count()); ++v) {
    if (t.is_leaf(v)) {
      arena.AddLeaf(mapping[static_cast<std::size_t>(t.taxon(v))]);
    } else {
      arena.AddInternal(t.left(v), t.right(v));
    }
  }
  arena.root = t.root();
  return Tree::FromArena(arena, t.taxon_universe(), TaxonIndexing::kBuild);
}

}  // namespace tripconf
