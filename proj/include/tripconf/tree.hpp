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
//
// Rooted binary leaf-labeled trees.
//
// A Tree is stored in an arena whose node identifiers ARE the post-order
// numbers: children always precede their parent and the root is the last
// node. The subtree of v therefore occupies the contiguous identifier range
// [v - 2 * leaf_count(v) + 2, v], which turns ancestry into an interval test,
// and the leaves below v form a contiguous run of the post-order leaf list.
//
// Taxa are dense integers. Names only appear at I/O boundaries (TaxonSet).

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace tripconf {

using NodeId = std::int32_t;
using TaxonId = std::int32_t;

inline constexpr NodeId kNoNode = -1;
inline constexpr TaxonId kNoTaxon = -1;

// Interned taxon names; identifiers are assigned 0..n-1 in insertion order.
class TaxonSet {
 public:
  TaxonSet() = default;
  // Throws kDuplicateLabel if two names coincide.
  explicit TaxonSet(std::vector<std::string> names);

  // Returns the existing identifier for `name` or assigns the next one.
  TaxonId Intern(std::string_view name);
  std::optional<TaxonId> Find(std::string_view name) const;

  const std::string& Name(TaxonId id) const { return names_.at(static_cast<std::size_t>(id)); }
  const std::vector<std::string>& Names() const { return names_; }
  std::size_t size() const { return names_.size(); }
  bool empty() const { return names_.empty(); }

  // Same identifier for every name.
  friend bool operator==(const TaxonSet& lhs, const TaxonSet& rhs) {
    return lhs.names_ == rhs.names_;
  }

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, TaxonId> index_;
};

// General rooted topology, as produced by parsers. Children lists may have
// any length here; build_tree rejects everything that is not binary.
struct Topology {
  struct Node {
    std::vector<NodeId> children;
    TaxonId taxon = kNoTaxon;
  };
  std::vector<Node> nodes;
  NodeId root = kNoNode;
  // Size of the taxon universe; 0 means max taxon + 1.
  std::size_t taxon_count = 0;
};

// Binary arena with arbitrary node numbering. Leaves have both children set
// to kNoNode and a taxon; internal nodes have two children.
struct BinaryArena {
  std::vector<NodeId> left;
  std::vector<NodeId> right;
  std::vector<TaxonId> taxon;
  NodeId root = kNoNode;

  NodeId AddLeaf(TaxonId t);
  NodeId AddInternal(NodeId l, NodeId r);
  void clear();
  std::size_t size() const { return taxon.size(); }
};

enum class TaxonIndexing {
  // Build a dense taxon -> leaf table sized to the taxon universe.
  kBuild,
  // Skip it; used for restricted trees whose build must stay O(|leaves|).
  kSkip,
};

class Tree {
 public:
  Tree() = default;

  // Renumbers `arena` into post-order. `universe` is the number of taxon
  // identifiers that may appear (0 means max taxon + 1). Throws
  // kEmptyTree, kDuplicateLabel, kInvalidArgument.
  static Tree FromArena(const BinaryArena& arena, std::size_t universe = 0,
                        TaxonIndexing indexing = TaxonIndexing::kBuild);
  // Same as FromArena but reuses this tree's storage.
  void Assign(const BinaryArena& arena, std::size_t universe, TaxonIndexing indexing);

  std::size_t node_count() const { return parent_.size(); }
  std::size_t leaf_count() const { return leaves_.size(); }
  NodeId root() const { return static_cast<NodeId>(parent_.size()) - 1; }
  std::size_t taxon_universe() const { return universe_; }
  // True iff the tree carries every taxon of its universe.
  bool is_complete() const { return leaves_.size() == universe_; }

  NodeId parent(NodeId v) const { return parent_[v]; }
  NodeId left(NodeId v) const { return left_[v]; }
  NodeId right(NodeId v) const { return right_[v]; }
  NodeId sibling(NodeId v) const {
    const NodeId p = parent_[v];
    return left_[p] == v ? right_[p] : left_[p];
  }
  bool is_leaf(NodeId v) const { return left_[v] == kNoNode; }
  TaxonId taxon(NodeId v) const { return taxon_[v]; }
  std::int32_t depth(NodeId v) const { return depth_[v]; }
  std::int32_t post_index(NodeId v) const { return v; }
  std::int32_t subtree_leaf_count(NodeId v) const { return leaf_count_[v]; }
  // Smallest identifier inside the subtree of v.
  NodeId subtree_begin(NodeId v) const { return v - 2 * leaf_count_[v] + 2; }

  // True iff v lies in the subtree of u (u == v included). O(1).
  bool is_ancestor(NodeId u, NodeId v) const { return v <= u && v >= subtree_begin(u); }

  std::span<const NodeId> leaves() const { return leaves_; }
  // Leaves below v in post-order.
  std::span<const NodeId> leaves_below(NodeId v) const {
    return std::span<const NodeId>(leaves_).subspan(static_cast<std::size_t>(leaf_rank_[v]),
                                                    static_cast<std::size_t>(leaf_count_[v]));
  }
  // Position of v's first leaf within leaves().
  std::int32_t leaf_rank(NodeId v) const { return leaf_rank_[v]; }

  bool has_taxon_index() const { return !leaf_of_taxon_.empty() || universe_ == 0; }
  // Leaf carrying `t`, or kNoNode. Requires has_taxon_index().
  NodeId leaf_of(TaxonId t) const;

 private:
  std::size_t universe_ = 0;
  std::vector<NodeId> parent_;
  std::vector<NodeId> left_;
  std::vector<NodeId> right_;
  std::vector<TaxonId> taxon_;
  std::vector<std::int32_t> depth_;
  std::vector<std::int32_t> leaf_count_;
  std::vector<std::int32_t> leaf_rank_;
  std::vector<NodeId> leaves_;
  std::vector<NodeId> leaf_of_taxon_;
  std::vector<NodeId> scratch_;
};

// Validates a general topology and converts it to a Tree. Throws kNonBinary,
// kDuplicateLabel, kEmptyTree, kInvalidArgument.
Tree build_tree(const Topology& topology);

inline bool is_ancestor(const Tree& t, NodeId u, NodeId v) { return t.is_ancestor(u, v); }

// Taxa below v, in post-order.
std::vector<TaxonId> subtree_leaves(const Tree& t, NodeId v);

// A subtree of a tree, addressed without copying.
struct TreeView {
  const Tree* tree = nullptr;
  NodeId root = kNoNode;

  std::int32_t leaf_count() const { return tree->subtree_leaf_count(root); }
  bool contains(NodeId v) const { return tree->is_ancestor(root, v); }
  std::span<const NodeId> leaves() const { return tree->leaves_below(root); }
};

// Copy of `t` in which leaf taxon x is replaced by mapping[x].
Tree relabel_leaves(const Tree& t, std::span<const TaxonId> mapping);

}  // namespace tripconf
