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
// Independent reference computations for the tests. Nothing here uses the
// post-order intervals, the LCA index or the enumerator under test.

#pragma once

#include <algorithm>
#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "tripconf/newick.hpp"
#include "tripconf/tree.hpp"
#include "tripconf/tree_generator.hpp"
#include "tripconf/triple_oracle.hpp"

namespace tripconf::testing {

inline constexpr const char* kExampleP = "((A,B),((C,D),E));";
inline constexpr const char* kExampleQ = "((A,B),((D,E),C));";

// LCA by walking parent pointers, deeper node first.
inline NodeId ParentWalkLca(const Tree& t, NodeId u, NodeId v) {
  auto depth = [&](NodeId x) {
    int d = 0;
    while (t.parent(x) != kNoNode) {
      x = t.parent(x);
      ++d;
    }
    return d;
  };
  int du = depth(u);
  int dv = depth(v);
  while (du > dv) {
    u = t.parent(u);
    --du;
  }
  while (dv > du) {
    v = t.parent(v);
    --dv;
  }
  while (u != v) {
    u = t.parent(u);
    v = t.parent(v);
  }
  return u;
}

inline bool ParentWalkIsAncestor(const Tree& t, NodeId u, NodeId v) {
  for (NodeId x = v; x != kNoNode; x = t.parent(x)) {
    if (x == u) return true;
  }
  return false;
}

// Taxa below v, collected through child pointers.
inline std::set<TaxonId> LeafSet(const Tree& t, NodeId v) {
  std::set<TaxonId> out;
  std::vector<NodeId> stack{v};
  while (!stack.empty()) {
    const NodeId x = stack.back();
    stack.pop_back();
    if (t.is_leaf(x)) {
      out.insert(t.taxon(x));
    } else {
      stack.push_back(t.left(x));
      stack.push_back(t.right(x));
    }
  }
  return out;
}

// Node whose leaf set is exactly `taxa`, or kNoNode.
inline NodeId NodeWithLeafSet(const Tree& t, const std::set<TaxonId>& taxa) {
  for (NodeId v = 0; v < static_cast<NodeId>(t.node_count()); ++v) {
    if (LeafSet(t, v) == taxa) return v;
  }
  return kNoNode;
}

inline std::set<TaxonId> Taxa(const TaxonSet& names, std::initializer_list<const char*> labels) {
  std::set<TaxonId> out;
  for (const char* l : labels) out.insert(*names.Find(l));
  return out;
}

// Bias pair by the definition: the pair whose LCA differs from the LCA of
// all three, computed with parent walks.
inline Bias DefinitionBias(const Tree& t, TaxonId a, TaxonId b, TaxonId c) {
  const auto ct = ConflictTriple::Canonical(a, b, c);
  const NodeId la = t.leaf_of(ct.a);
  const NodeId lb = t.leaf_of(ct.b);
  const NodeId lc = t.leaf_of(ct.c);
  const NodeId all = ParentWalkLca(t, ParentWalkLca(t, la, lb), lc);
  if (ParentWalkLca(t, la, lb) != all) return Bias::kAB_C;
  if (ParentWalkLca(t, la, lc) != all) return Bias::kAC_B;
  return Bias::kBC_A;
}

// Every rooted binary tree on taxa 0..n-1 (there are (2n-3)!! of them),
// built by inserting taxon i on each of the edges of every tree on i taxa,
// the edge above the root included.
inline std::vector<Tree> AllTopologies(std::size_t n) {
  std::vector<BinaryArena> current(1);
  current[0].root = current[0].AddLeaf(0);
  for (std::size_t i = 1; i < n; ++i) {
    std::vector<BinaryArena> next;
    for (const auto& base : current) {
      for (NodeId target = 0; target < static_cast<NodeId>(base.size()); ++target) {
        BinaryArena arena = base;
        NodeId above = kNoNode;
        for (NodeId v = 0; v < static_cast<NodeId>(arena.size()); ++v) {
          if (arena.left[v] == target || arena.right[v] == target) above = v;
        }
        const NodeId leaf = arena.AddLeaf(static_cast<TaxonId>(i));
        const NodeId joint = arena.AddInternal(target, leaf);
        if (above == kNoNode) {
          arena.root = joint;
        } else if (arena.left[above] == target) {
          arena.left[above] = joint;
        } else {
          arena.right[above] = joint;
        }
        next.push_back(std::move(arena));
      }
    }
    current = std::move(next);
  }
  std::vector<Tree> out;
  out.reserve(current.size());
  for (const auto& arena : current) out.push_back(Tree::FromArena(arena, n));
  return out;
}

inline GeneratedTree RandomTree(std::size_t n, std::uint64_t seed,
                                TreeShape shape = TreeShape::kUniformAttachment) {
  GeneratorConfig config;
  config.n = n;
  config.seed = seed;
  config.shape = shape;
  return random_binary_tree(config);
}

inline std::vector<ConflictTriple> Sorted(std::vector<ConflictTriple> v) {
  std::sort(v.begin(), v.end());
  return v;
}

inline bool HasDuplicates(std::vector<ConflictTriple> v) {
  std::sort(v.begin(), v.end());
  return std::adjacent_find(v.begin(), v.end()) != v.end();
}

}  // namespace tripconf::testing
