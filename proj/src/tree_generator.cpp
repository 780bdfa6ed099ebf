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

#include "tripconf/tree_generator.hpp"

#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "tripconf/error.hpp"

namespace tripconf {

std::optional<TreeShape> ParseTreeShape(std::string_view name) {
  if (name == "uniform" || name == "uniform-attachment") return TreeShape::kUniformAttachment;
  if (name == "caterpillar") return TreeShape::kCaterpillar;
  if (name == "balanced") return TreeShape::kBalanced;
  return std::nullopt;
}

const char* TreeShapeName(TreeShape shape) {
  switch (shape) {
    case TreeShape::kUniformAttachment: return "uniform-attachment";
    case TreeShape::kCaterpillar: return "caterpillar";
    case TreeShape::kBalanced: return "balanced";
  }
  return "unknown";
}

namespace {

BinaryArena UniformAttachment(std::size_t n, SplitMix64& rng) {
  BinaryArena arena;
  std::vector<NodeId> parent;
  arena.root = arena.AddLeaf(0);
  parent.push_back(kNoNode);
  for (std::size_t i = 1; i < n; ++i) {
    const auto target = static_cast<NodeId>(rng.Below(arena.size()));
    const bool leaf_first = (rng.Next() >> 63) != 0;
    const NodeId leaf = arena.AddLeaf(static_cast<TaxonId>(i));
    parent.push_back(kNoNode);
    const NodeId joint = leaf_first ? arena.AddInternal(leaf, target)
                                    : arena.AddInternal(target, leaf);
    const NodeId above = parent[target];
    parent.push_back(above);
    if (above == kNoNode) {
      arena.root = joint;
    } else if (arena.left[above] == target) {
      arena.left[above] = joint;
    } else {
      arena.right[above] = joint;
    }
    parent[target] = joint;
    parent[leaf] = joint;
  }
  return arena;
}

BinaryArena Caterpillar(std::size_t n) {
  BinaryArena arena;
  NodeId spine = arena.AddLeaf(0);
  for (std::size_t i = 1; i < n; ++i) {
    spine = arena.AddInternal(spine, arena.AddLeaf(static_cast<TaxonId>(i)));
  }
  arena.root = spine;
  return arena;
}

BinaryArena Balanced(std::size_t n) {
  BinaryArena arena;
  std::vector<NodeId> level;
  for (std::size_t i = 0; i < n; ++i) level.push_back(arena.AddLeaf(static_cast<TaxonId>(i)));
  while (level.size() > 1) {
    std::vector<NodeId> next;
    for (std::size_t i = 0; i + 1 < level.size(); i += 2) {
      next.push_back(arena.AddInternal(level[i], level[i + 1]));
    }
    if (level.size() % 2 == 1) next.push_back(level.back());
    level = std::move(next);
  }
  arena.root = level.front();
  return arena;
}

}  // namespace

GeneratedTree random_binary_tree(const GeneratorConfig& config) {
  if (config.n == 0) throw Error(ErrorCode::kInvalidArgument, "tree needs at least one taxon");
  GeneratedTree out;
  std::vector<std::string> names;
  names.reserve(config.n);
  for (std::size_t i = 1; i <= config.n; ++i) names.push_back("t" + std::to_string(i));
  out.taxa = TaxonSet(std::move(names));

  SplitMix64 rng(config.seed);
  BinaryArena arena;
  switch (config.shape) {
    case TreeShape::kUniformAttachment: arena = UniformAttachment(config.n, rng); break;
    case TreeShape::kCaterpillar: arena = Caterpillar(config.n); break;
    case TreeShape::kBalanced: arena = Balanced(config.n); break;
  }
  out.tree = Tree::FromArena(arena, config.n, TaxonIndexing::kBuild);
  return out;
}

Tree perturb_leaf_swaps(const Tree& t, std::size_t swaps, std::uint64_t seed) {
  const std::size_t n = t.taxon_universe();
  std::vector<TaxonId> mapping(n);
  std::iota(mapping.begin(), mapping.end(), 0);
  SplitMix64 rng(seed);
  if (n >= 2) {
    for (std::size_t k = 0; k < swaps; ++k) {
      const auto x = rng.Below(n);
      auto y = rng.Below(n - 1);
      if (y >= x) ++y;
      std::swap(mapping[x], mapping[y]);
    }
  }
  return relabel_leaves(t, mapping);
}

Tree reverse_labels(const Tree& t) {
  const std::size_t n = t.taxon_universe();
  std::vector<TaxonId> mapping(n);
  for (std::size_t i = 0; i < n; ++i) mapping[i] = static_cast<TaxonId>(n - 1 - i);
  return relabel_leaves(t, mapping);
}

}  // namespace tripconf
