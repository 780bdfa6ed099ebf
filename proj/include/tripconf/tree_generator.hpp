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

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>

#include "tripconf/tree.hpp"

namespace tripconf {

// SplitMix64 (Steele, Lea, Flood). Fixed so that seeded corpora are
// reproducible bit-for-bit on every platform.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t Next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  // Uniform in [0, bound), bound > 0, without modulo bias.
  std::uint64_t Below(std::uint64_t bound) {
    const std::uint64_t threshold = (0 - bound) % bound;
    while (true) {
      const std::uint64_t r = Next();
      if (r >= threshold) return r % bound;
    }
  }
  SplitMix64 Split() { return SplitMix64(Next()); }

 private:
  std::uint64_t state_;
};

enum class TreeShape { kUniformAttachment, kCaterpillar, kBalanced };

std::optional<TreeShape> ParseTreeShape(std::string_view name);
const char* TreeShapeName(TreeShape shape);

struct GeneratorConfig {
  std::size_t n = 1;
  std::uint64_t seed = 0;
  TreeShape shape = TreeShape::kUniformAttachment;
  // Leaf-label swaps applied by perturb_leaf_swaps.
  std::size_t swaps = 0;
};

struct GeneratedTree {
  TaxonSet taxa;
  Tree tree;
};

// Taxa "t1".."tn". Uniform attachment inserts leaf i on a uniformly chosen
// edge, the edge above the root included, with a random side. Caterpillar
// is (((t1,t2),t3),...,tn); balanced merges neighbouring subtrees level by
// level. Throws kInvalidArgument for n == 0.
GeneratedTree random_binary_tree(const GeneratorConfig& config);

// Copy of t with `swaps` random pairs of leaf labels exchanged.
Tree perturb_leaf_swaps(const Tree& t, std::size_t swaps, std::uint64_t seed);

// Copy of t in which taxon i becomes taxon n - 1 - i.
Tree reverse_labels(const Tree& t);

}  // namespace tripconf
