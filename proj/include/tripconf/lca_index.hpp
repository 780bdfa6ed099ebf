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

#include "tripconf/tree.hpp"

namespace tripconf {

// Constant-time lowest common ancestor queries.
//
// The Euler tour of an m-node tree has 2m - 1 entries whose depths change by
// exactly one between neighbours. The tour is cut into blocks of
// b = max(1, floor(log2(len) / 2)) entries; a sparse table over the block
// minima answers inter-block ranges, and each block is answered through a
// table shared by all blocks with the same +1/-1 step pattern. Tables are
// only built for patterns that occur. Preprocessing is O(m), queries O(1).
class LcaIndex {
 public:
  LcaIndex() = default;
  explicit LcaIndex(const Tree& tree);

  NodeId lca(NodeId u, NodeId v) const;

  std::span<const NodeId> euler_tour() const { return tour_; }
  std::span<const std::int32_t> depth_sequence() const { return depth_; }
  std::int32_t first_occurrence(NodeId v) const { return first_[v]; }
  std::size_t block_size() const { return block_; }

  // Elementary steps spent during construction.
  std::uint64_t build_work() const { return work_; }

 private:
  // Position of the minimum depth in tour[lo..hi], lo and hi in one block.
  std::int32_t InBlock(std::size_t block, std::size_t lo, std::size_t hi) const;
  std::int32_t MinPos(std::int32_t a, std::int32_t b) const {
    return depth_[b] < depth_[a] ? b : a;
  }

  std::vector<NodeId> tour_;
  std::vector<std::int32_t> depth_;
  std::vector<std::int32_t> first_;
  std::size_t block_ = 1;
  // Step pattern of every block, and the offset of its in-block table.
  std::vector<std::uint32_t> block_type_;
  std::vector<std::int32_t> type_table_offset_;
  std::vector<std::uint8_t> type_tables_;
  // sparse_[k][i]: tour position of the minimum over blocks [i, i + 2^k).
  std::vector<std::vector<std::int32_t>> sparse_;
  std::uint64_t work_ = 0;
};

}  // namespace tripconf
