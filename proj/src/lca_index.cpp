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

#include "tripconf/lca_index.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <utility>

namespace tripconf {

LcaIndex::LcaIndex(const Tree& tree) {
  const std::size_t m = tree.node_count();
  const std::size_t len = 2 * m - 1;
  tour_.reserve(len);
  depth_.reserve(len);
  first_.assign(m, -1);

  // Euler tour: a node is written on entry and after each child returns.
  std::vector<std::pair<NodeId, int>> stack;
  stack.emplace_back(tree.root(), 0);
  while (!stack.empty()) {
    auto& [v, state] = stack.back();
    if (state == 0) first_[v] = static_cast<std::int32_t>(tour_.size());
    tour_.push_back(v);
    depth_.push_back(tree.depth(v));
    if (tree.is_leaf(v) || state == 2) {
      stack.pop_back();
      continue;
    }
    const NodeId child = state == 0 ? tree.left(v) : tree.right(v);
    ++state;
    stack.emplace_back(child, 0);
  }
  assert(tour_.size() == len);
  work_ += len;

  const auto width = static_cast<std::size_t>(std::bit_width(len));  // floor(log2) + 1
  block_ = std::max<std::size_t>(1, (width - 1) / 2);
  const std::size_t blocks = (len + block_ - 1) / block_;
  const std::size_t table_area = block_ * block_;

  block_type_.resize(blocks);
  type_table_offset_.assign(std::size_t{1} << (block_ - 1), -1);
  std::vector<std::int32_t> rel(block_);
  for (std::size_t k = 0; k < blocks; ++k) {
    const std::size_t start = k * block_;
    std::uint32_t type = 0;
    for (std::size_t i = 1; i < block_; ++i) {
      // Missing entries of the final block are padded with upward steps,
      // which never create a new minimum.
      const bool up = start + i >= len || depth_[start + i] > depth_[start + i - 1];
      if (up) type |= std::uint32_t{1} << (i - 1);
    }
    block_type_[k] = type;
    work_ += block_;
    if (type_table_offset_[type] >= 0) continue;

    type_table_offset_[type] = static_cast<std::int32_t>(type_tables_.size());
    type_tables_.resize(type_tables_.size() + table_area);
    std::uint8_t* table = type_tables_.data() + type_table_offset_[type];
    rel[0] = 0;
    for (std::size_t i = 1; i < block_; ++i) {
      rel[i] = rel[i - 1] + (((type >> (i - 1)) & 1U) != 0 ? 1 : -1);
    }
    for (std::size_t i = 0; i < block_; ++i) {
      std::size_t best = i;
      for (std::size_t j = i; j < block_; ++j) {
        if (rel[j] < rel[best]) best = j;
        table[i * block_ + j] = static_cast<std::uint8_t>(best);
      }
    }
    work_ += table_area;
  }

  sparse_.emplace_back(blocks);
  for (std::size_t k = 0; k < blocks; ++k) {
    const std::size_t hi = std::min(block_, len - k * block_) - 1;
    sparse_[0][k] = InBlock(k, 0, hi);
  }
  work_ += blocks;
  for (std::size_t level = 1; (std::size_t{1} << level) <= blocks; ++level) {
    const std::size_t half = std::size_t{1} << (level - 1);
    const std::size_t count = blocks - (std::size_t{1} << level) + 1;
    std::vector<std::int32_t> row(count);
    const auto& prev = sparse_[level - 1];
    for (std::size_t i = 0; i < count; ++i) row[i] = MinPos(prev[i], prev[i + half]);
    work_ += count;
    sparse_.push_back(std::move(row));
  }
}

std::int32_t LcaIndex::InBlock(std::size_t block, std::size_t lo, std::size_t hi) const {
  const std::size_t offset =
      static_cast<std::size_t>(type_table_offset_[block_type_[block]]) + lo * block_ + hi;
  return static_cast<std::int32_t>(block * block_ + type_tables_[offset]);
}

NodeId LcaIndex::lca(NodeId u, NodeId v) const {
  std::size_t i = static_cast<std::size_t>(first_[u]);
  std::size_t j = static_cast<std::size_t>(first_[v]);
  if (i > j) std::swap(i, j);
  const std::size_t bi = i / block_;
  const std::size_t bj = j / block_;
  if (bi == bj) return tour_[InBlock(bi, i % block_, j % block_)];
  std::int32_t best = MinPos(InBlock(bi, i % block_, block_ - 1), InBlock(bj, 0, j % block_));
  if (bi + 1 < bj) {
    const std::size_t span = bj - bi - 1;
    const auto level = static_cast<std::size_t>(std::bit_width(span)) - 1;
    const auto& row = sparse_[level];
    best = MinPos(best, MinPos(row[bi + 1], row[bj - (std::size_t{1} << level)]));
  }
  return tour_[best];
}

}  // namespace tripconf
