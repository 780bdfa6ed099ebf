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
// Output-sensitive enumeration of the conflict triples of two rooted binary
// trees on the same taxa, in O(n + d) for d conflicts.
//
// Each recursion frame holds two trees (or subtrees of them) with equal
// leaf sets. Their root children are paired first-with-first; when the P
// child's leaf set equals the second Q child's, the Q children are swapped.
// If the paired children then carry equal leaf sets, no conflict touches
// either root and both halves recurse as views at O(1) cost. Otherwise every
// conflict touching a root is listed (Cartesian products of common and
// uncommon leaves, plus four subtree sweeps), the frame's leaf count is
// bounded by the number of triples listed plus two, and the remaining
// conflicts lie inside the four com-blocks, which recurse on restricted
// trees.

#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "tripconf/lca_index.hpp"
#include "tripconf/leafset_equivalence.hpp"
#include "tripconf/subtree_restrict.hpp"
#include "tripconf/tree.hpp"
#include "tripconf/triple_oracle.hpp"

namespace tripconf {

// Receives every conflict exactly once, canonicalised, on the calling thread.
class ConflictSink {
 public:
  virtual ~ConflictSink() = default;
  virtual void Accept(const ConflictTriple& triple) = 0;
};

class CollectingSink final : public ConflictSink {
 public:
  void Accept(const ConflictTriple& triple) override { triples.push_back(triple); }
  std::vector<ConflictTriple> triples;
};

class CountingSink final : public ConflictSink {
 public:
  void Accept(const ConflictTriple&) override { ++count; }
  std::uint64_t count = 0;
};

class CallbackSink final : public ConflictSink {
 public:
  explicit CallbackSink(std::function<void(const ConflictTriple&)> fn) : fn_(std::move(fn)) {}
  void Accept(const ConflictTriple& triple) override { fn_(triple); }

 private:
  std::function<void(const ConflictTriple&)> fn_;
};

// Work counters. nodes_touched counts elementary steps outside the emission
// loops: preprocessing, leaf scans, restricted-tree construction and
// candidate tests.
struct Instrumentation {
  std::uint64_t frames_opened = 0;
  std::uint64_t partition_frames = 0;
  std::uint64_t nodes_touched = 0;
  std::uint64_t triples_emitted = 0;
  // Sum and maximum over frames of d_r, the conflicts listed at a frame.
  std::uint64_t root_conflicts_total = 0;
  std::uint64_t max_root_conflicts = 0;
  // Partitioning frames whose leaf count exceeded d_r + 2.
  std::uint64_t budget_violations = 0;
};

// Per-frame diagnostics, produced only when a listener is installed.
struct FrameReport {
  bool partitioned = false;
  // Taxa of the frame, in P post-order.
  std::vector<TaxonId> leaves;
  // With pairing (u_p, u_q), (v_p, v_q) after the swap rule:
  // com(u_p,u_q), com(v_p,v_q), com(u_p,v_q), com(v_p,u_q). For frames that
  // did not partition, the first two are L(u_p) and L(v_p).
  std::array<std::vector<TaxonId>, 4> blocks;
  // Index of the first triple this frame emitted, in global emission order.
  std::uint64_t first_emission = 0;
  std::uint64_t root_conflicts = 0;
};

struct EnumerateOptions {
  std::function<void(const FrameReport&)> frame_listener;
};

// Wraps a sink with the emission counter shared by a whole enumeration.
class ConflictEmitter {
 public:
  explicit ConflictEmitter(ConflictSink& sink) : sink_(sink) {}

  void Emit(TaxonId x, TaxonId y, TaxonId z) {
    ++emitted_;
    sink_.Accept(ConflictTriple::Canonical(x, y, z));
  }
  std::uint64_t emitted() const { return emitted_; }

  // Elementary steps, see Instrumentation::nodes_touched.
  std::uint64_t work = 0;

 private:
  ConflictSink& sink_;
  std::uint64_t emitted_ = 0;
};

// Taxon -> leaf tables for the frame being partitioned.
class FrameScratch {
 public:
  explicit FrameScratch(std::size_t universe)
      : p_leaf_(universe, kNoNode), q_leaf_(universe, kNoNode), spare_(universe, kNoNode) {}

  // O(frame leaves).
  void Load(const Tree& p, NodeId p_root, const Tree& q, NodeId q_root);
  NodeId p_leaf(TaxonId t) const { return p_leaf_[t]; }
  NodeId q_leaf(TaxonId t) const { return q_leaf_[t]; }
  // All-kNoNode table for LeafEquivalence construction.
  std::span<NodeId> spare() { return spare_; }

 private:
  std::vector<NodeId> p_leaf_;
  std::vector<NodeId> q_leaf_;
  std::vector<NodeId> spare_;
};

// For a root-child pair (x_p of P, x_q of Q): com_p / unc_p are the leaves
// of x_p that are / are not below x_q, in P post-order; com_q / unc_q are
// the leaves of x_q that are / are not below x_p, in Q post-order.
struct LeafPartition {
  std::vector<NodeId> com_p;
  std::vector<NodeId> unc_p;
  std::vector<NodeId> com_q;
  std::vector<NodeId> unc_q;
};

// Requires scratch loaded for a frame containing x_p and x_q.
LeafPartition partition_leaves(const Tree& p, NodeId x_p, const Tree& q, NodeId x_q,
                               const FrameScratch& scratch);

// Lists every triple {a, b, c} with a in com, b in unc and c in rest, all
// leaves of p.
void list_common_root_conflicts(ConflictEmitter& out, const Tree& p, std::span<const NodeId> com,
                                std::span<const NodeId> unc, std::span<const NodeId> rest);

// Buffers reused across list_subtree_conflicts calls.
struct SubtreeScratch {
  InducedBuilder builder;
  Tree restricted;
  std::vector<NodeId> merged;
};

// Lists every triple {a, b, c} with a, b in z, c in candidates and
// lca(a, b) == lca(a, b, c) in t. Both sequences are disjoint leaves of t in
// post-order. A candidate not strictly below lca(z) contributes nothing and
// costs O(1); every other one pays O(|z|) for t restricted to z + {c} and
// lists at least |z| - 1 triples.
void list_subtree_conflicts(ConflictEmitter& out, const Tree& t, const LcaIndex& idx,
                            std::span<const NodeId> z, std::span<const NodeId> candidates,
                            SubtreeScratch& scratch);

// Throws kTaxonMismatch unless both trees are complete over one taxon set.
Instrumentation enumerate_conflicts(const Tree& p, const Tree& q, ConflictSink& sink,
                                    const EnumerateOptions& options = {});

std::uint64_t count_conflicts(const Tree& p, const Tree& q);

}  // namespace tripconf
