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

#include "tripconf/conflict_enumeration.hpp"

#include <algorithm>
#include <cassert>
#include <memory>
#include <utility>

#include "tripconf/error.hpp"

namespace tripconf {

void FrameScratch::Load(const Tree& p, NodeId p_root, const Tree& q, NodeId q_root) {
  for (const NodeId leaf : p.leaves_below(p_root)) p_leaf_[p.taxon(leaf)] = leaf;
  for (const NodeId leaf : q.leaves_below(q_root)) q_leaf_[q.taxon(leaf)] = leaf;
}

LeafPartition partition_leaves(const Tree& p, NodeId x_p, const Tree& q, NodeId x_q,
                               const FrameScratch& scratch) {
  LeafPartition part;
  for (const NodeId leaf : p.leaves_below(x_p)) {
    const bool common = q.is_ancestor(x_q, scratch.q_leaf(p.taxon(leaf)));
    (common ? part.com_p : part.unc_p).push_back(leaf);
  }
  for (const NodeId leaf : q.leaves_below(x_q)) {
    const bool common = p.is_ancestor(x_p, scratch.p_leaf(q.taxon(leaf)));
    (common ? part.com_q : part.unc_q).push_back(leaf);
  }
  return part;
}

void list_common_root_conflicts(ConflictEmitter& out, const Tree& p, std::span<const NodeId> com,
                                std::span<const NodeId> unc, std::span<const NodeId> rest) {
  if (com.empty() || unc.empty() || rest.empty()) return;
  for (const NodeId a : com) {
    for (const NodeId b : unc) {
      for (const NodeId c : rest) out.Emit(p.taxon(a), p.taxon(b), p.taxon(c));
    }
  }
}

void list_subtree_conflicts(ConflictEmitter& out, const Tree& t, const LcaIndex& idx,
                            std::span<const NodeId> z, std::span<const NodeId> candidates,
                            SubtreeScratch& scratch) {
  if (z.size() < 2) return;
  const NodeId z_root = idx.lca(z.front(), z.back());
  for (const NodeId c : candidates) {
    ++out.work;
    if (!t.is_ancestor(z_root, c)) continue;

    const auto pos = static_cast<std::size_t>(std::lower_bound(z.begin(), z.end(), c) - z.begin());
    scratch.merged.assign(z.begin(), z.begin() + static_cast<std::ptrdiff_t>(pos));
    scratch.merged.push_back(c);
    scratch.merged.insert(scratch.merged.end(), z.begin() + static_cast<std::ptrdiff_t>(pos),
                          z.end());
    scratch.builder.BuildInto(t, idx, scratch.merged, scratch.restricted, TaxonIndexing::kSkip);
    const Tree& r = scratch.restricted;
    out.work += r.node_count();

    const NodeId c_leaf = r.leaves()[pos];
    const TaxonId c_taxon = t.taxon(c);
    for (NodeId y = r.parent(c_leaf); y != r.root(); y = r.parent(y)) {
      const auto other = r.leaves_below(r.sibling(y));
      for (const NodeId a : r.leaves_below(y)) {
        if (a == c_leaf) continue;
        for (const NodeId b : other) out.Emit(r.taxon(a), r.taxon(b), c_taxon);
      }
    }
  }
}

namespace {

struct PairRefs {
  const Tree* p = nullptr;
  const Tree* q = nullptr;
  const LcaIndex* p_index = nullptr;
  const LcaIndex* q_index = nullptr;
  const LeafEquivalence* equivalence = nullptr;
};

// A restricted pair built for a com- or unc-block, with its preprocessing.
// Never moved once built: the equivalence points at the trees.
struct OwnedPair {
  Tree p;
  Tree q;
  LcaIndex p_index;
  LcaIndex q_index;
  LeafEquivalence equivalence;
};

struct Task {
  std::shared_ptr<const OwnedPair> owner;
  PairRefs refs;
  NodeId p_root = kNoNode;
  NodeId q_root = kNoNode;
};

std::vector<TaxonId> Taxa(const Tree& t, std::span<const NodeId> leaves) {
  std::vector<TaxonId> out;
  out.reserve(leaves.size());
  for (const NodeId leaf : leaves) out.push_back(t.taxon(leaf));
  return out;
}

class Enumerator {
 public:
  Enumerator(ConflictSink& sink, const EnumerateOptions& options, std::size_t universe)
      : emitter_(sink), options_(options), scratch_(universe) {}

  Instrumentation Run(const Tree& p, const Tree& q) {
    const LcaIndex p_index(p);
    const LcaIndex q_index(q);
    const LeafEquivalence equivalence(p, q, q_index);
    emitter_.work += p_index.build_work() + q_index.build_work() + equivalence.build_work() +
                     p.taxon_universe();

    tasks_.push_back({nullptr, {&p, &q, &p_index, &q_index, &equivalence}, p.root(), q.root()});
    while (!tasks_.empty()) {
      Task task = std::move(tasks_.back());
      tasks_.pop_back();
      Process(task);
    }
    stats_.nodes_touched = emitter_.work;
    stats_.triples_emitted = emitter_.emitted();
    return stats_;
  }

 private:
  void Process(const Task& task) {
    const Tree& p = *task.refs.p;
    const Tree& q = *task.refs.q;
    const LeafEquivalence& eq = *task.refs.equivalence;
    ++stats_.frames_opened;
    ++emitter_.work;

    const std::int32_t frame_leaves = p.subtree_leaf_count(task.p_root);
    if (frame_leaves <= 1) return;

    const NodeId u_p = p.left(task.p_root);
    const NodeId v_p = p.right(task.p_root);
    NodeId u_q = q.left(task.q_root);
    NodeId v_q = q.right(task.q_root);
    if (eq.equal(u_p, v_q)) std::swap(u_q, v_q);

    if (eq.equal(u_p, u_q)) {
      if (options_.frame_listener) {
        FrameReport report;
        report.leaves = Taxa(p, p.leaves_below(task.p_root));
        report.blocks[0] = Taxa(p, p.leaves_below(u_p));
        report.blocks[1] = Taxa(p, p.leaves_below(v_p));
        report.first_emission = emitter_.emitted();
        options_.frame_listener(report);
      }
      PushView(task, v_p, v_q);
      PushView(task, u_p, u_q);
      return;
    }

    ++stats_.partition_frames;
    scratch_.Load(p, task.p_root, q, task.q_root);
    const LeafPartition first = partition_leaves(p, u_p, q, u_q, scratch_);
    const LeafPartition second = partition_leaves(p, v_p, q, v_q, scratch_);
    emitter_.work += 4 * static_cast<std::uint64_t>(frame_leaves);

    const std::uint64_t before = emitter_.emitted();
    ListRootConflicts(task, first, p.leaves_below(v_p));
    ListRootConflicts(task, second, p.leaves_below(u_p));
    const std::uint64_t root_conflicts = emitter_.emitted() - before;

    stats_.root_conflicts_total += root_conflicts;
    stats_.max_root_conflicts = std::max(stats_.max_root_conflicts, root_conflicts);
    if (static_cast<std::uint64_t>(frame_leaves) > root_conflicts + 2) ++stats_.budget_violations;
    assert(static_cast<std::uint64_t>(frame_leaves) <= root_conflicts + 2);

    if (options_.frame_listener) {
      FrameReport report;
      report.partitioned = true;
      report.leaves = Taxa(p, p.leaves_below(task.p_root));
      report.blocks[0] = Taxa(p, first.com_p);
      report.blocks[1] = Taxa(p, second.com_p);
      report.blocks[2] = Taxa(p, first.unc_p);
      report.blocks[3] = Taxa(p, second.unc_p);
      report.first_emission = before;
      report.root_conflicts = root_conflicts;
      options_.frame_listener(report);
    }

    // unc(u_p, u_q) and unc(v_q, v_p) are the same taxa, as are
    // unc(v_p, v_q) and unc(u_q, u_p).
    PushRestricted(task, second.unc_p, first.unc_q);
    PushRestricted(task, first.unc_p, second.unc_q);
    PushRestricted(task, second.com_p, second.com_q);
    PushRestricted(task, first.com_p, first.com_q);
  }

  void ListRootConflicts(const Task& task, const LeafPartition& part,
                         std::span<const NodeId> rest) {
    const Tree& p = *task.refs.p;
    const Tree& q = *task.refs.q;
    list_common_root_conflicts(emitter_, p, part.com_p, part.unc_p, rest);
    list_subtree_conflicts(emitter_, p, *task.refs.p_index, part.com_p, part.unc_p, subtree_);
    list_subtree_conflicts(emitter_, p, *task.refs.p_index, part.unc_p, part.com_p, subtree_);
    list_subtree_conflicts(emitter_, q, *task.refs.q_index, part.com_q, part.unc_q, subtree_);
    list_subtree_conflicts(emitter_, q, *task.refs.q_index, part.unc_q, part.com_q, subtree_);
  }

  // Blocks with fewer than three taxa cannot hold a conflict.
  void PushView(const Task& parent, NodeId p_root, NodeId q_root) {
    if (parent.refs.p->subtree_leaf_count(p_root) < 3) return;
    tasks_.push_back({parent.owner, parent.refs, p_root, q_root});
  }

  void PushRestricted(const Task& parent, const std::vector<NodeId>& p_leaves,
                      const std::vector<NodeId>& q_leaves) {
    assert(p_leaves.size() == q_leaves.size());
    if (p_leaves.size() < 3) return;
    auto owned = std::make_shared<OwnedPair>();
    builder_.BuildInto(*parent.refs.p, *parent.refs.p_index, p_leaves, owned->p,
                       TaxonIndexing::kSkip);
    builder_.BuildInto(*parent.refs.q, *parent.refs.q_index, q_leaves, owned->q,
                       TaxonIndexing::kSkip);
    owned->p_index = LcaIndex(owned->p);
    owned->q_index = LcaIndex(owned->q);
    owned->equivalence = LeafEquivalence(owned->p, owned->q, owned->q_index, scratch_.spare());
    emitter_.work += owned->p.node_count() + owned->q.node_count() +
                     owned->p_index.build_work() + owned->q_index.build_work() +
                     owned->equivalence.build_work();
    PairRefs refs{&owned->p, &owned->q, &owned->p_index, &owned->q_index, &owned->equivalence};
    const NodeId p_root = owned->p.root();
    const NodeId q_root = owned->q.root();
    tasks_.push_back({std::move(owned), refs, p_root, q_root});
  }

  ConflictEmitter emitter_;
  const EnumerateOptions& options_;
  FrameScratch scratch_;
  SubtreeScratch subtree_;
  InducedBuilder builder_;
  std::vector<Task> tasks_;
  Instrumentation stats_;
};

}  // namespace

Instrumentation enumerate_conflicts(const Tree& p, const Tree& q, ConflictSink& sink,
                                    const EnumerateOptions& options) {
  if (!p.is_complete() || !q.is_complete() || p.taxon_universe() != q.taxon_universe()) {
    throw Error(ErrorCode::kTaxonMismatch, "trees are not over the same taxon set");
  }
  Enumerator enumerator(sink, options, p.taxon_universe());
  return enumerator.Run(p, q);
}

std::uint64_t count_conflicts(const Tree& p, const Tree& q) {
  CountingSink sink;
  enumerate_conflicts(p, q, sink);
  return sink.count;
}

}  // namespace tripconf
