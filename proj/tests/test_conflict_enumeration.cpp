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

#include <doctest.h>

#include <map>

#include "support.hpp"
#include "tripconf/conflict_enumeration.hpp"
#include "tripconf/error.hpp"
#include "tripconf/newick.hpp"

namespace tripconf {
namespace {

using testing::Sorted;

struct Pair {
  TaxonSet taxa;
  Tree p;
  Tree q;
};

Pair Example() {
  auto parsed = parse_newick(testing::kExampleP);
  Tree q = parse_newick(testing::kExampleQ, parsed.taxa);
  return {std::move(parsed.taxa), std::move(parsed.tree), std::move(q)};
}

std::vector<NodeId> Leaves(const Tree& t, const TaxonSet& taxa,
                           std::initializer_list<const char*> names) {
  std::vector<NodeId> out;
  for (const char* n : names) out.push_back(t.leaf_of(*taxa.Find(n)));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::string> Names(const TaxonSet& taxa, std::span<const ConflictTriple> triples) {
  std::vector<std::string> out;
  for (const auto& t : triples) {
    out.push_back(taxa.Name(t.a) + taxa.Name(t.b) + taxa.Name(t.c));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<ConflictTriple> Fast(const Tree& p, const Tree& q) {
  CollectingSink sink;
  enumerate_conflicts(p, q, sink);
  return sink.triples;
}

TEST_CASE("partition of the example root children") {
  const auto ex = Example();
  FrameScratch scratch(5);
  scratch.Load(ex.p, ex.p.root(), ex.q, ex.q.root());
  // Pairing after the swap rule: (AB, AB) and (CDE, DEC); inside CDE the
  // children are CD and E against DE and C.
  const NodeId p_cd = testing::NodeWithLeafSet(ex.p, testing::Taxa(ex.taxa, {"C", "D"}));
  const NodeId q_de = testing::NodeWithLeafSet(ex.q, testing::Taxa(ex.taxa, {"D", "E"}));
  const auto part = partition_leaves(ex.p, p_cd, ex.q, q_de, scratch);
  CHECK(part.com_p == Leaves(ex.p, ex.taxa, {"D"}));
  CHECK(part.unc_p == Leaves(ex.p, ex.taxa, {"C"}));
  CHECK(part.com_q == Leaves(ex.q, ex.taxa, {"D"}));
  CHECK(part.unc_q == Leaves(ex.q, ex.taxa, {"E"}));

  const NodeId p_ab = ex.p.left(ex.p.root());
  const NodeId q_ab = ex.q.left(ex.q.root());
  const auto same = partition_leaves(ex.p, p_ab, ex.q, q_ab, scratch);
  CHECK(same.com_p.size() == 2);
  CHECK(same.unc_p.empty());
  CHECK(same.unc_q.empty());
}

TEST_CASE("partition matches set arithmetic on random pairs") {
  SplitMix64 rng(77);
  for (int sample = 0; sample < 50; ++sample) {
    const std::size_t n = 3 + rng.Below(30);
    const auto g = testing::RandomTree(n, rng.Next());
    const Tree q = perturb_leaf_swaps(g.tree, rng.Below(n), rng.Next());
    FrameScratch scratch(n);
    scratch.Load(g.tree, g.tree.root(), q, q.root());
    const NodeId xp = static_cast<NodeId>(rng.Below(g.tree.node_count()));
    const NodeId xq = static_cast<NodeId>(rng.Below(q.node_count()));
    const auto part = partition_leaves(g.tree, xp, q, xq, scratch);
    const auto lp = testing::LeafSet(g.tree, xp);
    const auto lq = testing::LeafSet(q, xq);
    std::set<TaxonId> com_p;
    std::set<TaxonId> unc_p;
    std::set<TaxonId> com_q;
    std::set<TaxonId> unc_q;
    for (NodeId l : part.com_p) com_p.insert(g.tree.taxon(l));
    for (NodeId l : part.unc_p) unc_p.insert(g.tree.taxon(l));
    for (NodeId l : part.com_q) com_q.insert(q.taxon(l));
    for (NodeId l : part.unc_q) unc_q.insert(q.taxon(l));
    std::set<TaxonId> inter;
    std::set<TaxonId> p_minus;
    std::set<TaxonId> q_minus;
    std::set_intersection(lp.begin(), lp.end(), lq.begin(), lq.end(),
                          std::inserter(inter, inter.end()));
    std::set_difference(lp.begin(), lp.end(), lq.begin(), lq.end(),
                        std::inserter(p_minus, p_minus.end()));
    std::set_difference(lq.begin(), lq.end(), lp.begin(), lp.end(),
                        std::inserter(q_minus, q_minus.end()));
    CHECK(com_p == inter);
    CHECK(com_q == inter);
    CHECK(unc_p == p_minus);
    CHECK(unc_q == q_minus);
    CHECK(std::is_sorted(part.com_p.begin(), part.com_p.end()));
    CHECK(std::is_sorted(part.unc_q.begin(), part.unc_q.end()));
  }
}

TEST_CASE("common-root conflicts are the Cartesian product") {
  const auto ex = Example();
  CollectingSink sink;
  ConflictEmitter out(sink);
  list_common_root_conflicts(out, ex.p, Leaves(ex.p, ex.taxa, {"C"}),
                             Leaves(ex.p, ex.taxa, {"D"}), Leaves(ex.p, ex.taxa, {"A", "B"}));
  CHECK(Names(ex.taxa, sink.triples) == std::vector<std::string>{"ACD", "BCD"});
  CHECK(out.emitted() == 2);

  CollectingSink none;
  ConflictEmitter out2(none);
  list_common_root_conflicts(out2, ex.p, Leaves(ex.p, ex.taxa, {"C"}), {},
                             Leaves(ex.p, ex.taxa, {"A"}));
  CHECK(none.triples.empty());

  CollectingSink big;
  ConflictEmitter out3(big);
  list_common_root_conflicts(out3, ex.p, Leaves(ex.p, ex.taxa, {"A", "B"}),
                             Leaves(ex.p, ex.taxa, {"C", "D"}), Leaves(ex.p, ex.taxa, {"E"}));
  CHECK(big.triples.size() == 4);
  CHECK_FALSE(testing::HasDuplicates(big.triples));
}

TEST_CASE("subtree conflicts on the example") {
  const auto ex = Example();
  const LcaIndex idx(ex.p);
  SubtreeScratch scratch;

  CollectingSink sink;
  ConflictEmitter out(sink);
  list_subtree_conflicts(out, ex.p, idx, Leaves(ex.p, ex.taxa, {"C", "E"}),
                         Leaves(ex.p, ex.taxa, {"D"}), scratch);
  CHECK(Names(ex.taxa, sink.triples) == std::vector<std::string>{"CDE"});

  CollectingSink none;
  ConflictEmitter out2(none);
  list_subtree_conflicts(out2, ex.p, idx, Leaves(ex.p, ex.taxa, {"A", "B"}),
                         Leaves(ex.p, ex.taxa, {"C"}), scratch);
  CHECK(none.triples.empty());

  CollectingSink empty_z;
  ConflictEmitter out3(empty_z);
  list_subtree_conflicts(out3, ex.p, idx, {}, Leaves(ex.p, ex.taxa, {"C"}), scratch);
  list_subtree_conflicts(out3, ex.p, idx, Leaves(ex.p, ex.taxa, {"C"}),
                         Leaves(ex.p, ex.taxa, {"D"}), scratch);
  CHECK(empty_z.triples.empty());
}

TEST_CASE("subtree conflicts match their definition") {
  SplitMix64 rng(5150);
  for (int sample = 0; sample < 200; ++sample) {
    const std::size_t n = 2 + rng.Below(25);
    const auto g = testing::RandomTree(n, rng.Next(), static_cast<TreeShape>(sample % 3));
    const Tree& t = g.tree;
    const LcaIndex idx(t);
    std::vector<NodeId> z;
    std::vector<NodeId> cand;
    for (const NodeId leaf : t.leaves()) {
      const auto r = rng.Below(3);
      if (r == 0) z.push_back(leaf);
      if (r == 1) cand.push_back(leaf);
    }
    SubtreeScratch scratch;
    CollectingSink sink;
    ConflictEmitter out(sink);
    list_subtree_conflicts(out, t, idx, z, cand, scratch);

    std::vector<ConflictTriple> expected;
    for (std::size_t i = 0; i < z.size(); ++i) {
      for (std::size_t j = i + 1; j < z.size(); ++j) {
        const NodeId ab = testing::ParentWalkLca(t, z[i], z[j]);
        for (const NodeId c : cand) {
          if (testing::ParentWalkIsAncestor(t, ab, c)) {
            expected.push_back(ConflictTriple::Canonical(t.taxon(z[i]), t.taxon(z[j]),
                                                         t.taxon(c)));
          }
        }
      }
    }
    CHECK_FALSE(testing::HasDuplicates(sink.triples));
    REQUIRE(Sorted(sink.triples) == Sorted(expected));
  }
}

TEST_CASE("enumeration on the example") {
  const auto ex = Example();
  CollectingSink sink;
  const auto stats = enumerate_conflicts(ex.p, ex.q, sink);
  CHECK(Names(ex.taxa, sink.triples) == std::vector<std::string>{"CDE"});
  CHECK(stats.triples_emitted == 1);
  CHECK(stats.budget_violations == 0);
  CHECK(count_conflicts(ex.p, ex.q) == 1);
  CHECK(count_conflicts(ex.p, ex.p) == 0);
}

TEST_CASE("tiny trees") {
  const auto one = parse_newick("A;");
  CHECK(count_conflicts(one.tree, one.tree) == 0);
  const auto two = parse_newick("(A,B);");
  const Tree two_q = parse_newick("(B,A);", two.taxa);
  CHECK(count_conflicts(two.tree, two_q) == 0);
  const auto three = parse_newick("((A,B),C);");
  const Tree three_q = parse_newick("(A,(B,C));", three.taxa);
  CHECK(count_conflicts(three.tree, three_q) == 1);
  CHECK(count_conflicts(three.tree, three.tree) == 0);
}

TEST_CASE("mismatched taxa are rejected") {
  const auto a = testing::RandomTree(5, 1);
  const auto b = testing::RandomTree(6, 1);
  CountingSink sink;
  try {
    enumerate_conflicts(a.tree, b.tree, sink);
    FAIL("expected TaxonMismatch");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kTaxonMismatch);
  }
}

TEST_CASE("caterpillar against its reversal conflicts everywhere") {
  for (const std::size_t n : {5, 10, 20, 50}) {
    const auto cat = testing::RandomTree(n, 0, TreeShape::kCaterpillar);
    const Tree rev = reverse_labels(cat.tree);
    const auto fast = Fast(cat.tree, rev);
    CHECK(fast.size() == n * (n - 1) * (n - 2) / 6);
    CHECK_FALSE(testing::HasDuplicates(fast));
  }
}

TEST_CASE("fast enumeration equals brute force on random pairs") {
  SplitMix64 rng(4242);
  for (int sample = 0; sample < 300; ++sample) {
    const std::size_t n = 3 + rng.Below(38);
    const auto shape = static_cast<TreeShape>(rng.Below(3));
    const auto g = testing::RandomTree(n, rng.Next(), shape);
    const Tree q = sample % 4 == 0 ? testing::RandomTree(n, rng.Next()).tree
                                   : perturb_leaf_swaps(g.tree, rng.Below(n + 1), rng.Next());
    CollectingSink sink;
    const auto stats = enumerate_conflicts(g.tree, q, sink);
    CHECK_FALSE(testing::HasDuplicates(sink.triples));
    CHECK(stats.budget_violations == 0);
    CHECK(stats.triples_emitted == sink.triples.size());
    CHECK(stats.root_conflicts_total == sink.triples.size());
    REQUIRE(Sorted(sink.triples) == enumerate_bruteforce(g.tree, q));
    CHECK(Sorted(Fast(q, g.tree)) == Sorted(sink.triples));
  }
}

// Each frame emits exactly the conflicts among its leaves that are not
// confined to one of its blocks.
TEST_CASE("frames emit exactly their root conflicts") {
  SplitMix64 rng(99);
  for (int sample = 0; sample < 60; ++sample) {
    const std::size_t n = 3 + rng.Below(25);
    const auto g = testing::RandomTree(n, rng.Next());
    const Tree q = perturb_leaf_swaps(g.tree, 1 + rng.Below(4), rng.Next());
    const auto oracle = enumerate_bruteforce(g.tree, q);
    std::vector<FrameReport> frames;
    EnumerateOptions options;
    options.frame_listener = [&](const FrameReport& r) { frames.push_back(r); };
    CollectingSink sink;
    enumerate_conflicts(g.tree, q, sink, options);
    REQUIRE(!frames.empty());
    for (const auto& f : frames) {
      const std::set<TaxonId> leaves(f.leaves.begin(), f.leaves.end());
      std::map<TaxonId, int> block_of;
      for (int b = 0; b < 4; ++b) {
        for (const TaxonId x : f.blocks[static_cast<std::size_t>(b)]) block_of[x] = b;
      }
      if (f.partitioned) CHECK(block_of.size() == leaves.size());
      std::vector<ConflictTriple> expected;
      for (const auto& t : oracle) {
        if (!leaves.count(t.a) || !leaves.count(t.b) || !leaves.count(t.c)) continue;
        const bool confined = block_of.count(t.a) && block_of.count(t.b) &&
                              block_of.count(t.c) && block_of[t.a] == block_of[t.b] &&
                              block_of[t.b] == block_of[t.c];
        if (!confined) expected.push_back(t);
      }
      const auto first = static_cast<std::ptrdiff_t>(f.first_emission);
      const auto last = first + static_cast<std::ptrdiff_t>(f.root_conflicts);
      const std::vector<ConflictTriple> emitted(sink.triples.begin() + first,
                                                sink.triples.begin() + last);
      REQUIRE(Sorted(emitted) == Sorted(expected));
      if (f.partitioned) CHECK(f.leaves.size() <= f.root_conflicts + 2);
    }
  }
}

TEST_CASE("zero-conflict work is linear") {
  std::vector<double> per_leaf;
  for (const std::size_t n : {1u << 8, 1u << 10, 1u << 12}) {
    const auto g = testing::RandomTree(n, 3);
    CountingSink sink;
    const auto stats = enumerate_conflicts(g.tree, g.tree, sink);
    CHECK(sink.count == 0);
    per_leaf.push_back(static_cast<double>(stats.nodes_touched) / static_cast<double>(n));
  }
  const auto [lo, hi] = std::minmax_element(per_leaf.begin(), per_leaf.end());
  CHECK(*hi <= 1.5 * *lo);
}

TEST_CASE("callback sink") {
  const auto ex = Example();
  int calls = 0;
  CallbackSink sink([&](const ConflictTriple& t) {
    ++calls;
    CHECK(t.a < t.b);
  });
  enumerate_conflicts(ex.p, ex.q, sink);
  CHECK(calls == 1);
}

}  // namespace
}  // namespace tripconf
