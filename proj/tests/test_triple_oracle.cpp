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

#include <array>

#include "support.hpp"
#include "tripconf/error.hpp"
#include "tripconf/newick.hpp"
#include "tripconf/triple_oracle.hpp"

namespace tripconf {
namespace {

TEST_CASE("resolutions in the example trees") {
  const auto p = parse_newick(testing::kExampleP);
  const Tree q = parse_newick(testing::kExampleQ, p.taxa);
  const LcaIndex pidx(p.tree);
  const LcaIndex qidx(q);
  const TaxonId a = *p.taxa.Find("A");
  const TaxonId c = *p.taxa.Find("C");
  const TaxonId d = *p.taxa.Find("D");
  const TaxonId e = *p.taxa.Find("E");

  // C < D < E, so CD|E is the AB_C case in canonical form.
  CHECK(resolve_triple(p.tree, pidx, c, d, e).bias == Bias::kAB_C);
  CHECK(resolve_triple(q, qidx, c, d, e).bias == Bias::kBC_A);
  CHECK(is_conflict(p.tree, q, pidx, qidx, c, d, e));
  CHECK(is_conflict(p.tree, q, pidx, qidx, e, c, d));
  CHECK_FALSE(is_conflict(p.tree, q, pidx, qidx, a, c, d));
  CHECK(resolve_triple(p.tree, pidx, e, d, c).taxa == ConflictTriple{c, d, e});
}

TEST_CASE("non-distinct taxa are rejected") {
  const auto p = parse_newick(testing::kExampleP);
  const LcaIndex idx(p.tree);
  try {
    resolve_triple(p.tree, idx, 1, 1, 2);
    FAIL("expected NonDistinctTaxa");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kNonDistinctTaxa);
  }
}

TEST_CASE("bias pair agrees with the definition") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto g = testing::RandomTree(12, seed);
    const LcaIndex idx(g.tree);
    for (TaxonId a = 0; a < 12; ++a) {
      for (TaxonId b = a + 1; b < 12; ++b) {
        for (TaxonId c = b + 1; c < 12; ++c) {
          REQUIRE(resolve_triple(g.tree, idx, a, b, c).bias ==
                  testing::DefinitionBias(g.tree, a, b, c));
        }
      }
    }
  }
}

TEST_CASE("is_conflict is symmetric in the trees and in argument order") {
  const auto p = testing::RandomTree(15, 1);
  const Tree q = perturb_leaf_swaps(p.tree, 3, 2);
  const LcaIndex pidx(p.tree);
  const LcaIndex qidx(q);
  for (TaxonId a = 0; a < 15; ++a) {
    for (TaxonId b = a + 1; b < 15; ++b) {
      for (TaxonId c = b + 1; c < 15; ++c) {
        const bool base = is_conflict(p.tree, q, pidx, qidx, a, b, c);
        CHECK(is_conflict(q, p.tree, qidx, pidx, a, b, c) == base);
        std::array<TaxonId, 3> perm{a, b, c};
        while (std::next_permutation(perm.begin(), perm.end())) {
          CHECK(is_conflict(p.tree, q, pidx, qidx, perm[0], perm[1], perm[2]) == base);
        }
      }
    }
  }
}

TEST_CASE("brute force on the example") {
  const auto p = parse_newick(testing::kExampleP);
  const Tree q = parse_newick(testing::kExampleQ, p.taxa);
  const auto out = enumerate_bruteforce(p.tree, q);
  REQUIRE(out.size() == 1);
  CHECK(p.taxa.Name(out[0].a) == "C");
  CHECK(p.taxa.Name(out[0].b) == "D");
  CHECK(p.taxa.Name(out[0].c) == "E");
  CHECK(enumerate_bruteforce(p.tree, p.tree).empty());
}

TEST_CASE("brute force on caterpillar against reversed caterpillar") {
  for (std::size_t n = 3; n <= 12; ++n) {
    const auto cat = testing::RandomTree(n, 0, TreeShape::kCaterpillar);
    const Tree rev = reverse_labels(cat.tree);
    CHECK(enumerate_bruteforce(cat.tree, rev).size() == n * (n - 1) * (n - 2) / 6);
  }
}

TEST_CASE("brute force output is sorted, canonical and tree-symmetric") {
  const auto p = testing::RandomTree(25, 4);
  const Tree q = perturb_leaf_swaps(p.tree, 4, 9);
  const auto pq = enumerate_bruteforce(p.tree, q);
  CHECK(std::is_sorted(pq.begin(), pq.end()));
  CHECK_FALSE(testing::HasDuplicates(pq));
  for (const auto& t : pq) CHECK((t.a < t.b && t.b < t.c));
  CHECK(enumerate_bruteforce(q, p.tree) == pq);
}

TEST_CASE("brute force rejects different taxon universes") {
  const auto p = testing::RandomTree(5, 1);
  const auto q = testing::RandomTree(6, 1);
  CHECK_THROWS_AS(enumerate_bruteforce(p.tree, q.tree), Error);
}

}  // namespace
}  // namespace tripconf
