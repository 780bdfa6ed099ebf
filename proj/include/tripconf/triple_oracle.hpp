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

#include <algorithm>
#include <compare>
#include <cstdint>
#include <vector>

#include "tripconf/lca_index.hpp"
#include "tripconf/tree.hpp"

namespace tripconf {

// A 3-set of taxa in canonical form a < b < c.
struct ConflictTriple {
  TaxonId a = kNoTaxon;
  TaxonId b = kNoTaxon;
  TaxonId c = kNoTaxon;

  static ConflictTriple Canonical(TaxonId x, TaxonId y, TaxonId z) {
    if (x > y) std::swap(x, y);
    if (y > z) std::swap(y, z);
    if (x > y) std::swap(x, y);
    return {x, y, z};
  }

  friend auto operator<=>(const ConflictTriple&, const ConflictTriple&) = default;
};

// Which pair of the canonical triple is the bias pair xy, i.e. the pair with
// lca(x, y) below lca(a, b, c).
enum class Bias : std::uint8_t { kAB_C, kAC_B, kBC_A };

struct Resolution {
  ConflictTriple taxa;
  Bias bias = Bias::kAB_C;

  friend bool operator==(const Resolution&, const Resolution&) = default;
};

// Resolution of the triple formed by three distinct leaves of t.
Resolution resolve_leaves(const Tree& t, const LcaIndex& idx, NodeId x, NodeId y, NodeId z);

// Throws kNonDistinctTaxa. Requires a taxon index on t.
Resolution resolve_triple(const Tree& t, const LcaIndex& idx, TaxonId a, TaxonId b, TaxonId c);

bool is_conflict(const Tree& p, const Tree& q, const LcaIndex& p_index, const LcaIndex& q_index,
                 TaxonId a, TaxonId b, TaxonId c);

// Tests every triple: Theta(n^3) LCA queries. Result is sorted and
// canonical. Throws kTaxonMismatch.
std::vector<ConflictTriple> enumerate_bruteforce(const Tree& p, const Tree& q);

}  // namespace tripconf
