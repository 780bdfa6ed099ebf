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

#include "tripconf/triple_oracle.hpp"

#include "tripconf/error.hpp"

namespace tripconf {

Resolution resolve_leaves(const Tree& t, const LcaIndex& idx, NodeId x, NodeId y, NodeId z) {
  // Order the leaves by taxon so the bias refers to the canonical triple.
  if (t.taxon(x) > t.taxon(y)) std::swap(x, y);
  if (t.taxon(y) > t.taxon(z)) std::swap(y, z);
  if (t.taxon(x) > t.taxon(y)) std::swap(x, y);
  if (x == y || y == z) throw Error(ErrorCode::kNonDistinctTaxa, "triple needs three leaves");

  const NodeId ab = idx.lca(x, y);
  const NodeId ac = idx.lca(x, z);
  const NodeId bc = idx.lca(y, z);
  Resolution r{{t.taxon(x), t.taxon(y), t.taxon(z)}, Bias::kAB_C};
  // Two of the pairwise LCAs coincide with the triple LCA; the third lies
  // strictly below it.
  if (ac == bc && ab != ac) {
    r.bias = Bias::kAB_C;
  } else if (ab == bc && ac != ab) {
    r.bias = Bias::kAC_B;
  } else if (ab == ac && bc != ab) {
    r.bias = Bias::kBC_A;
  } else {
    throw Error(ErrorCode::kInvalidArgument, "triple has no unique bias pair");
  }
  return r;
}

Resolution resolve_triple(const Tree& t, const LcaIndex& idx, TaxonId a, TaxonId b, TaxonId c) {
  if (a == b || b == c || a == c) {
    throw Error(ErrorCode::kNonDistinctTaxa, "triple taxa must be pairwise distinct");
  }
  const NodeId x = t.leaf_of(a);
  const NodeId y = t.leaf_of(b);
  const NodeId z = t.leaf_of(c);
  if (x == kNoNode || y == kNoNode || z == kNoNode) {
    throw Error(ErrorCode::kInvalidArgument, "taxon does not label a leaf of the tree");
  }
  return resolve_leaves(t, idx, x, y, z);
}

bool is_conflict(const Tree& p, const Tree& q, const LcaIndex& p_index, const LcaIndex& q_index,
                 TaxonId a, TaxonId b, TaxonId c) {
  return resolve_triple(p, p_index, a, b, c).bias != resolve_triple(q, q_index, a, b, c).bias;
}

std::vector<ConflictTriple> enumerate_bruteforce(const Tree& p, const Tree& q) {
  if (!p.is_complete() || !q.is_complete() || p.taxon_universe() != q.taxon_universe()) {
    throw Error(ErrorCode::kTaxonMismatch, "trees are not over the same taxon set");
  }
  const LcaIndex p_index(p);
  const LcaIndex q_index(q);
  const auto n = static_cast<TaxonId>(p.taxon_universe());
  std::vector<ConflictTriple> out;
  for (TaxonId a = 0; a < n; ++a) {
    for (TaxonId b = a + 1; b < n; ++b) {
      for (TaxonId c = b + 1; c < n; ++c) {
        if (is_conflict(p, q, p_index, q_index, a, b, c)) out.push_back({a, b, c});
      }
    }
  }
  return out;
}

}  // namespace tripconf
