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
// Newick subset for rooted binary leaf-labeled trees:
//
//   tree    := subtree ';'
//   subtree := label [':' number] | '(' subtree ',' subtree ')' [':' number]
//   label   := run of [A-Za-z0-9_.|-] | single-quoted string ('' escapes a quote)
//
// Whitespace and [bracketed comments] are skipped between tokens. Branch
// lengths are accepted and dropped. Internal node labels are rejected.

#pragma once

#include <string>
#include <string_view>

#include "tripconf/tree.hpp"

namespace tripconf {

struct ParsedTree {
  TaxonSet taxa;
  Tree tree;
};

// Interns labels in order of appearance. Throws kSyntax (with the byte
// offset in the message), kNonBinary, kDuplicateLabel.
ParsedTree parse_newick(std::string_view text);

// Parses a tree over an existing taxon set: the label set must match
// `taxa` exactly, otherwise kTaxonMismatch.
Tree parse_newick(std::string_view text, const TaxonSet& taxa);

// Children are written in stored order; labels are quoted when needed.
std::string serialize_newick(const Tree& tree, const TaxonSet& taxa);

}  // namespace tripconf
