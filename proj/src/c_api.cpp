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

#include "tripconf/tripconf.h"

#include <cstdlib>
#include <cstring>
#include <exception>
#include <memory>
#include <new>
#include <string>
#include <string_view>
#include <vector>

#include "tripconf/conflict_enumeration.hpp"
#include "tripconf/error.hpp"
#include "tripconf/newick.hpp"
#include "tripconf/tree_generator.hpp"
#include "tripconf/triple_oracle.hpp"

struct tripconf_tree {
  std::shared_ptr<const tripconf::TaxonSet> taxa;
  tripconf::Tree tree;
};

namespace {

thread_local std::string g_last_error;

tripconf_status ToStatus(tripconf::ErrorCode code) {
  using tripconf::ErrorCode;
  switch (code) {
    case ErrorCode::kSyntax: return TRIPCONF_ERR_SYNTAX;
    case ErrorCode::kNonBinary: return TRIPCONF_ERR_NON_BINARY;
    case ErrorCode::kDuplicateLabel: return TRIPCONF_ERR_DUPLICATE_LABEL;
    case ErrorCode::kEmptyTree: return TRIPCONF_ERR_EMPTY_TREE;
    case ErrorCode::kTaxonMismatch: return TRIPCONF_ERR_TAXON_MISMATCH;
    default: return TRIPCONF_ERR_INVALID_ARGUMENT;
  }
}

template <typename Fn>
tripconf_status Guard(Fn&& fn) {
  try {
    fn();
    return TRIPCONF_OK;
  } catch (const tripconf::Error& e) {
    g_last_error = e.what();
    return ToStatus(e.code());
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
    return TRIPCONF_ERR_INTERNAL;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return TRIPCONF_ERR_INTERNAL;
  } catch (...) {
    g_last_error = "unknown error";
    return TRIPCONF_ERR_INTERNAL;
  }
}

void Require(bool ok, const char* what) {
  if (!ok) throw tripconf::Error(tripconf::ErrorCode::kInvalidArgument, what);
}

// q expressed over p's taxon identifiers.
const tripconf::Tree& Aligned(const tripconf_tree& p, const tripconf_tree& q,
                              tripconf::Tree& storage) {
  if (p.taxa == q.taxa || *p.taxa == *q.taxa) return q.tree;
  if (p.taxa->size() != q.taxa->size()) {
    throw tripconf::Error(tripconf::ErrorCode::kTaxonMismatch, "trees have different taxon counts");
  }
  std::vector<tripconf::TaxonId> mapping(q.taxa->size());
  for (std::size_t i = 0; i < mapping.size(); ++i) {
    const auto id = p.taxa->Find(q.taxa->Names()[i]);
    if (!id) {
      throw tripconf::Error(tripconf::ErrorCode::kTaxonMismatch,
                            "taxon '" + q.taxa->Names()[i] + "' missing from the first tree");
    }
    mapping[i] = *id;
  }
  storage = tripconf::relabel_leaves(q.tree, mapping);
  return storage;
}

class CallbackAdapter final : public tripconf::ConflictSink {
 public:
  CallbackAdapter(tripconf_conflict_fn fn, void* user) : fn_(fn), user_(user) {}
  void Accept(const tripconf::ConflictTriple& t) override {
    if (fn_ != nullptr) {
      fn_(user_, static_cast<uint32_t>(t.a), static_cast<uint32_t>(t.b),
          static_cast<uint32_t>(t.c));
    }
  }

 private:
  tripconf_conflict_fn fn_;
  void* user_;
};

}  // namespace

extern "C" {

const char* tripconf_version(void) { return "1.0.0"; }

const char* tripconf_last_error(void) { return g_last_error.c_str(); }

const char* tripconf_status_name(tripconf_status status) {
  switch (status) {
    case TRIPCONF_OK: return "OK";
    case TRIPCONF_ERR_SYNTAX: return "SyntaxError";
    case TRIPCONF_ERR_NON_BINARY: return "NonBinary";
    case TRIPCONF_ERR_DUPLICATE_LABEL: return "DuplicateLabel";
    case TRIPCONF_ERR_EMPTY_TREE: return "EmptyTree";
    case TRIPCONF_ERR_TAXON_MISMATCH: return "TaxonMismatch";
    case TRIPCONF_ERR_INVALID_ARGUMENT: return "InvalidArgument";
    case TRIPCONF_ERR_INTERNAL: return "Internal";
  }
  return "Unknown";
}

tripconf_status tripconf_tree_parse(const char* text, size_t length,
                                    const tripconf_tree* reference, tripconf_tree** out) {
  return Guard([&] {
    Require(out != nullptr && (text != nullptr || length == 0), "null argument");
    const std::string_view view(text == nullptr ? "" : text, length);
    auto handle = std::make_unique<tripconf_tree>();
    if (reference != nullptr) {
      handle->taxa = reference->taxa;
      handle->tree = tripconf::parse_newick(view, *reference->taxa);
    } else {
      auto parsed = tripconf::parse_newick(view);
      handle->taxa = std::make_shared<const tripconf::TaxonSet>(std::move(parsed.taxa));
      handle->tree = std::move(parsed.tree);
    }
    *out = handle.release();
  });
}

tripconf_status tripconf_tree_generate(size_t n, uint64_t seed, tripconf_shape shape,
                                       tripconf_tree** out) {
  return Guard([&] {
    Require(out != nullptr, "null argument");
    tripconf::GeneratorConfig config;
    config.n = n;
    config.seed = seed;
    switch (shape) {
      case TRIPCONF_SHAPE_UNIFORM: config.shape = tripconf::TreeShape::kUniformAttachment; break;
      case TRIPCONF_SHAPE_CATERPILLAR: config.shape = tripconf::TreeShape::kCaterpillar; break;
      case TRIPCONF_SHAPE_BALANCED: config.shape = tripconf::TreeShape::kBalanced; break;
      default: Require(false, "unknown tree shape");
    }
    auto generated = tripconf::random_binary_tree(config);
    auto handle = std::make_unique<tripconf_tree>();
    handle->taxa = std::make_shared<const tripconf::TaxonSet>(std::move(generated.taxa));
    handle->tree = std::move(generated.tree);
    *out = handle.release();
  });
}

tripconf_status tripconf_tree_perturb(const tripconf_tree* tree, size_t swaps, uint64_t seed,
                                      tripconf_tree** out) {
  return Guard([&] {
    Require(tree != nullptr && out != nullptr, "null argument");
    auto handle = std::make_unique<tripconf_tree>();
    handle->taxa = tree->taxa;
    handle->tree = tripconf::perturb_leaf_swaps(tree->tree, swaps, seed);
    *out = handle.release();
  });
}

tripconf_status tripconf_tree_reverse_labels(const tripconf_tree* tree, tripconf_tree** out) {
  return Guard([&] {
    Require(tree != nullptr && out != nullptr, "null argument");
    auto handle = std::make_unique<tripconf_tree>();
    handle->taxa = tree->taxa;
    handle->tree = tripconf::reverse_labels(tree->tree);
    *out = handle.release();
  });
}

void tripconf_tree_free(tripconf_tree* tree) { delete tree; }

size_t tripconf_tree_taxon_count(const tripconf_tree* tree) {
  return tree == nullptr ? 0 : tree->taxa->size();
}

const char* tripconf_tree_taxon_name(const tripconf_tree* tree, uint32_t taxon) {
  if (tree == nullptr || taxon >= tree->taxa->size()) return nullptr;
  return tree->taxa->Name(static_cast<tripconf::TaxonId>(taxon)).c_str();
}

tripconf_status tripconf_tree_to_newick(const tripconf_tree* tree, char** out) {
  return Guard([&] {
    Require(tree != nullptr && out != nullptr, "null argument");
    const std::string text = tripconf::serialize_newick(tree->tree, *tree->taxa);
    auto* buffer = static_cast<char*>(std::malloc(text.size() + 1));
    if (buffer == nullptr) throw std::bad_alloc();
    std::memcpy(buffer, text.c_str(), text.size() + 1);
    *out = buffer;
  });
}

void tripconf_string_free(char* text) { std::free(text); }

tripconf_status tripconf_enumerate(const tripconf_tree* p, const tripconf_tree* q,
                                   tripconf_conflict_fn fn, void* user, tripconf_stats* stats) {
  return Guard([&] {
    Require(p != nullptr && q != nullptr, "null tree");
    tripconf::Tree storage;
    const tripconf::Tree& aligned = Aligned(*p, *q, storage);
    CallbackAdapter sink(fn, user);
    const auto s = tripconf::enumerate_conflicts(p->tree, aligned, sink);
    if (stats != nullptr) {
      stats->frames_opened = s.frames_opened;
      stats->partition_frames = s.partition_frames;
      stats->nodes_touched = s.nodes_touched;
      stats->triples_emitted = s.triples_emitted;
      stats->root_conflicts_total = s.root_conflicts_total;
      stats->max_root_conflicts = s.max_root_conflicts;
      stats->budget_violations = s.budget_violations;
    }
  });
}

tripconf_status tripconf_enumerate_bruteforce(const tripconf_tree* p, const tripconf_tree* q,
                                              tripconf_conflict_fn fn, void* user) {
  return Guard([&] {
    Require(p != nullptr && q != nullptr, "null tree");
    tripconf::Tree storage;
    const tripconf::Tree& aligned = Aligned(*p, *q, storage);
    for (const auto& t : tripconf::enumerate_bruteforce(p->tree, aligned)) {
      if (fn != nullptr) {
        fn(user, static_cast<uint32_t>(t.a), static_cast<uint32_t>(t.b),
           static_cast<uint32_t>(t.c));
      }
    }
  });
}

tripconf_status tripconf_count(const tripconf_tree* p, const tripconf_tree* q, uint64_t* out) {
  return Guard([&] {
    Require(p != nullptr && q != nullptr && out != nullptr, "null argument");
    tripconf::Tree storage;
    *out = tripconf::count_conflicts(p->tree, Aligned(*p, *q, storage));
  });
}

}  // extern "C"
