/*
 * Copyright 2026 The tripconf Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/*
 * C interface of libtripconf.
 *
 * Trees are opaque handles owning their topology and a (shared) taxon
 * table. Every fallible call returns a tripconf_status; on failure a
 * description is available from tripconf_last_error() on the same thread
 * until the next failing call. Taxon identifiers passed to callbacks are
 * those of the first tree argument and index tripconf_tree_taxon_name().
 */

#ifndef TRIPCONF_TRIPCONF_H_
#define TRIPCONF_TRIPCONF_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(TRIPCONF_BUILDING_LIBRARY)
#    define TRIPCONF_API __declspec(dllexport)
#  else
#    define TRIPCONF_API __declspec(dllimport)
#  endif
#else
#  define TRIPCONF_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct tripconf_tree tripconf_tree;

typedef enum tripconf_status {
  TRIPCONF_OK = 0,
  TRIPCONF_ERR_SYNTAX = 1,
  TRIPCONF_ERR_NON_BINARY = 2,
  TRIPCONF_ERR_DUPLICATE_LABEL = 3,
  TRIPCONF_ERR_EMPTY_TREE = 4,
  TRIPCONF_ERR_TAXON_MISMATCH = 5,
  TRIPCONF_ERR_INVALID_ARGUMENT = 6,
  TRIPCONF_ERR_INTERNAL = 7
} tripconf_status;

typedef enum tripconf_shape {
  TRIPCONF_SHAPE_UNIFORM = 0,
  TRIPCONF_SHAPE_CATERPILLAR = 1,
  TRIPCONF_SHAPE_BALANCED = 2
} tripconf_shape;

typedef struct tripconf_stats {
  uint64_t frames_opened;
  uint64_t partition_frames;
  uint64_t nodes_touched;
  uint64_t triples_emitted;
  uint64_t root_conflicts_total;
  uint64_t max_root_conflicts;
  uint64_t budget_violations;
} tripconf_stats;

/* Called once per conflict with a < b < c. */
typedef void (*tripconf_conflict_fn)(void* user, uint32_t a, uint32_t b, uint32_t c);

TRIPCONF_API const char* tripconf_version(void);
TRIPCONF_API const char* tripconf_last_error(void);
TRIPCONF_API const char* tripconf_status_name(tripconf_status status);

/* Parses one Newick tree of `length` bytes. With a non-NULL `reference` the
 * tree shares the reference's taxon table and must carry exactly its
 * labels (TRIPCONF_ERR_TAXON_MISMATCH otherwise). */
TRIPCONF_API tripconf_status tripconf_tree_parse(const char* text, size_t length,
                                                 const tripconf_tree* reference,
                                                 tripconf_tree** out);
TRIPCONF_API tripconf_status tripconf_tree_generate(size_t n, uint64_t seed, tripconf_shape shape,
                                                    tripconf_tree** out);
/* Copy with `swaps` random leaf-label exchanges; shares the taxon table. */
TRIPCONF_API tripconf_status tripconf_tree_perturb(const tripconf_tree* tree, size_t swaps,
                                                   uint64_t seed, tripconf_tree** out);
/* Copy in which taxon i is replaced by taxon n - 1 - i. */
TRIPCONF_API tripconf_status tripconf_tree_reverse_labels(const tripconf_tree* tree,
                                                          tripconf_tree** out);
TRIPCONF_API void tripconf_tree_free(tripconf_tree* tree);

TRIPCONF_API size_t tripconf_tree_taxon_count(const tripconf_tree* tree);
/* NULL when out of range. Valid while the tree lives. */
TRIPCONF_API const char* tripconf_tree_taxon_name(const tripconf_tree* tree, uint32_t taxon);
/* *out is NUL-terminated and released with tripconf_string_free. */
TRIPCONF_API tripconf_status tripconf_tree_to_newick(const tripconf_tree* tree, char** out);
TRIPCONF_API void tripconf_string_free(char* text);

/* Output-sensitive enumeration; `stats` may be NULL. */
TRIPCONF_API tripconf_status tripconf_enumerate(const tripconf_tree* p, const tripconf_tree* q,
                                                tripconf_conflict_fn fn, void* user,
                                                tripconf_stats* stats);
/* Cubic reference enumeration, ascending (a, b, c) order. */
TRIPCONF_API tripconf_status tripconf_enumerate_bruteforce(const tripconf_tree* p,
                                                           const tripconf_tree* q,
                                                           tripconf_conflict_fn fn, void* user);
TRIPCONF_API tripconf_status tripconf_count(const tripconf_tree* p, const tripconf_tree* q,
                                            uint64_t* out);

#ifdef __cplusplus
}  /* extern "C" */
#endif

#endif  /* TRIPCONF_TRIPCONF_H_ */
