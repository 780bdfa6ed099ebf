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
// Command-line front end. Links only the C interface of libtripconf.
//
// Exit status: 0 success, 1 check mismatch, 2 I/O, parse or usage error,
// 3 taxon mismatch or non-binary input.

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "tripconf/tripconf.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitInput = 2;
constexpr int kExitTaxa = 3;

// Default n above which `check` skips the cubic oracle unless --oracle.
constexpr std::size_t kOracleLimit = 500;

struct TreeDeleter {
  void operator()(tripconf_tree* t) const { tripconf_tree_free(t); }
};
using TreePtr = std::unique_ptr<tripconf_tree, TreeDeleter>;

using Triple = std::array<std::uint32_t, 3>;

class CliError {
 public:
  CliError(int code, std::string message) : code_(code), message_(std::move(message)) {}
  int code() const { return code_; }
  const std::string& message() const { return message_; }

 private:
  int code_;
  std::string message_;
};

int ExitCodeFor(tripconf_status status) {
  switch (status) {
    case TRIPCONF_ERR_NON_BINARY:
    case TRIPCONF_ERR_TAXON_MISMATCH: return kExitTaxa;
    default: return kExitInput;
  }
}

void Check(tripconf_status status) {
  if (status != TRIPCONF_OK) {
    throw CliError(ExitCodeFor(status), std::string(tripconf_status_name(status)) + ": " +
                                            tripconf_last_error());
  }
}

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CliError(kExitInput, "cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) throw CliError(kExitInput, "cannot read '" + path + "'");
  return buffer.str();
}

TreePtr ParseFile(const std::string& path, const tripconf_tree* reference) {
  const std::string text = ReadFile(path);
  tripconf_tree* tree = nullptr;
  const tripconf_status status = tripconf_tree_parse(text.data(), text.size(), reference, &tree);
  if (status != TRIPCONF_OK) {
    throw CliError(ExitCodeFor(status), path + ": " + tripconf_status_name(status) + ": " +
                                            tripconf_last_error());
  }
  return TreePtr(tree);
}

tripconf_shape ShapeFromName(const std::string& name) {
  if (name == "uniform" || name == "uniform-attachment") return TRIPCONF_SHAPE_UNIFORM;
  if (name == "caterpillar") return TRIPCONF_SHAPE_CATERPILLAR;
  if (name == "balanced") return TRIPCONF_SHAPE_BALANCED;
  throw CliError(kExitInput, "unknown shape '" + name + "'");
}

TreePtr Generate(std::size_t n, std::uint64_t seed, tripconf_shape shape) {
  tripconf_tree* tree = nullptr;
  Check(tripconf_tree_generate(n, seed, shape, &tree));
  return TreePtr(tree);
}

TreePtr Perturb(const tripconf_tree* tree, std::size_t swaps, std::uint64_t seed) {
  tripconf_tree* out = nullptr;
  Check(tripconf_tree_perturb(tree, swaps, seed, &out));
  return TreePtr(out);
}

std::vector<Triple> Collect(const tripconf_tree* p, const tripconf_tree* q, bool oracle,
                            tripconf_stats* stats = nullptr) {
  std::vector<Triple> out;
  auto push = [](void* user, std::uint32_t a, std::uint32_t b, std::uint32_t c) {
    static_cast<std::vector<Triple>*>(user)->push_back({a, b, c});
  };
  if (oracle) {
    Check(tripconf_enumerate_bruteforce(p, q, push, &out));
  } else {
    Check(tripconf_enumerate(p, q, push, &out, stats));
  }
  return out;
}

std::array<std::string, 3> Labels(const tripconf_tree* tree, const Triple& t) {
  std::array<std::string, 3> labels{tripconf_tree_taxon_name(tree, t[0]),
                                    tripconf_tree_taxon_name(tree, t[1]),
                                    tripconf_tree_taxon_name(tree, t[2])};
  std::sort(labels.begin(), labels.end());
  return labels;
}

std::string StatsLine(std::size_t n, const tripconf_stats& s) {
  std::ostringstream line;
  line << "n=" << n << " d=" << s.triples_emitted << " frames_opened=" << s.frames_opened
       << " nodes_touched=" << s.nodes_touched;
  return line.str();
}

// --- conflicts / count ---------------------------------------------------

struct ConflictsOptions {
  std::string p_path;
  std::string q_path;
  std::string format = "text";
  bool sorted = false;
  bool stats = false;
};

int RunConflicts(const ConflictsOptions& opt) {
  const TreePtr p = ParseFile(opt.p_path, nullptr);
  const TreePtr q = ParseFile(opt.q_path, p.get());
  const std::size_t n = tripconf_tree_taxon_count(p.get());
  tripconf_stats stats{};
  const std::vector<Triple> triples = Collect(p.get(), q.get(), false, &stats);

  std::vector<std::array<std::string, 3>> rows;
  rows.reserve(triples.size());
  for (const auto& t : triples) rows.push_back(Labels(p.get(), t));
  if (opt.sorted) std::sort(rows.begin(), rows.end());

  if (opt.format == "json") {
    nlohmann::ordered_json doc;
    doc["n"] = n;
    doc["d"] = stats.triples_emitted;
    doc["conflicts"] = nlohmann::ordered_json::array();
    for (const auto& row : rows) doc["conflicts"].push_back(row);
    doc["stats"] = {{"frames_opened", stats.frames_opened},
                    {"partition_frames", stats.partition_frames},
                    {"nodes_touched", stats.nodes_touched},
                    {"triples_emitted", stats.triples_emitted},
                    {"budget_violations", stats.budget_violations}};
    std::cout << doc.dump(2) << '\n';
  } else {
    std::string out;
    if (opt.format == "tsv") out += "a\tb\tc\n";
    for (const auto& row : rows) {
      out += row[0];
      out += '\t';
      out += row[1];
      out += '\t';
      out += row[2];
      out += '\n';
    }
    std::cout << out;
  }
  std::cout.flush();
  if (opt.stats) std::cerr << StatsLine(n, stats) << '\n';
  return kExitOk;
}

int RunCount(const std::string& p_path, const std::string& q_path) {
  const TreePtr p = ParseFile(p_path, nullptr);
  const TreePtr q = ParseFile(q_path, p.get());
  std::uint64_t d = 0;
  Check(tripconf_count(p.get(), q.get(), &d));
  std::cout << d << '\n';
  return kExitOk;
}

// --- check ---------------------------------------------------------------

struct CheckOptions {
  std::string p_path;
  std::string q_path;
  bool force_oracle = false;
  std::size_t n = 30;
  std::size_t k = 3;
  std::size_t reps = 100;
  std::uint64_t seed = 1;
  std::string shape = "uniform";
};

void ReportDiff(const tripconf_tree* names, const std::vector<Triple>& missing,
                const std::vector<Triple>& extra) {
  auto sample = [&](const char* what, const std::vector<Triple>& set) {
    std::cerr << "  " << what << ": " << set.size();
    for (std::size_t i = 0; i < std::min<std::size_t>(set.size(), 5); ++i) {
      const auto l = Labels(names, set[i]);
      std::cerr << (i == 0 ? "  e.g. " : ", ") << l[0] << ' ' << l[1] << ' ' << l[2];
    }
    std::cerr << '\n';
  };
  sample("missing from fast enumeration", missing);
  sample("spurious in fast enumeration", extra);
}

// Returns true when the pair passes.
bool CheckPair(const tripconf_tree* p, const tripconf_tree* q, bool use_oracle,
               const std::string& tag) {
  std::vector<Triple> fast = Collect(p, q, false);
  const std::size_t emitted = fast.size();
  std::sort(fast.begin(), fast.end());
  fast.erase(std::unique(fast.begin(), fast.end()), fast.end());
  bool ok = true;
  if (fast.size() != emitted) {
    std::cerr << tag << ": " << emitted - fast.size() << " duplicate emissions\n";
    ok = false;
  }
  std::vector<Triple> reference;
  if (use_oracle) {
    reference = Collect(p, q, true);
  } else {
    // Without the oracle, compare against the swapped argument order.
    reference = Collect(q, p, false);
    std::sort(reference.begin(), reference.end());
  }
  if (reference != fast) {
    std::vector<Triple> missing;
    std::vector<Triple> extra;
    std::set_difference(reference.begin(), reference.end(), fast.begin(), fast.end(),
                        std::back_inserter(missing));
    std::set_difference(fast.begin(), fast.end(), reference.begin(), reference.end(),
                        std::back_inserter(extra));
    std::cerr << tag << ": mismatch against " << (use_oracle ? "oracle" : "swapped enumeration")
              << '\n';
    ReportDiff(p, missing, extra);
    ok = false;
  }
  return ok;
}

int RunCheck(const CheckOptions& opt) {
  if (!opt.p_path.empty()) {
    if (opt.q_path.empty()) throw CliError(kExitInput, "check needs two tree files");
    const TreePtr p = ParseFile(opt.p_path, nullptr);
    const TreePtr q = ParseFile(opt.q_path, p.get());
    const std::size_t n = tripconf_tree_taxon_count(p.get());
    const bool oracle = opt.force_oracle || n <= kOracleLimit;
    if (!oracle) std::cerr << "check: n=" << n << " above oracle limit, comparing P,Q with Q,P\n";
    const bool ok = CheckPair(p.get(), q.get(), oracle, "check");
    std::cerr << "check: " << (ok ? "agree" : "MISMATCH") << '\n';
    return ok ? kExitOk : kExitMismatch;
  }
  const tripconf_shape shape = ShapeFromName(opt.shape);
  std::size_t failures = 0;
  for (std::size_t rep = 0; rep < opt.reps; ++rep) {
    const std::uint64_t tree_seed = opt.seed + 2 * rep;
    const TreePtr p = Generate(opt.n, tree_seed, shape);
    const TreePtr q = Perturb(p.get(), opt.k, tree_seed + 1);
    const bool oracle = opt.force_oracle || opt.n <= kOracleLimit;
    if (!CheckPair(p.get(), q.get(), oracle, "seed " + std::to_string(tree_seed))) ++failures;
  }
  std::cerr << "check: " << opt.reps - failures << "/" << opt.reps << " pairs agree\n";
  return failures == 0 ? kExitOk : kExitMismatch;
}

// --- bench / gen ---------------------------------------------------------

struct BenchOptions {
  std::string shape = "uniform";
  std::vector<std::size_t> n{1024};
  std::vector<std::size_t> k{1};
  std::size_t reps = 1;
  std::uint64_t seed = 1;
};

int RunBench(const BenchOptions& opt) {
  const tripconf_shape shape = ShapeFromName(opt.shape);
  std::cout << "shape\tn\tk\tseed\td\tframes_opened\tnodes_touched\twall_ms\tratio\n";
  auto count = [](void* user, std::uint32_t, std::uint32_t, std::uint32_t) {
    ++*static_cast<std::uint64_t*>(user);
  };
  for (const std::size_t n : opt.n) {
    for (const std::size_t k : opt.k) {
      for (std::size_t rep = 0; rep < opt.reps; ++rep) {
        const std::uint64_t tree_seed = opt.seed + 2 * rep;
        const TreePtr p = Generate(n, tree_seed, shape);
        const TreePtr q = Perturb(p.get(), k, tree_seed + 1);
        std::uint64_t d = 0;
        tripconf_stats stats{};
        const auto start = std::chrono::steady_clock::now();
        Check(tripconf_enumerate(p.get(), q.get(), count, &d, &stats));
        const std::chrono::duration<double, std::milli> wall =
            std::chrono::steady_clock::now() - start;
        const double ratio =
            static_cast<double>(stats.nodes_touched) / static_cast<double>(n + d);
        std::cout << opt.shape << '\t' << n << '\t' << k << '\t' << tree_seed << '\t' << d << '\t'
                  << stats.frames_opened << '\t' << stats.nodes_touched << '\t' << wall.count()
                  << '\t' << ratio << '\n';
      }
    }
  }
  return kExitOk;
}

struct GenOptions {
  std::size_t n = 10;
  std::uint64_t seed = 1;
  std::string shape = "uniform";
  std::size_t k = 0;
  std::uint64_t perturb_seed = 0;
  bool perturb_seed_set = false;
  bool reverse = false;
};

int RunGen(const GenOptions& opt) {
  TreePtr tree = Generate(opt.n, opt.seed, ShapeFromName(opt.shape));
  if (opt.reverse) {
    tripconf_tree* reversed = nullptr;
    Check(tripconf_tree_reverse_labels(tree.get(), &reversed));
    tree.reset(reversed);
  }
  if (opt.k > 0) {
    tree = Perturb(tree.get(), opt.k, opt.perturb_seed_set ? opt.perturb_seed : opt.seed + 1);
  }
  char* text = nullptr;
  Check(tripconf_tree_to_newick(tree.get(), &text));
  std::cout << text << '\n';
  tripconf_string_free(text);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  std::ios::sync_with_stdio(false);
  CLI::App app{"Enumerate conflict triples between two rooted binary trees"};
  app.require_subcommand(1, 1);
  app.set_version_flag("--version", std::string(tripconf_version()));

  ConflictsOptions conflicts;
  auto* conflicts_cmd = app.add_subcommand("conflicts", "List every conflict triple");
  conflicts_cmd->add_option("P", conflicts.p_path, "First tree (Newick)")->required();
  conflicts_cmd->add_option("Q", conflicts.q_path, "Second tree (Newick)")->required();
  conflicts_cmd->add_option("--format", conflicts.format, "Output format")
      ->check(CLI::IsMember({"text", "tsv", "json"}));
  conflicts_cmd->add_flag("--sorted", conflicts.sorted, "Sort lines lexicographically");
  conflicts_cmd->add_flag("--stats", conflicts.stats, "Print work counters to stderr");

  std::string count_p;
  std::string count_q;
  auto* count_cmd = app.add_subcommand("count", "Print the number of conflict triples");
  count_cmd->add_option("P", count_p, "First tree (Newick)")->required();
  count_cmd->add_option("Q", count_q, "Second tree (Newick)")->required();

  CheckOptions check;
  auto* check_cmd = app.add_subcommand(
      "check", "Compare the fast enumerator with the cubic oracle (files or generated pairs)");
  check_cmd->add_option("P", check.p_path, "First tree (Newick)");
  check_cmd->add_option("Q", check.q_path, "Second tree (Newick)");
  check_cmd->add_flag("--oracle", check.force_oracle, "Run the oracle regardless of n");
  check_cmd->add_option("--n", check.n, "Taxa per generated tree");
  check_cmd->add_option("--k", check.k, "Leaf swaps between generated trees");
  check_cmd->add_option("--reps", check.reps, "Generated pairs");
  check_cmd->add_option("--seed", check.seed, "Base seed");
  check_cmd->add_option("--shape", check.shape, "uniform | caterpillar | balanced");

  BenchOptions bench;
  auto* bench_cmd = app.add_subcommand("bench", "Run a seeded corpus and report work counters");
  bench_cmd->add_option("--shape", bench.shape, "uniform | caterpillar | balanced");
  bench_cmd->add_option("--n", bench.n, "Taxa counts")->delimiter(',');
  bench_cmd->add_option("--k", bench.k, "Leaf swap counts")->delimiter(',');
  bench_cmd->add_option("--reps", bench.reps, "Instances per (n, k)");
  bench_cmd->add_option("--seed", bench.seed, "Base seed");

  GenOptions gen;
  auto* gen_cmd = app.add_subcommand("gen", "Print a generated tree as Newick");
  gen_cmd->add_option("--n", gen.n, "Taxa");
  gen_cmd->add_option("--seed", gen.seed, "Seed");
  gen_cmd->add_option("--shape", gen.shape, "uniform | caterpillar | balanced");
  gen_cmd->add_option("--k", gen.k, "Leaf swaps applied after generation");
  auto* perturb_seed = gen_cmd->add_option("--perturb-seed", gen.perturb_seed,
                                           "Seed for the swaps (default seed + 1)");
  gen_cmd->add_flag("--reverse", gen.reverse, "Reverse the taxon order of the leaves");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  }
  gen.perturb_seed_set = perturb_seed->count() > 0;

  try {
    if (*conflicts_cmd) return RunConflicts(conflicts);
    if (*count_cmd) return RunCount(count_p, count_q);
    if (*check_cmd) return RunCheck(check);
    if (*bench_cmd) return RunBench(bench);
    if (*gen_cmd) return RunGen(gen);
  } catch (const CliError& e) {
    std::cerr << "tripconf: " << e.message() << '\n';
    return e.code();
  }
  return kExitInput;
}
