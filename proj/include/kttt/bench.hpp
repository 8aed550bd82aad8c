// Copyright 2026 The kttt Authors
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

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "kttt/coloring.hpp"
#include "kttt/graph.hpp"
#include "kttt/nibble.hpp"
#include "kttt/rng.hpp"

namespace kttt {

/// Stream every algorithm run draws from; the CLI subcommands use the same one
/// so a bench row can be replayed with `kttt <algorithm> --seed s`.
inline Rng algorithm_rng(std::uint64_t seed, std::string_view algorithm) { return Rng(seed).derive(algorithm); }

enum class Algorithm { greedy, nibble, color, partition };
const char* to_string(Algorithm a);
Algorithm algorithm_from_string(std::string_view s);

/// A generator spec (seeded by the run seed unless it names its own) or a graph file.
struct InstanceSource {
  std::string spec;
  std::string path;

  std::string id() const;
  std::string family() const;
};

struct RunConfig {
  std::string subcommand = "bench";
  std::vector<InstanceSource> instances;
  std::vector<Algorithm> algorithms{Algorithm::greedy, Algorithm::nibble};
  std::vector<std::uint64_t> seeds{1};
  NibbleParams nibble;
  std::uint64_t t = 1;
  PartColorer colorer = PartColorer::greedy_degeneracy;
  std::string csv_path;    // empty: no CSV file
  std::string iset_dir;    // empty: iset files are not written
  std::string trace_dir;   // empty: traces are not written
  std::size_t threads = 1;
  bool record_wall_time = true;

  void validate() const;
};

enum class Verdict { pass, fail, error };
const char* to_string(Verdict v);

struct RunReport {
  std::string instance;
  std::string family;
  std::size_t n = 0;
  std::size_t m = 0;
  double d = 0;
  std::size_t max_degree = 0;
  Algorithm algorithm = Algorithm::greedy;
  std::uint64_t seed = 0;
  std::uint64_t size = 0;  // iset size, palette size or class count
  std::uint64_t greedy_baseline = 0;
  double shearer_target = 0;
  std::size_t n_clean = 0;
  std::size_t n_nibble = 0;
  std::string stop_reason;
  double wall_ms = 0;
  Verdict verdict = Verdict::error;
  std::string detail;
};

inline constexpr const char* kCsvVersionLine = "# kttt-bench csv v1";
/// Version line plus the column header.
std::string csv_header();
std::string csv_row(const RunReport& r);

/// Path of the iset or trace file a run writes into a directory.
std::string iset_file_name(const RunReport& r);
std::string trace_file_name(const RunReport& r);

/// One report per (instance, seed, algorithm), in that nesting order. Jobs
/// (instance, seed) run on a pool; rows are committed in job order, so the
/// output does not depend on the thread count. on_row runs on the calling thread.
std::vector<RunReport> run_suite(const RunConfig& config, const std::function<void(const RunReport&)>& on_row = {});

bool all_pass(const std::vector<RunReport>& reports);

enum class ArtifactKind { iset, coloring, partition };

struct ArtifactVerdict {
  bool pass = false;
  std::string message;  // witness on failure
};

/// Exact check of an artifact file against a graph file. For partitions,
/// degree_bound caps the class degree (nullopt: triangle-freeness only).
ArtifactVerdict verify_artifacts(const std::string& graph_path, ArtifactKind kind, const std::string& artifact_path,
                                 std::optional<std::uint64_t> degree_bound = std::nullopt);

}  // namespace kttt
