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
#include <optional>
#include <string>
#include <vector>

#include "kttt/graph.hpp"
#include "kttt/rng.hpp"

namespace kttt {

/// ceil(10 (1 - eps/3) ln d / ((1 + eps/5) eps)), at least 1.
std::uint64_t nibble_step_cap(double eps, double d);

struct NibbleParams {
  double eps = 0.25;
  double kappa = 0.025;            // activation scale, p = kappa / D_i
  std::uint64_t t = 1;
  std::size_t mis_node_cap = kDefaultMisNodeCap;
  double d_floor_exponent = 0.03125;  // stop once D_i < d^this
  double r_cap_exponent = 0.0125;     // stop once R_i > d^this
  std::uint64_t tau_cap = 0;          // 0: derive from the input's average degree
  bool finish_with_greedy = true;

  /// kappa = eps/10, exponents eps/8 and eps/20.
  static NibbleParams from_eps(double eps, std::uint64_t t = 1);
  void validate() const;
};

struct IsetStepStats {
  std::size_t vertices = 0;
  std::size_t max_degree = 0;
  std::size_t activated = 0;
  std::size_t activated_edges = 0;  // e(H[A])
  std::size_t independent = 0;
  std::size_t survivors = 0;
  std::size_t residual_edges = 0;
  double p = 0;
  double gamma = 0;
  bool exact_mis = false;
};

struct IsetStepResult {
  VertexSet activated;    // A
  VertexSet independent;  // I, inside A
  VertexSet survivors;    // K
  RelabeledSubgraph residual;  // H[K]
  IsetStepStats stats;
};

/// One nibble: p-random activation, equalizing coin flips, survivors away from
/// N[A], and an independent set inside H[A] (exact when |A| <= mis_node_cap).
IsetStepResult iset_step(const Graph& h, double p, Rng rng, std::size_t mis_node_cap = kDefaultMisNodeCap);

/// Success probability of the equalizing flip: (1-p)^(max_degree - degree).
double equalizing_probability(std::size_t degree, std::size_t max_degree, double p);

/// gamma (1-p) n with gamma = (1-p)^max_degree.
double expected_survivors(const Graph& h, double p);
/// gamma^2 * sum over edges of (1-p)^(-codegree).
double expected_residual_edges(const Graph& h, double p);

/// Deletes one endpoint of every edge still present; size >= |V| - e.
VertexSet deletion_greedy(const Graph& h);

struct CleaningResult {
  RelabeledSubgraph graph;
  Vertex removed;
};

/// Removes the max-degree vertex (lowest id) when its degree exceeds (1 + eps/10) d(h).
std::optional<CleaningResult> cleaning_step(const Graph& h, double eps);

enum class StepKind { clean, nibble, stop };
enum class StopReason { none, T1, T2, T3 };
const char* to_string(StepKind k);
const char* to_string(StopReason r);

struct TraceRecord {
  std::uint64_t i = 0;
  StepKind kind = StepKind::stop;
  std::uint64_t N = 0;
  std::uint64_t edges = 0;
  double D = 0;
  double R = 1;
  std::uint64_t tau = 0;

  // clean
  Vertex removed = 0;
  std::uint64_t removed_degree = 0;
  // nibble
  IsetStepStats step;
  double beta = 0;
  bool r1 = false, r2 = false, r3 = false;
  // stop
  StopReason reason = StopReason::none;
};

struct NibbleTrace {
  double eps = 0;
  double d = 0;
  std::uint64_t tau_cap = 0;
  std::vector<TraceRecord> records;

  StopReason stop_reason() const;
  std::size_t count(StepKind k) const;
};

/// One JSON object per record: i, kind, N, D, R, tau, detail.
std::string trace_record_json(const TraceRecord& r);

struct ReferenceBounds {
  double greedy = 0;          // n / (d + 1)
  double shearer_target = 0;  // (1 - eps) n ln d / d
};

/// Requires d > 1.
ReferenceBounds reference_bounds(std::size_t n, double d, double eps);

struct NibbleOutcome {
  VertexSet iset;         // I, or I ∪ greedy(H) when finishing
  VertexSet nibble_iset;  // I alone
  RelabeledSubgraph residual;
  NibbleTrace trace;
  ReferenceBounds bounds;
};

/// Alternating cleaning / nibble loop with stop rules T1-T3. Inputs with
/// average degree below 1 stop immediately (T1).
NibbleOutcome run_nibble(const Graph& g, const NibbleParams& params, Rng rng);

struct CleaningCheck {
  std::size_t checked = 0;
  std::size_t guarded = 0;  // N < 3 or D' = 0
  std::vector<std::uint64_t> lemma_violations;      // record indices i
  std::vector<std::uint64_t> corollary_violations;
  bool pass() const { return lemma_violations.empty() && corollary_violations.empty(); }
};

/// N'/D' >= (1 + eps/(5N)) N/D and (N'/D')/(N/D) >= (N/N')^(eps/20) at every cleaning step.
CleaningCheck check_cleaning_inequalities(const NibbleTrace& trace);

}  // namespace kttt
