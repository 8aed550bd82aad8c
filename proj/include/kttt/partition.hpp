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

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "kttt/graph.hpp"
#include "kttt/rng.hpp"
#include "kttt/turan_order.hpp"

namespace kttt {

/// Thresholds of the random-partition step. Defaults follow the asymptotic
/// formulas; every field can be overridden for small instances.
struct PartitionParams {
  std::uint64_t ell = 1;                // number of random classes
  std::uint64_t kappa_bad = 35;         // allowed same-class bad left-neighbours
  std::uint64_t mu = 100;               // C_v fires at this many good same-class edges
  std::uint64_t bad_threshold = 1;      // u in N_L(v) is bad if |N(u) ∩ N_L(v)| >= this
  std::uint64_t part_degree_bound = 2;  // A_v fires above this many same-class neighbours
  std::uint64_t max_resamples = 1'000'000;

  /// Throws std::invalid_argument when ell or part_degree_bound is zero.
  void validate() const;
  /// ell * (kappa_bad + mu + 1)
  std::uint64_t class_bound() const;
};

/// ceil(x^(num/den)) for integer x, computed exactly.
std::uint64_t ceil_rational_power(std::uint64_t x, std::uint64_t num, std::uint64_t den);

PartitionParams default_params(std::uint64_t delta, std::uint64_t t);

enum class EventKind : std::uint8_t { A = 0, B = 1, C = 2 };
const char* to_string(EventKind k);

struct BadEvent {
  EventKind kind;
  Vertex vertex;
  std::vector<Vertex> witness;      // offending same-class vertices
  std::vector<Edge> witness_edges;  // C only: edges spanned by good same-class left-neighbours

  bool operator==(const BadEvent&) const = default;
};

/// Left-neighbourhood data that depends only on the graph, the ordering and bad_threshold.
class LeftStructure {
 public:
  LeftStructure(const Graph& g, const VertexOrdering& o, std::uint64_t bad_threshold);

  std::span<const Vertex> left(Vertex v) const { return left_[v]; }
  std::span<const Vertex> bad(Vertex v) const { return bad_[v]; }
  bool is_bad(Vertex v, Vertex u) const;
  std::size_t position(Vertex v) const { return pos_[v]; }

 private:
  std::vector<std::size_t> pos_;
  std::vector<std::vector<Vertex>> left_;
  std::vector<std::vector<Vertex>> bad_;
};

/// Left-neighbours u of v with |N(u) ∩ N_L(v)| >= threshold.
VertexSet classify_left_bad(const Graph& g, const VertexOrdering& o, Vertex v, std::uint64_t threshold);

using ClassAssignment = std::vector<std::uint32_t>;

/// All violated events, ordered by (vertex, kind).
std::vector<BadEvent> find_bad_events(const Graph& g, const VertexOrdering& o, const ClassAssignment& coloring,
                                      const PartitionParams& params);

class PartitionFailure : public Error {
 public:
  using Error::Error;
};

struct ResampleResult {
  ClassAssignment coloring;
  std::uint64_t resamples = 0;
};

/// Uniform random classes, then resample N[v] for the lowest violated event
/// until none remain. Throws PartitionFailure once max_resamples is spent.
ResampleResult moser_tardos_partition(const Graph& g, const VertexOrdering& o, const PartitionParams& params,
                                      Rng rng);

struct ClassCertificate {
  std::size_t size = 0;
  std::uint64_t triangles = 0;
  std::size_t max_degree = 0;
};

struct Partition {
  std::vector<std::uint32_t> class_of;
  std::uint32_t k = 0;
  std::vector<ClassCertificate> certificates;
  std::size_t max_removed = 0;        // max |S_{v,i}|
  std::uint32_t max_subclasses = 0;   // colours used inside the worst random class
};

class CertificationFailure : public Error {
 public:
  using Error::Error;
};

/// Splits each random class along the ordering so that no final class holds a triangle.
Partition cleanup_to_triangle_free(const Graph& g, const VertexOrdering& o, const ClassAssignment& coloring,
                                   const PartitionParams& params);

struct PartitionReport {
  bool pass = false;
  std::uint32_t k = 0;
  std::vector<ClassCertificate> certificates;
  std::optional<std::pair<std::uint32_t, std::array<Vertex, 3>>> triangle_witness;
  std::vector<std::uint32_t> over_degree;  // classes whose max degree exceeds the bound
};

class InvalidPartition : public Error {
 public:
  using Error::Error;
};

/// Exact per-class recount. Throws InvalidPartition if a vertex is unassigned.
PartitionReport verify_partition(const Graph& g, const std::vector<std::uint32_t>& class_of,
                                 std::uint64_t degree_bound);
PartitionReport verify_partition(const Graph& g, const Partition& p, std::uint64_t degree_bound);

struct PartitionRun {
  VertexOrdering ordering;
  PartitionParams params;
  ResampleResult resampled;
  Partition partition;
};

/// ordering -> resampling -> cleanup.
PartitionRun partition_triangle_free(const Graph& g, const PartitionParams& params, Rng rng);

}  // namespace kttt
