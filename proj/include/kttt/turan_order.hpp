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
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "kttt/graph.hpp"

namespace kttt {

using BigInt = boost::multiprecision::cpp_int;

/// Per-edge common-neighbour counts q_e. Edges are stored once, u < v, lexicographic.
struct CodegreeProfile {
  std::vector<Edge> edges;
  std::vector<std::uint32_t> codegree;
  std::uint64_t sum = 0;  // equals 3 * triangle_count
  std::uint32_t max = 0;
  std::vector<std::uint64_t> histogram;  // histogram[q] = #edges with q_e == q
};

CodegreeProfile codegree_profile(const Graph& g);

/// Sum over edges of binomial(q_e, t), exact.
BigInt star_extension_floor(const CodegreeProfile& profile, std::size_t t);

struct VertexOrdering {
  std::vector<Vertex> order;            // order[position] = vertex
  std::vector<std::uint64_t> left_tri;  // by vertex: triangles whose other two vertices precede it

  std::vector<std::size_t> positions() const;
  std::uint64_t max_left() const;
};

/// One extraction of the greedy construction, taken from the right end.
struct ExtractionStep {
  Vertex vertex;
  std::uint64_t vertex_triangles;    // triangles through vertex in the residual graph
  std::uint64_t residual_triangles;  // T(residual) before removal
  std::size_t residual_size;         // |residual| before removal

  /// vertex_triangles <= 3 T / n, checked in integers.
  bool within_average() const {
    return static_cast<unsigned __int128>(vertex_triangles) * residual_size <=
           static_cast<unsigned __int128>(3) * residual_triangles;
  }
};

struct LeftSparseOrdering {
  VertexOrdering ordering;
  std::vector<ExtractionStep> steps;  // in extraction order (rightmost first)
};

/// Repeatedly removes a vertex in the fewest residual triangles (lowest id on
/// ties) and places it at the rightmost free position.
LeftSparseOrdering build_left_sparse_ordering(const Graph& g);
VertexOrdering left_sparse_ordering(const Graph& g);

class InvalidOrdering : public Error {
 public:
  using Error::Error;
};

struct LeftSparsityReport {
  bool pass = false;
  std::uint64_t bound = 0;
  std::uint64_t max_left = 0;
  std::vector<Vertex> violators;   // left_tri > bound, ascending ids
  std::uint64_t left_sum = 0;
  std::uint64_t triangles = 0;
  bool sum_identity = false;       // left_sum == triangles
  bool matches_recorded = false;   // recomputation equals o.left_tri
};

/// Throws InvalidOrdering when o.order is not a permutation of the vertices.
LeftSparsityReport verify_left_sparsity(const Graph& g, const VertexOrdering& o, std::uint64_t bound);

/// left_tri recomputed from scratch for an arbitrary vertex order.
std::vector<std::uint64_t> left_triangle_counts(const Graph& g, const std::vector<Vertex>& order);

}  // namespace kttt
