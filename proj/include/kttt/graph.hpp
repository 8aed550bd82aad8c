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
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace kttt {

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised by the text readers; carries the 1-based line of the offending input.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what);
  ParseError(const std::string& path, std::size_t line, const std::string& what);
  std::size_t line() const noexcept { return line_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  std::size_t line_;
  std::string detail_;
};

class InstanceTooLarge : public Error {
 public:
  using Error::Error;
};

/// Dense membership over [0, universe) with a cached cardinality.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(std::size_t universe) : bits_(universe, 0) {}

  static VertexSet of(std::size_t universe, std::span<const Vertex> members);
  static VertexSet all(std::size_t universe);

  bool contains(Vertex v) const { return v < bits_.size() && bits_[v] != 0; }
  /// Returns false if v was already present.
  bool insert(Vertex v);
  bool erase(Vertex v);

  std::size_t size() const noexcept { return count_; }
  bool empty() const noexcept { return count_ == 0; }
  std::size_t universe() const noexcept { return bits_.size(); }
  std::vector<Vertex> members() const;

  bool operator==(const VertexSet&) const = default;

 private:
  std::vector<std::uint8_t> bits_;
  std::size_t count_ = 0;
};

/// Immutable undirected simple graph stored as sorted adjacency arrays.
class Graph {
 public:
  Graph() : offsets_(1, 0) {}
  explicit Graph(std::size_t n) : offsets_(n + 1, 0) {}

  /// Throws std::invalid_argument on self-loops, duplicates or out-of-range ids.
  static Graph from_edges(std::size_t n, std::span<const Edge> edges);

  std::size_t num_vertices() const noexcept { return offsets_.size() - 1; }
  std::size_t num_edges() const noexcept { return adj_.size() / 2; }

  std::span<const Vertex> neighbors(Vertex v) const {
    return {adj_.data() + offsets_[v], adj_.data() + offsets_[v + 1]};
  }
  std::size_t degree(Vertex v) const { return offsets_[v + 1] - offsets_[v]; }
  bool adjacent(Vertex u, Vertex v) const;
  std::size_t max_degree() const;

  /// Edges as (u, v) with u < v, in lexicographic order.
  std::vector<Edge> edges() const;

  template <class F>
  void for_each_edge(F&& f) const {
    for (Vertex u = 0; u < num_vertices(); ++u)
      for (Vertex v : neighbors(u))
        if (u < v) f(u, v);
  }

  bool operator==(const Graph&) const = default;

 private:
  friend class GraphBuilder;
  Graph(std::vector<std::uint64_t> offsets, std::vector<Vertex> adj)
      : offsets_(std::move(offsets)), adj_(std::move(adj)) {}

  std::vector<std::uint64_t> offsets_;
  std::vector<Vertex> adj_;
};

/// Assembles a Graph from already-validated symmetric adjacency lists.
class GraphBuilder {
 public:
  static Graph from_sorted_lists(std::vector<std::vector<Vertex>> lists);
  /// Edges must be u != v, unique up to orientation, ids < n.
  static Graph from_unique_edges(std::size_t n, std::span<const Edge> edges);
};

struct RelabeledSubgraph {
  Graph graph;
  std::vector<Vertex> to_parent;
};

struct DegreeSummary {
  std::size_t max_degree = 0;
  std::uint64_t degree_sum = 0;  // 2m
  std::size_t n = 0;
  /// 2m/n, or 0 on the empty graph.
  double average() const { return n == 0 ? 0.0 : static_cast<double>(degree_sum) / static_cast<double>(n); }
};

Graph parse_edge_list(std::istream& in);
Graph parse_edge_list(std::string_view text);
void write_edge_list(std::ostream& out, const Graph& g);

DegreeSummary degrees(const Graph& g);
RelabeledSubgraph induced(const Graph& g, const VertexSet& s);
/// Induced subgraph of every class in one pass; class ids must be < k.
std::vector<RelabeledSubgraph> split_by_class(const Graph& g, std::span<const std::uint32_t> class_of,
                                              std::uint32_t k);

std::size_t common_neighbor_count(const Graph& g, Vertex u, Vertex v);
std::uint64_t triangle_count(const Graph& g);
std::uint64_t triangles_through(const Graph& g, Vertex v);
/// triangles_through for every vertex in one forward pass.
std::vector<std::uint64_t> triangles_per_vertex(const Graph& g);
std::optional<std::array<Vertex, 3>> find_triangle(const Graph& g);

bool is_independent(const Graph& g, const VertexSet& s);
/// First edge inside s, if any.
std::optional<Edge> independence_witness(const Graph& g, const VertexSet& s);

/// Min-degree greedy, lowest id among ties.
VertexSet greedy_independent_set(const Graph& g);

inline constexpr std::size_t kDefaultMisNodeCap = 40;
inline constexpr std::size_t kMaxMisNodeCap = 64;
/// Branch and bound maximum independent set; throws InstanceTooLarge above node_cap.
VertexSet exact_mis(const Graph& g, std::size_t node_cap = kDefaultMisNodeCap);

enum class SearchResult { found, absent, budget_exceeded };
const char* to_string(SearchResult r);

/// Looks for K_{t,t,t} as a (not necessarily induced) subgraph.
SearchResult contains_kttt(const Graph& g, std::size_t t, std::uint64_t budget);

}  // namespace kttt
