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

#include "kttt/turan_order.hpp"

#include <algorithm>
#include <functional>
#include <queue>

namespace kttt {

CodegreeProfile codegree_profile(const Graph& g) {
  CodegreeProfile p;
  p.edges = g.edges();
  p.codegree.reserve(p.edges.size());
  for (auto [u, v] : p.edges) {
    auto q = static_cast<std::uint32_t>(common_neighbor_count(g, u, v));
    p.codegree.push_back(q);
    p.sum += q;
    p.max = std::max(p.max, q);
  }
  p.histogram.assign(static_cast<std::size_t>(p.max) + 1, 0);
  for (auto q : p.codegree) ++p.histogram[q];
  return p;
}

BigInt star_extension_floor(const CodegreeProfile& profile, std::size_t t) {
  if (t == 0) throw std::invalid_argument("star_extension_floor: t must be >= 1");
  BigInt total = 0;
  for (std::size_t q = t; q < profile.histogram.size(); ++q) {
    if (profile.histogram[q] == 0) continue;
    BigInt binom = 1;
    for (std::size_t i = 0; i < t; ++i) {
      binom *= q - i;
      binom /= i + 1;
    }
    total += binom * profile.histogram[q];
  }
  return total;
}

std::vector<std::size_t> VertexOrdering::positions() const {
  std::vector<std::size_t> pos(order.size());
  for (std::size_t i = 0; i < order.size(); ++i) pos[order[i]] = i;
  return pos;
}

std::uint64_t VertexOrdering::max_left() const {
  return left_tri.empty() ? 0 : *std::max_element(left_tri.begin(), left_tri.end());
}

LeftSparseOrdering build_left_sparse_ordering(const Graph& g) {
  const std::size_t n = g.num_vertices();
  std::vector<std::uint64_t> tri = triangles_per_vertex(g);
  std::uint64_t total = 0;
  for (auto c : tri) total += c;
  total /= 3;

  using Key = std::pair<std::uint64_t, Vertex>;
  std::priority_queue<Key, std::vector<Key>, std::greater<>> heap;
  for (Vertex v = 0; v < n; ++v) heap.emplace(tri[v], v);

  LeftSparseOrdering out;
  out.ordering.order.assign(n, 0);
  out.ordering.left_tri.assign(n, 0);
  out.steps.reserve(n);
  std::vector<std::uint8_t> alive(n, 1);
  std::vector<std::uint8_t> mark(n, 0);

  for (std::size_t remaining = n; remaining > 0; --remaining) {
    Vertex z;
    for (;;) {
      auto [c, v] = heap.top();
      heap.pop();
      if (alive[v] && c == tri[v]) {
        z = v;
        break;
      }
    }
    out.steps.push_back({z, tri[z], total, remaining});
    out.ordering.order[remaining - 1] = z;
    out.ordering.left_tri[z] = tri[z];
    total -= tri[z];
    alive[z] = 0;

    // Every residual triangle z-a-b loses one from a and from b.
    for (Vertex a : g.neighbors(z))
      if (alive[a]) mark[a] = 1;
    for (Vertex a : g.neighbors(z)) {
      if (!alive[a]) continue;
      for (Vertex b : g.neighbors(a)) {
        if (b > a && mark[b]) {
          --tri[a];
          --tri[b];
        }
      }
    }
    for (Vertex a : g.neighbors(z)) {
      mark[a] = 0;
      if (alive[a]) heap.emplace(tri[a], a);
    }
  }
  return out;
}

VertexOrdering left_sparse_ordering(const Graph& g) { return build_left_sparse_ordering(g).ordering; }

std::vector<std::uint64_t> left_triangle_counts(const Graph& g, const std::vector<Vertex>& order) {
  const std::size_t n = g.num_vertices();
  std::vector<std::size_t> pos(n);
  for (std::size_t i = 0; i < n; ++i) pos[order[i]] = i;
  std::vector<std::uint64_t> left(n, 0);
  // For each u, count edges among its neighbours that precede it.
  std::vector<std::uint8_t> mark(n, 0);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex a : g.neighbors(u))
      if (pos[a] < pos[u]) mark[a] = 1;
    std::uint64_t c = 0;
    for (Vertex a : g.neighbors(u)) {
      if (!mark[a]) continue;
      for (Vertex b : g.neighbors(a))
        if (b > a && mark[b]) ++c;
    }
    for (Vertex a : g.neighbors(u)) mark[a] = 0;
    left[u] = c;
  }
  return left;
}

LeftSparsityReport verify_left_sparsity(const Graph& g, const VertexOrdering& o, std::uint64_t bound) {
  const std::size_t n = g.num_vertices();
  if (o.order.size() != n) throw InvalidOrdering("ordering length differs from vertex count");
  std::vector<std::uint8_t> seen(n, 0);
  for (Vertex v : o.order) {
    if (v >= n || seen[v]) throw InvalidOrdering("ordering is not a permutation (vertex " + std::to_string(v) + ")");
    seen[v] = 1;
  }

  LeftSparsityReport r;
  r.bound = bound;
  auto left = left_triangle_counts(g, o.order);
  for (Vertex v = 0; v < n; ++v) {
    r.left_sum += left[v];
    r.max_left = std::max(r.max_left, left[v]);
    if (left[v] > bound) r.violators.push_back(v);
  }
  r.triangles = triangle_count(g);
  r.sum_identity = r.left_sum == r.triangles;
  r.matches_recorded = left == o.left_tri;
  r.pass = r.violators.empty() && r.sum_identity;
  return r;
}

}  // namespace kttt
