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

#include "kttt/coloring.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <limits>
#include <set>
#include <tuple>

namespace kttt {

const char* to_string(PartColorer c) {
  switch (c) {
    case PartColorer::greedy_degeneracy: return "greedy_degeneracy";
    case PartColorer::dsatur: return "dsatur";
    case PartColorer::randomized_local: return "randomized_local";
  }
  return "?";
}

PartColorer part_colorer_from_string(std::string_view s) {
  if (s == "greedy_degeneracy" || s == "greedy") return PartColorer::greedy_degeneracy;
  if (s == "dsatur") return PartColorer::dsatur;
  if (s == "randomized_local" || s == "random") return PartColorer::randomized_local;
  throw std::invalid_argument("unknown part colourer '" + std::string(s) + "'");
}

namespace {

constexpr std::uint32_t kUncolored = std::numeric_limits<std::uint32_t>::max();

std::uint32_t first_free(const Graph& g, Vertex v, const std::vector<std::uint32_t>& color,
                         std::vector<std::uint8_t>& scratch) {
  scratch.assign(g.degree(v) + 1, 0);
  for (Vertex u : g.neighbors(v))
    if (color[u] != kUncolored && color[u] < scratch.size()) scratch[color[u]] = 1;
  std::uint32_t c = 0;
  while (scratch[c]) ++c;
  return c;
}

std::uint32_t palette_of(const std::vector<std::uint32_t>& color) {
  std::uint32_t k = 0;
  for (auto c : color) k = std::max(k, c + 1);
  return k;
}

// Smallest-last order: repeatedly strip a minimum-degree vertex; colour in reverse.
Coloring greedy_degeneracy(const Graph& g) {
  const std::size_t n = g.num_vertices();
  std::vector<std::uint32_t> deg(n);
  std::set<std::pair<std::uint32_t, Vertex>> queue;
  for (Vertex v = 0; v < n; ++v) {
    deg[v] = static_cast<std::uint32_t>(g.degree(v));
    queue.emplace(deg[v], v);
  }
  std::vector<Vertex> stripped;
  std::vector<std::uint8_t> gone(n, 0);
  while (!queue.empty()) {
    auto [dv, v] = *queue.begin();
    queue.erase(queue.begin());
    gone[v] = 1;
    stripped.push_back(v);
    for (Vertex u : g.neighbors(v)) {
      if (gone[u]) continue;
      queue.erase({deg[u], u});
      queue.emplace(--deg[u], u);
    }
  }
  std::vector<std::uint32_t> color(n, kUncolored);
  std::vector<std::uint8_t> scratch;
  for (auto it = stripped.rbegin(); it != stripped.rend(); ++it) color[*it] = first_free(g, *it, color, scratch);
  return {color, palette_of(color)};
}

Coloring dsatur(const Graph& g) {
  const std::size_t n = g.num_vertices();
  std::vector<std::uint32_t> color(n, kUncolored);
  std::vector<std::set<std::uint32_t>> seen(n);
  // Highest saturation, then highest degree, then lowest id.
  using Key = std::tuple<std::int64_t, std::int64_t, Vertex>;
  std::set<Key> queue;
  auto key = [&](Vertex v) {
    return Key{-static_cast<std::int64_t>(seen[v].size()), -static_cast<std::int64_t>(g.degree(v)), v};
  };
  for (Vertex v = 0; v < n; ++v) queue.insert(key(v));
  std::vector<std::uint8_t> scratch;
  while (!queue.empty()) {
    Vertex v = std::get<2>(*queue.begin());
    queue.erase(queue.begin());
    color[v] = first_free(g, v, color, scratch);
    for (Vertex u : g.neighbors(v)) {
      if (color[u] != kUncolored || seen[u].count(color[v])) continue;
      queue.erase(key(u));
      seen[u].insert(color[v]);
      queue.insert(key(u));
    }
  }
  return {color, palette_of(color)};
}

Coloring randomized_local(const Graph& g, Rng& rng) {
  const std::size_t n = g.num_vertices();
  std::vector<Vertex> order(n);
  std::iota(order.begin(), order.end(), Vertex{0});
  for (std::size_t i = n; i > 1; --i) std::swap(order[i - 1], order[rng.below(i)]);
  std::vector<std::uint32_t> color(n, kUncolored);
  std::vector<std::uint8_t> scratch;
  for (Vertex v : order) color[v] = first_free(g, v, color, scratch);

  // Try to empty the top colour class by moving its members down.
  for (;;) {
    std::uint32_t k = palette_of(color);
    if (k <= 1) break;
    bool emptied = true;
    for (Vertex v = 0; v < n; ++v) {
      if (color[v] != k - 1) continue;
      color[v] = kUncolored;
      std::uint32_t c = first_free(g, v, color, scratch);
      color[v] = c;
      if (c == k - 1) emptied = false;
    }
    if (!emptied) break;
  }
  return {color, palette_of(color)};
}

}  // namespace

Coloring color_part(const Graph& g, PartColorer choice, Rng rng) {
  switch (choice) {
    case PartColorer::greedy_degeneracy: return greedy_degeneracy(g);
    case PartColorer::dsatur: return dsatur(g);
    case PartColorer::randomized_local: return randomized_local(g, rng);
  }
  throw std::invalid_argument("unknown part colourer");
}

ColoringReport verify_coloring(const Graph& g, const Coloring& c) {
  if (c.color_of.size() != g.num_vertices()) throw std::invalid_argument("colouring does not cover every vertex");
  ColoringReport r;
  g.for_each_edge([&](Vertex u, Vertex v) {
    if (c.color_of[u] == c.color_of[v]) r.monochromatic.emplace_back(u, v);
  });
  std::vector<std::uint8_t> used(c.palette_size, 0);
  bool in_range = true;
  for (auto x : c.color_of) {
    if (x >= c.palette_size) in_range = false;
    else used[x] = 1;
  }
  r.dense = in_range && std::all_of(used.begin(), used.end(), [](auto b) { return b != 0; });
  r.pass = r.monochromatic.empty() && in_range;
  return r;
}

std::uint64_t PipelineColoring::palette_bound() const {
  return static_cast<std::uint64_t>(partition.partition.k) * (1 + max_part_degree);
}

PipelineColoring color_kttt_free(const Graph& g, const PartitionParams& params, PartColorer choice, Rng rng) {
  const std::size_t n = g.num_vertices();
  PipelineColoring out;
  out.partition = partition_triangle_free(g, params, rng.derive("partition"));
  const auto& part = out.partition.partition;

  auto parts = split_by_class(g, part.class_of, part.k);
  out.coloring.color_of.assign(n, 0);
  out.part_palette.resize(part.k);
  std::uint32_t offset = 0;
  Rng colour_rng = rng.derive("colour");
  for (std::uint32_t c = 0; c < part.k; ++c) {
    const auto& sub = parts[c];
    out.max_part_degree = std::max(out.max_part_degree, sub.graph.max_degree());
    auto local = color_part(sub.graph, choice, colour_rng.derive(c));
    for (std::size_t i = 0; i < sub.to_parent.size(); ++i) out.coloring.color_of[sub.to_parent[i]] = offset + local.color_of[i];
    out.part_palette[c] = local.palette_size;
    offset += local.palette_size;
  }
  out.coloring.palette_size = offset;
  if (auto report = verify_coloring(g, out.coloring); !report.pass)
    throw std::logic_error("pipeline colouring is not proper");
  return out;
}

PipelineColoring color_kttt_free(const Graph& g, std::uint64_t t, PartColorer choice, Rng rng) {
  return color_kttt_free(g, default_params(std::max<std::uint64_t>(1, g.max_degree()), t), choice, std::move(rng));
}

}  // namespace kttt
