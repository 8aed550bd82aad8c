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

#include "kttt/graph.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <functional>
#include <istream>
#include <limits>
#include <ostream>
#include <queue>
#include <sstream>

namespace kttt {

ParseError::ParseError(std::size_t line, const std::string& what)
    : Error("line " + std::to_string(line) + ": " + what), line_(line), detail_(what) {}

ParseError::ParseError(const std::string& path, std::size_t line, const std::string& what)
    : Error(path + ":" + std::to_string(line) + ": " + what), line_(line), detail_(what) {}

VertexSet VertexSet::of(std::size_t universe, std::span<const Vertex> members) {
  VertexSet s(universe);
  for (Vertex v : members) {
    if (v >= universe) throw std::out_of_range("vertex id outside the set universe");
    s.insert(v);
  }
  return s;
}

VertexSet VertexSet::all(std::size_t universe) {
  VertexSet s;
  s.bits_.assign(universe, 1);
  s.count_ = universe;
  return s;
}

bool VertexSet::insert(Vertex v) {
  if (bits_[v]) return false;
  bits_[v] = 1;
  ++count_;
  return true;
}

bool VertexSet::erase(Vertex v) {
  if (!bits_[v]) return false;
  bits_[v] = 0;
  --count_;
  return true;
}

std::vector<Vertex> VertexSet::members() const {
  std::vector<Vertex> out;
  out.reserve(count_);
  for (std::size_t v = 0; v < bits_.size(); ++v)
    if (bits_[v]) out.push_back(static_cast<Vertex>(v));
  return out;
}

Graph GraphBuilder::from_sorted_lists(std::vector<std::vector<Vertex>> lists) {
  std::vector<std::uint64_t> offsets(lists.size() + 1, 0);
  for (std::size_t v = 0; v < lists.size(); ++v) offsets[v + 1] = offsets[v] + lists[v].size();
  std::vector<Vertex> adj;
  adj.reserve(offsets.back());
  for (auto& l : lists) adj.insert(adj.end(), l.begin(), l.end());
  return Graph(std::move(offsets), std::move(adj));
}

Graph GraphBuilder::from_unique_edges(std::size_t n, std::span<const Edge> edges) {
  std::vector<std::uint64_t> offsets(n + 1, 0);
  for (auto [u, v] : edges) {
    ++offsets[u + 1];
    ++offsets[v + 1];
  }
  for (std::size_t v = 0; v < n; ++v) offsets[v + 1] += offsets[v];
  std::vector<Vertex> adj(offsets.back());
  std::vector<std::uint64_t> fill(offsets.begin(), offsets.end() - 1);
  for (auto [u, v] : edges) {
    adj[fill[u]++] = v;
    adj[fill[v]++] = u;
  }
  for (std::size_t v = 0; v < n; ++v)
    std::sort(adj.begin() + static_cast<std::ptrdiff_t>(offsets[v]),
              adj.begin() + static_cast<std::ptrdiff_t>(offsets[v + 1]));
  return Graph(std::move(offsets), std::move(adj));
}

Graph Graph::from_edges(std::size_t n, std::span<const Edge> edges) {
  std::vector<Edge> norm;
  norm.reserve(edges.size());
  for (auto [u, v] : edges) {
    if (u >= n || v >= n) throw std::invalid_argument("edge endpoint out of range");
    if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
    norm.emplace_back(std::min(u, v), std::max(u, v));
  }
  std::sort(norm.begin(), norm.end());
  if (auto it = std::adjacent_find(norm.begin(), norm.end()); it != norm.end())
    throw std::invalid_argument("duplicate edge " + std::to_string(it->first) + " " +
                                std::to_string(it->second));
  return GraphBuilder::from_unique_edges(n, norm);
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  auto nu = neighbors(u);
  return std::binary_search(nu.begin(), nu.end(), v);
}

std::size_t Graph::max_degree() const {
  std::size_t best = 0;
  for (Vertex v = 0; v < num_vertices(); ++v) best = std::max(best, degree(v));
  return best;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(num_edges());
  for_each_edge([&](Vertex u, Vertex v) { out.emplace_back(u, v); });
  return out;
}

namespace {

// Splits a line into unsigned integers; anything else is a parse error.
std::vector<std::uint64_t> numbers_on_line(std::string_view line, std::size_t line_no) {
  std::vector<std::uint64_t> out;
  std::size_t i = 0;
  auto is_space = [](char c) { return c == ' ' || c == '\t' || c == '\r'; };
  while (i < line.size()) {
    while (i < line.size() && is_space(line[i])) ++i;
    if (i == line.size()) break;
    std::uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(line.data() + i, line.data() + line.size(), value);
    std::size_t end = static_cast<std::size_t>(ptr - line.data());
    if (ec != std::errc{} || (end < line.size() && !is_space(line[end])))
      throw ParseError(line_no, "malformed line '" + std::string(line) + "'");
    out.push_back(value);
    i = end;
  }
  return out;
}

bool blank(std::string_view line) {
  return line.find_first_not_of(" \t\r") == std::string_view::npos;
}

}  // namespace

Graph parse_edge_list(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  std::uint64_t n = 0, m = 0;
  bool have_header = false;
  std::vector<Edge> edges;
  std::vector<std::size_t> lines;

  while (std::getline(in, line)) {
    ++line_no;
    if (blank(line)) continue;
    auto nums = numbers_on_line(line, line_no);
    if (nums.size() != 2)
      throw ParseError(line_no, have_header ? "expected 'u v'" : "expected header 'n m'");
    if (!have_header) {
      n = nums[0];
      m = nums[1];
      if (n > std::numeric_limits<Vertex>::max()) throw ParseError(line_no, "vertex count too large");
      have_header = true;
      edges.reserve(m);
      continue;
    }
    if (edges.size() == m) throw ParseError(line_no, "more edge lines than declared (" + std::to_string(m) + ")");
    auto [u, v] = std::pair{nums[0], nums[1]};
    if (u >= n || v >= n) throw ParseError(line_no, "vertex id out of range [0, " + std::to_string(n) + ")");
    if (u == v) throw ParseError(line_no, "self-loop at vertex " + std::to_string(u));
    edges.emplace_back(static_cast<Vertex>(std::min(u, v)), static_cast<Vertex>(std::max(u, v)));
    lines.push_back(line_no);
  }
  if (!have_header) throw ParseError(line_no + 1, "missing header 'n m'");
  if (edges.size() != m)
    throw ParseError(line_no + 1, "expected " + std::to_string(m) + " edges, found " + std::to_string(edges.size()));

  std::vector<std::size_t> idx(edges.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    return edges[a] != edges[b] ? edges[a] < edges[b] : a < b;
  });
  for (std::size_t i = 1; i < idx.size(); ++i)
    if (edges[idx[i]] == edges[idx[i - 1]])
      throw ParseError(lines[idx[i]], "duplicate edge " + std::to_string(edges[idx[i]].first) + " " +
                                          std::to_string(edges[idx[i]].second));
  return GraphBuilder::from_unique_edges(static_cast<std::size_t>(n), edges);
}

Graph parse_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_edge_list(in);
}

void write_edge_list(std::ostream& out, const Graph& g) {
  out << g.num_vertices() << ' ' << g.num_edges() << '\n';
  g.for_each_edge([&](Vertex u, Vertex v) { out << u << ' ' << v << '\n'; });
}

DegreeSummary degrees(const Graph& g) {
  return {g.max_degree(), 2 * static_cast<std::uint64_t>(g.num_edges()), g.num_vertices()};
}

RelabeledSubgraph induced(const Graph& g, const VertexSet& s) {
  constexpr Vertex kNone = std::numeric_limits<Vertex>::max();
  std::vector<Vertex> to_child(g.num_vertices(), kNone);
  RelabeledSubgraph out;
  out.to_parent.reserve(s.size());
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    if (s.contains(v)) {
      to_child[v] = static_cast<Vertex>(out.to_parent.size());
      out.to_parent.push_back(v);
    }
  }
  std::vector<std::vector<Vertex>> lists(out.to_parent.size());
  for (std::size_t i = 0; i < out.to_parent.size(); ++i)
    for (Vertex w : g.neighbors(out.to_parent[i]))
      if (to_child[w] != kNone) lists[i].push_back(to_child[w]);
  out.graph = GraphBuilder::from_sorted_lists(std::move(lists));
  return out;
}

std::vector<RelabeledSubgraph> split_by_class(const Graph& g, std::span<const std::uint32_t> class_of,
                                              std::uint32_t k) {
  const std::size_t n = g.num_vertices();
  std::vector<RelabeledSubgraph> parts(k);
  std::vector<Vertex> local(n);
  for (Vertex v = 0; v < n; ++v) {
    auto& to_parent = parts.at(class_of[v]).to_parent;
    local[v] = static_cast<Vertex>(to_parent.size());
    to_parent.push_back(v);
  }
  for (std::uint32_t c = 0; c < k; ++c) {
    const auto& members = parts[c].to_parent;
    std::vector<std::vector<Vertex>> lists(members.size());
    for (std::size_t i = 0; i < members.size(); ++i)
      for (Vertex u : g.neighbors(members[i]))
        if (class_of[u] == c) lists[i].push_back(local[u]);
    parts[c].graph = GraphBuilder::from_sorted_lists(std::move(lists));
  }
  return parts;
}

std::size_t common_neighbor_count(const Graph& g, Vertex u, Vertex v) {
  auto a = g.neighbors(u);
  auto b = g.neighbors(v);
  std::size_t i = 0, j = 0, c = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] < b[j]) ++i;
    else if (b[j] < a[i]) ++j;
    else { ++c; ++i; ++j; }
  }
  return c;
}

namespace {

// Neighbors of higher (degree, id) rank, each list sorted by id.
std::vector<std::vector<Vertex>> forward_lists(const Graph& g) {
  auto before = [&](Vertex a, Vertex b) {
    auto da = g.degree(a), db = g.degree(b);
    return da != db ? da < db : a < b;
  };
  std::vector<std::vector<Vertex>> fwd(g.num_vertices());
  for (Vertex u = 0; u < g.num_vertices(); ++u)
    for (Vertex v : g.neighbors(u))
      if (before(u, v)) fwd[u].push_back(v);
  return fwd;
}

template <class F>
void for_each_triangle(const Graph& g, F&& f) {
  auto fwd = forward_lists(g);
  for (Vertex u = 0; u < g.num_vertices(); ++u) {
    const auto& fu = fwd[u];
    for (Vertex v : fu) {
      const auto& fv = fwd[v];
      std::size_t i = 0, j = 0;
      while (i < fu.size() && j < fv.size()) {
        if (fu[i] < fv[j]) ++i;
        else if (fv[j] < fu[i]) ++j;
        else { f(u, v, fu[i]); ++i; ++j; }
      }
    }
  }
}

}  // namespace

std::uint64_t triangle_count(const Graph& g) {
  std::uint64_t count = 0;
  for_each_triangle(g, [&](Vertex, Vertex, Vertex) { ++count; });
  return count;
}

std::uint64_t triangles_through(const Graph& g, Vertex v) {
  std::uint64_t twice = 0;
  for (Vertex u : g.neighbors(v)) twice += common_neighbor_count(g, u, v);
  return twice / 2;
}

std::vector<std::uint64_t> triangles_per_vertex(const Graph& g) {
  std::vector<std::uint64_t> per(g.num_vertices(), 0);
  for_each_triangle(g, [&](Vertex a, Vertex b, Vertex c) {
    ++per[a];
    ++per[b];
    ++per[c];
  });
  return per;
}

std::optional<std::array<Vertex, 3>> find_triangle(const Graph& g) {
  // Lexicographically smallest triangle.
  for (Vertex a = 0; a < g.num_vertices(); ++a)
    for (Vertex b : g.neighbors(a)) {
      if (b <= a) continue;
      auto na = g.neighbors(a), nb = g.neighbors(b);
      std::size_t i = 0, j = 0;
      while (i < na.size() && j < nb.size()) {
        if (na[i] < nb[j]) ++i;
        else if (nb[j] < na[i]) ++j;
        else if (na[i] <= b) { ++i; ++j; }
        else return std::array<Vertex, 3>{a, b, na[i]};
      }
    }
  return std::nullopt;
}

std::optional<Edge> independence_witness(const Graph& g, const VertexSet& s) {
  for (Vertex u = 0; u < g.num_vertices(); ++u) {
    if (!s.contains(u)) continue;
    for (Vertex v : g.neighbors(u))
      if (u < v && s.contains(v)) return Edge{u, v};
  }
  return std::nullopt;
}

bool is_independent(const Graph& g, const VertexSet& s) { return !independence_witness(g, s); }

VertexSet greedy_independent_set(const Graph& g) {
  const std::size_t n = g.num_vertices();
  std::vector<std::uint32_t> deg(n);
  std::vector<std::uint8_t> removed(n, 0);
  std::priority_queue<std::uint64_t, std::vector<std::uint64_t>, std::greater<>> heap;
  auto key = [](std::uint64_t d, Vertex v) { return (d << 32) | v; };
  for (Vertex v = 0; v < n; ++v) {
    deg[v] = static_cast<std::uint32_t>(g.degree(v));
    heap.push(key(deg[v], v));
  }
  VertexSet out(n);
  std::vector<Vertex> dropped;
  while (!heap.empty()) {
    auto top = heap.top();
    heap.pop();
    auto v = static_cast<Vertex>(top & 0xffffffffu);
    if (removed[v] || (top >> 32) != deg[v]) continue;
    out.insert(v);
    removed[v] = 1;
    dropped.clear();
    for (Vertex u : g.neighbors(v))
      if (!removed[u]) {
        removed[u] = 1;
        dropped.push_back(u);
      }
    for (Vertex u : dropped)
      for (Vertex w : g.neighbors(u))
        if (!removed[w]) heap.push(key(--deg[w], w));
  }
  return out;
}

namespace {

class MisSolver {
 public:
  explicit MisSolver(const Graph& g) : adj_(g.num_vertices(), 0) {
    for (Vertex v = 0; v < g.num_vertices(); ++v)
      for (Vertex u : g.neighbors(v)) adj_[v] |= std::uint64_t{1} << u;
  }

  std::uint64_t solve() {
    const std::size_t n = adj_.size();
    std::uint64_t all = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
    search(all, 0);
    return best_;
  }

 private:
  // Size of a greedy maximal matching inside r; |r| - matching bounds alpha(G[r]).
  int matching(std::uint64_t r) const {
    int m = 0;
    while (r) {
      int u = std::countr_zero(r);
      r &= r - 1;
      std::uint64_t cand = adj_[u] & r;
      if (cand) {
        r &= ~(cand & -cand);
        ++m;
      }
    }
    return m;
  }

  void search(std::uint64_t r, std::uint64_t cur) {
    for (std::uint64_t scan = r; scan;) {
      int v = std::countr_zero(scan);
      scan &= scan - 1;
      if ((adj_[v] & r) == 0) {
        cur |= std::uint64_t{1} << v;
        r &= ~(std::uint64_t{1} << v);
      }
    }
    int size = std::popcount(cur);
    if (r == 0) {
      if (size > best_size_) {
        best_size_ = size;
        best_ = cur;
      }
      return;
    }
    if (size + std::popcount(r) - matching(r) <= best_size_) return;

    int pick = -1, pick_deg = -1;
    for (std::uint64_t scan = r; scan;) {
      int v = std::countr_zero(scan);
      scan &= scan - 1;
      int d = std::popcount(adj_[v] & r);
      if (d > pick_deg) {
        pick = v;
        pick_deg = d;
      }
    }
    std::uint64_t bit = std::uint64_t{1} << pick;
    search(r & ~(adj_[pick] | bit), cur | bit);
    search(r & ~bit, cur);
  }

  std::vector<std::uint64_t> adj_;
  std::uint64_t best_ = 0;
  int best_size_ = -1;
};

}  // namespace

VertexSet exact_mis(const Graph& g, std::size_t node_cap) {
  const std::size_t n = g.num_vertices();
  if (n > std::min(node_cap, kMaxMisNodeCap))
    throw InstanceTooLarge("exact_mis: " + std::to_string(n) + " vertices exceeds cap " +
                           std::to_string(std::min(node_cap, kMaxMisNodeCap)));
  VertexSet out(n);
  if (n == 0) return out;
  std::uint64_t mask = MisSolver(g).solve();
  for (Vertex v = 0; v < n; ++v)
    if (mask >> v & 1) out.insert(v);
  if (!is_independent(g, out)) throw std::logic_error("exact_mis produced a dependent set");
  return out;
}

const char* to_string(SearchResult r) {
  switch (r) {
    case SearchResult::found: return "found";
    case SearchResult::absent: return "absent";
    case SearchResult::budget_exceeded: return "budget_exceeded";
  }
  return "?";
}

namespace {

std::vector<Vertex> intersect(std::span<const Vertex> a, std::span<const Vertex> b) {
  std::vector<Vertex> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

struct BudgetExceeded {};

class KtttSearch {
 public:
  KtttSearch(const Graph& g, std::size_t t, std::uint64_t budget) : g_(g), t_(t), budget_(budget) {}

  bool run() {
    for (Vertex x = 0; x < g_.num_vertices(); ++x) {
      if (g_.degree(x) < 2 * t_) continue;
      auto nx = g_.neighbors(x);
      if (extend_first(x, std::vector<Vertex>(nx.begin(), nx.end()), 1)) return true;
    }
    return false;
  }

 private:
  void tick() {
    if (++nodes_ > budget_) throw BudgetExceeded{};
  }

  // First part grows in increasing id order; common holds the joint neighborhood.
  bool extend_first(Vertex last, const std::vector<Vertex>& common, std::size_t chosen) {
    tick();
    if (common.size() < 2 * t_) return false;
    if (chosen == t_) return extend_second(common, common, 0, 0);
    std::vector<Vertex> cands;
    for (Vertex c : common)
      for (Vertex w : g_.neighbors(c))
        if (w > last) cands.push_back(w);
    std::sort(cands.begin(), cands.end());
    cands.erase(std::unique(cands.begin(), cands.end()), cands.end());
    for (Vertex x : cands)
      if (extend_first(x, intersect(common, g_.neighbors(x)), chosen + 1)) return true;
    return false;
  }

  // Second part drawn from the first's joint neighborhood; the third must fit in what remains.
  bool extend_second(const std::vector<Vertex>& pool, const std::vector<Vertex>& rest, std::size_t from,
                     std::size_t chosen) {
    tick();
    if (rest.size() < t_) return false;
    if (chosen == t_) return true;
    for (std::size_t i = from; i < pool.size(); ++i)
      if (extend_second(pool, intersect(rest, g_.neighbors(pool[i])), i + 1, chosen + 1)) return true;
    return false;
  }

  const Graph& g_;
  std::size_t t_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
};

}  // namespace

SearchResult contains_kttt(const Graph& g, std::size_t t, std::uint64_t budget) {
  if (t == 0) throw std::invalid_argument("contains_kttt: t must be >= 1");
  try {
    return KtttSearch(g, t, budget).run() ? SearchResult::found : SearchResult::absent;
  } catch (const BudgetExceeded&) {
    return SearchResult::budget_exceeded;
  }
}

}  // namespace kttt
