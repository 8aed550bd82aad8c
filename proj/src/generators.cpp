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

#include "kttt/generators.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <unordered_set>

#include "kttt/rng.hpp"

namespace kttt {

namespace {

void check_probability(double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("edge probability must lie in [0, 1]");
}

// Positions of successes in `count` Bernoulli(p) trials, via geometric skips.
template <class F>
void sample_row(Rng& rng, std::size_t count, double p, F&& emit) {
  if (p <= 0.0) return;
  std::uint64_t pos = rng.geometric(p);
  while (pos < count) {
    emit(static_cast<std::size_t>(pos));
    std::uint64_t skip = rng.geometric(p);
    if (skip >= count) break;
    pos += 1 + skip;
  }
}

}  // namespace

Graph gnp(std::size_t n, double p, std::uint64_t seed) {
  check_probability(p);
  Rng base = Rng(seed).derive("gnp");
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(std::min(1e9, p * static_cast<double>(n) * static_cast<double>(n) / 2.0 * 1.05)) + 16);
  for (std::size_t u = 0; u + 1 < n; ++u) {
    Rng row = base.derive(u);
    sample_row(row, n - u - 1, p, [&](std::size_t off) {
      edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(u + 1 + off));
    });
  }
  return GraphBuilder::from_unique_edges(n, edges);
}

Graph random_bipartite(std::size_t a, std::size_t b, double p, std::uint64_t seed) {
  check_probability(p);
  Rng base = Rng(seed).derive("bipartite");
  std::vector<Edge> edges;
  for (std::size_t u = 0; u < a; ++u) {
    Rng row = base.derive(u);
    sample_row(row, b, p, [&](std::size_t off) {
      edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(a + off));
    });
  }
  return GraphBuilder::from_unique_edges(a + b, edges);
}

Graph random_regular(std::size_t n, std::size_t d, std::uint64_t seed, std::size_t max_restarts) {
  if ((n * d) % 2 != 0) throw std::invalid_argument("random_regular: n * d must be even");
  if (d > 0 && d >= n) throw std::invalid_argument("random_regular: d must be below n");
  Rng base = Rng(seed).derive("random_regular");

  for (std::size_t attempt = 0; attempt < max_restarts; ++attempt) {
    Rng rng = base.derive(attempt);
    std::vector<Vertex> points;
    points.reserve(n * d);
    for (Vertex v = 0; v < n; ++v)
      for (std::size_t k = 0; k < d; ++k) points.push_back(v);
    std::vector<std::vector<Vertex>> adj(n);
    auto suitable = [&](Vertex u, Vertex v) {
      return u != v && std::find(adj[u].begin(), adj[u].end(), v) == adj[u].end();
    };
    auto take = [&](std::size_t i, std::size_t j) {
      Vertex u = points[i], v = points[j];
      adj[u].push_back(v);
      adj[v].push_back(u);
      if (i < j) std::swap(i, j);
      points[i] = points.back();
      points.pop_back();
      points[j] = points.back();
      points.pop_back();
    };

    bool stuck = false;
    while (!points.empty() && !stuck) {
      bool paired = false;
      for (int tries = 0; tries < 64 && !paired; ++tries) {
        std::size_t i = rng.below(points.size());
        std::size_t j = rng.below(points.size() - 1);
        if (j >= i) ++j;
        if (suitable(points[i], points[j])) {
          take(i, j);
          paired = true;
        }
      }
      if (paired) continue;
      // Few options left: pick uniformly among the suitable pairs, or restart.
      std::vector<std::pair<std::size_t, std::size_t>> options;
      for (std::size_t i = 0; i < points.size(); ++i)
        for (std::size_t j = i + 1; j < points.size(); ++j)
          if (suitable(points[i], points[j])) options.emplace_back(i, j);
      if (options.empty()) {
        stuck = true;
      } else {
        auto [i, j] = options[rng.below(options.size())];
        take(i, j);
      }
    }
    if (stuck) continue;

    std::vector<Edge> edges;
    edges.reserve(n * d / 2);
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v : adj[u])
        if (u < v) edges.emplace_back(u, v);
    return GraphBuilder::from_unique_edges(n, edges);
  }
  throw Error("random_regular: no simple pairing after " + std::to_string(max_restarts) + " restarts");
}

Graph blowup(const Graph& base, std::size_t blob) {
  if (blob == 0) throw std::invalid_argument("blowup: blob size must be >= 1");
  std::vector<Edge> edges;
  edges.reserve(base.num_edges() * blob * blob);
  base.for_each_edge([&](Vertex x, Vertex y) {
    for (std::size_t i = 0; i < blob; ++i)
      for (std::size_t j = 0; j < blob; ++j)
        edges.emplace_back(static_cast<Vertex>(x * blob + i), static_cast<Vertex>(y * blob + j));
  });
  return GraphBuilder::from_unique_edges(base.num_vertices() * blob, edges);
}

Graph disjoint_union(const Graph& g, std::size_t copies) {
  const std::size_t n = g.num_vertices();
  std::vector<Edge> edges;
  edges.reserve(g.num_edges() * copies);
  for (std::size_t c = 0; c < copies; ++c)
    g.for_each_edge([&](Vertex u, Vertex v) {
      edges.emplace_back(static_cast<Vertex>(c * n + u), static_cast<Vertex>(c * n + v));
    });
  return GraphBuilder::from_unique_edges(n * copies, edges);
}

Graph complete_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  return GraphBuilder::from_unique_edges(n, edges);
}

Graph cycle_graph(std::size_t n) {
  if (n < 3) throw std::invalid_argument("cycle_graph: n must be >= 3");
  std::vector<Edge> edges;
  for (Vertex v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  edges.emplace_back(0, static_cast<Vertex>(n - 1));
  return GraphBuilder::from_unique_edges(n, edges);
}

Graph path_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  return GraphBuilder::from_unique_edges(n, edges);
}

Graph star_graph(std::size_t leaves) {
  std::vector<Edge> edges;
  for (Vertex v = 1; v <= leaves; ++v) edges.emplace_back(0, v);
  return GraphBuilder::from_unique_edges(leaves + 1, edges);
}

Graph complete_bipartite(std::size_t a, std::size_t b) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < a; ++u)
    for (std::size_t j = 0; j < b; ++j) edges.emplace_back(u, static_cast<Vertex>(a + j));
  return GraphBuilder::from_unique_edges(a + b, edges);
}

Graph petersen_graph() {
  std::vector<Edge> edges;
  for (Vertex i = 0; i < 5; ++i) {
    edges.emplace_back(i, (i + 1) % 5);        // outer cycle
    edges.emplace_back(i, i + 5);              // spokes
    edges.emplace_back(i + 5, (i + 2) % 5 + 5);  // inner pentagram
  }
  return Graph::from_edges(10, edges);
}

Graph triangle_scrubbed_gnp(std::size_t n, double p, std::uint64_t seed) {
  Graph g = gnp(n, p, seed);
  std::unordered_set<std::uint64_t> dropped;
  auto key = [](Vertex a, Vertex b) { return (std::uint64_t{a} << 32) | b; };
  auto alive = [&](Vertex a, Vertex b) { return !dropped.count(key(a, b)); };
  for (Vertex a = 0; a < n; ++a) {
    auto na = g.neighbors(a);
    for (Vertex b : na) {
      if (b <= a) continue;
      auto nb = g.neighbors(b);
      std::size_t i = 0, j = 0;
      while (i < na.size() && j < nb.size() && alive(a, b)) {
        if (na[i] < nb[j]) ++i;
        else if (nb[j] < na[i]) ++j;
        else {
          Vertex c = na[i];
          if (c > b && alive(a, c) && alive(b, c)) dropped.insert(key(a, b));
          ++i;
          ++j;
        }
      }
    }
  }
  std::vector<Edge> edges;
  edges.reserve(g.num_edges() - dropped.size());
  g.for_each_edge([&](Vertex u, Vertex v) {
    if (alive(u, v)) edges.emplace_back(u, v);
  });
  return GraphBuilder::from_unique_edges(n, edges);
}

const char* const kGenSpecHelp =
    "family:key=value,... where family is one of\n"
    "  gnp:n=<int>,p=<real> | gnp:n=<int>,d=<real>          (p = d/n)\n"
    "  triangle_scrubbed_gnp:n=<int>,p=<real>|d=<real>\n"
    "  random_regular:n=<int>,d=<int>\n"
    "  bipartite:a=<int>,b=<int>,p=<real>|d=<real>           (p = d/max(a,b))\n"
    "  blowup_k3:s=<int>[,copies=<int>]\n"
    "  blowup_c5:s=<int>[,copies=<int>]\n"
    "every family accepts seed=<int>; e.g. gnp:n=100000,p=0.00064";

namespace {

const std::map<std::string, std::vector<std::string>, std::less<>> kFamilies = {
    {"gnp", {"n", "p", "d", "seed"}},
    {"triangle_scrubbed_gnp", {"n", "p", "d", "seed"}},
    {"random_regular", {"n", "d", "seed"}},
    {"bipartite", {"a", "b", "p", "d", "seed"}},
    {"blowup_k3", {"s", "copies", "scale", "seed"}},
    {"blowup_c5", {"s", "copies", "scale", "seed"}},
};

std::uint64_t as_uint(const GenSpec& spec, const std::string& key) {
  auto it = spec.params.find(key);
  if (it == spec.params.end()) throw std::invalid_argument(spec.family + ": missing '" + key + "'");
  std::uint64_t v = 0;
  const auto& s = it->second;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size())
    throw std::invalid_argument(spec.family + ": '" + key + "' must be a non-negative integer");
  return v;
}

double as_real(const GenSpec& spec, const std::string& key) {
  const auto& s = spec.params.at(key);
  std::size_t used = 0;
  double v = 0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != s.size()) throw std::invalid_argument(spec.family + ": '" + key + "' must be a number");
  return v;
}

double edge_probability(const GenSpec& spec, std::uint64_t n) {
  bool has_p = spec.params.count("p"), has_d = spec.params.count("d");
  if (has_p == has_d) throw std::invalid_argument(spec.family + ": give exactly one of p or d");
  if (has_p) return as_real(spec, "p");
  return n == 0 ? 0.0 : std::min(1.0, as_real(spec, "d") / static_cast<double>(n));
}

std::uint64_t copies_of(const GenSpec& spec) {
  if (spec.params.count("copies")) return as_uint(spec, "copies");
  if (spec.params.count("scale")) return as_uint(spec, "scale");
  return 1;
}

}  // namespace

std::string GenSpec::to_string() const {
  std::string out = family + ":";
  bool first = true;
  for (const auto& [k, v] : params) {
    if (k == "seed") continue;
    out += (first ? "" : ",") + k + "=" + v;
    first = false;
  }
  out += (first ? "" : ",") + std::string("seed=") + std::to_string(seed);
  return out;
}

GenSpec parse_gen_spec(std::string_view text, std::uint64_t default_seed) {
  GenSpec spec;
  auto colon = text.find(':');
  spec.family = std::string(text.substr(0, colon));
  auto fam = kFamilies.find(spec.family);
  if (fam == kFamilies.end()) throw std::invalid_argument("unknown generator family '" + spec.family + "'");
  std::string_view rest = colon == std::string_view::npos ? std::string_view{} : text.substr(colon + 1);
  while (!rest.empty()) {
    auto comma = rest.find(',');
    auto item = rest.substr(0, comma);
    rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
    auto eq = item.find('=');
    if (eq == std::string_view::npos || eq == 0 || eq + 1 == item.size())
      throw std::invalid_argument("malformed generator parameter '" + std::string(item) + "'");
    std::string key(item.substr(0, eq));
    if (std::find(fam->second.begin(), fam->second.end(), key) == fam->second.end())
      throw std::invalid_argument(spec.family + ": unknown parameter '" + key + "'");
    if (!spec.params.emplace(key, std::string(item.substr(eq + 1))).second)
      throw std::invalid_argument(spec.family + ": repeated parameter '" + key + "'");
  }
  spec.seed = spec.params.count("seed") ? as_uint(spec, "seed") : default_seed;
  spec.params.erase("seed");
  return spec;
}

Graph generate(const GenSpec& spec) {
  const auto& f = spec.family;
  if (f == "gnp" || f == "triangle_scrubbed_gnp") {
    auto n = as_uint(spec, "n");
    double p = edge_probability(spec, n);
    return f == "gnp" ? gnp(n, p, spec.seed) : triangle_scrubbed_gnp(n, p, spec.seed);
  }
  if (f == "random_regular") return random_regular(as_uint(spec, "n"), as_uint(spec, "d"), spec.seed);
  if (f == "bipartite") {
    auto a = as_uint(spec, "a"), b = as_uint(spec, "b");
    return random_bipartite(a, b, edge_probability(spec, std::max(a, b)), spec.seed);
  }
  if (f == "blowup_k3") return disjoint_union(blowup(complete_graph(3), as_uint(spec, "s")), copies_of(spec));
  if (f == "blowup_c5") return disjoint_union(blowup(cycle_graph(5), as_uint(spec, "s")), copies_of(spec));
  throw std::invalid_argument("unknown generator family '" + f + "'");
}

}  // namespace kttt
