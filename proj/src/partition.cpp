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

#include "kttt/partition.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

namespace kttt {

void PartitionParams::validate() const {
  if (ell == 0) throw std::invalid_argument("partition params: ell must be >= 1");
  if (part_degree_bound == 0) throw std::invalid_argument("partition params: part_degree_bound must be >= 1");
  if (ell > std::numeric_limits<std::uint32_t>::max()) throw std::invalid_argument("partition params: ell too large");
}

std::uint64_t PartitionParams::class_bound() const { return ell * (kappa_bad + mu + 1); }

std::uint64_t ceil_rational_power(std::uint64_t x, std::uint64_t num, std::uint64_t den) {
  if (den == 0) throw std::invalid_argument("ceil_rational_power: zero denominator");
  if (x <= 1 || num == 0) return num == 0 ? 1 : x;
  // Smallest y with y^den >= x^num.
  const BigInt target = boost::multiprecision::pow(BigInt(x), static_cast<unsigned>(num));
  auto y = static_cast<std::uint64_t>(
      std::ceil(std::pow(static_cast<long double>(x), static_cast<long double>(num) / static_cast<long double>(den))));
  auto at_least = [&](std::uint64_t c) {
    return boost::multiprecision::pow(BigInt(c), static_cast<unsigned>(den)) >= target;
  };
  while (y > 1 && at_least(y - 1)) --y;
  while (!at_least(y)) ++y;
  return y;
}

PartitionParams default_params(std::uint64_t delta, std::uint64_t t) {
  if (delta == 0 || t == 0) throw std::invalid_argument("default_params: delta and t must be >= 1");
  const std::uint64_t t2 = t * t;
  PartitionParams p;
  p.ell = std::max<std::uint64_t>(1, ceil_rational_power(delta, 10 * t2 - 1, 10 * t2));
  p.kappa_bad = std::max<std::uint64_t>(1, 35 * t2);
  p.mu = std::max<std::uint64_t>(1, 100 * t2 * t2);
  p.bad_threshold = std::max<std::uint64_t>(1, ceil_rational_power(delta, 2 * t2 - 1, 2 * t2));
  p.part_degree_bound = std::max<std::uint64_t>(1, 2 * ceil_rational_power(delta, 1, 10 * t2));
  return p;
}

const char* to_string(EventKind k) {
  switch (k) {
    case EventKind::A: return "A";
    case EventKind::B: return "B";
    case EventKind::C: return "C";
  }
  return "?";
}

LeftStructure::LeftStructure(const Graph& g, const VertexOrdering& o, std::uint64_t bad_threshold)
    : pos_(o.positions()), left_(g.num_vertices()), bad_(g.num_vertices()) {
  const std::size_t n = g.num_vertices();
  if (o.order.size() != n) throw InvalidOrdering("ordering length differs from vertex count");
  std::vector<std::uint8_t> mark(n, 0);
  for (Vertex v = 0; v < n; ++v) {
    for (Vertex u : g.neighbors(v))
      if (pos_[u] < pos_[v]) left_[v].push_back(u);
    for (Vertex u : left_[v]) mark[u] = 1;
    for (Vertex u : left_[v]) {
      std::uint64_t inside = 0;
      for (Vertex w : g.neighbors(u)) inside += mark[w];
      if (inside >= bad_threshold) bad_[v].push_back(u);
    }
    for (Vertex u : left_[v]) mark[u] = 0;
  }
}

bool LeftStructure::is_bad(Vertex v, Vertex u) const {
  return std::binary_search(bad_[v].begin(), bad_[v].end(), u);
}

VertexSet classify_left_bad(const Graph& g, const VertexOrdering& o, Vertex v, std::uint64_t threshold) {
  LeftStructure ls(g, o, threshold);
  return VertexSet::of(g.num_vertices(), ls.bad(v));
}

namespace {

/// Evaluates A_v, B_v, C_v against a colouring. Holds scratch marks, so one per thread.
class EventEvaluator {
 public:
  EventEvaluator(const Graph& g, const LeftStructure& ls, const PartitionParams& params)
      : g_(g), ls_(ls), params_(params), mark_(g.num_vertices(), 0) {}

  /// With out == nullptr only the verdict is computed.
  bool violated(Vertex v, EventKind kind, const ClassAssignment& c, BadEvent* out) {
    switch (kind) {
      case EventKind::A: return check_a(v, c, out);
      case EventKind::B: return check_b(v, c, out);
      case EventKind::C: return check_c(v, c, out);
    }
    return false;
  }

  /// Good same-class left-neighbours of v.
  std::vector<Vertex> good_same_class(Vertex v, const ClassAssignment& c) const {
    std::vector<Vertex> out;
    for (Vertex u : ls_.left(v))
      if (c[u] == c[v] && !ls_.is_bad(v, u)) out.push_back(u);
    return out;
  }

 private:
  bool check_a(Vertex v, const ClassAssignment& c, BadEvent* out) {
    std::uint64_t same = 0;
    for (Vertex u : g_.neighbors(v)) same += c[u] == c[v];
    if (same <= params_.part_degree_bound) return false;
    if (out) {
      *out = {EventKind::A, v, {}, {}};
      for (Vertex u : g_.neighbors(v))
        if (c[u] == c[v]) out->witness.push_back(u);
    }
    return true;
  }

  bool check_b(Vertex v, const ClassAssignment& c, BadEvent* out) {
    std::uint64_t same = 0;
    for (Vertex u : ls_.bad(v)) same += c[u] == c[v];
    if (same <= params_.kappa_bad) return false;
    if (out) {
      *out = {EventKind::B, v, {}, {}};
      for (Vertex u : ls_.bad(v))
        if (c[u] == c[v]) out->witness.push_back(u);
    }
    return true;
  }

  bool check_c(Vertex v, const ClassAssignment& c, BadEvent* out) {
    auto good = good_same_class(v, c);
    for (Vertex u : good) mark_[u] = 1;
    std::uint64_t edges = 0;
    std::vector<Edge> found;
    for (Vertex u : good) {
      for (Vertex w : g_.neighbors(u)) {
        if (w > u && mark_[w]) {
          ++edges;
          if (out) found.emplace_back(u, w);
        }
      }
      if (!out && edges >= params_.mu) break;
    }
    for (Vertex u : good) mark_[u] = 0;
    if (edges < params_.mu) return false;
    if (out) *out = {EventKind::C, v, std::move(good), std::move(found)};
    return true;
  }

  const Graph& g_;
  const LeftStructure& ls_;
  const PartitionParams& params_;
  std::vector<std::uint8_t> mark_;
};

constexpr EventKind kKinds[] = {EventKind::A, EventKind::B, EventKind::C};

void check_coloring(const Graph& g, const ClassAssignment& c, std::uint64_t classes) {
  if (c.size() != g.num_vertices()) throw std::invalid_argument("colouring does not cover every vertex");
  for (auto x : c)
    if (x >= classes) throw std::invalid_argument("colouring uses a class outside [ell]");
}

}  // namespace

std::vector<BadEvent> find_bad_events(const Graph& g, const VertexOrdering& o, const ClassAssignment& coloring,
                                      const PartitionParams& params) {
  params.validate();
  check_coloring(g, coloring, params.ell);
  LeftStructure ls(g, o, params.bad_threshold);
  EventEvaluator eval(g, ls, params);
  std::vector<BadEvent> events;
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    for (EventKind k : kKinds) {
      BadEvent e{};
      if (eval.violated(v, k, coloring, &e)) events.push_back(std::move(e));
    }
  }
  return events;
}

ResampleResult moser_tardos_partition(const Graph& g, const VertexOrdering& o, const PartitionParams& params,
                                      Rng rng) {
  params.validate();
  const std::size_t n = g.num_vertices();
  LeftStructure ls(g, o, params.bad_threshold);
  EventEvaluator eval(g, ls, params);

  ResampleResult r;
  r.coloring.resize(n);
  for (Vertex v = 0; v < n; ++v) r.coloring[v] = static_cast<std::uint32_t>(rng.below(params.ell));

  // Event id 3v + kind; std::set keeps the lowest violated event at begin().
  std::set<std::uint64_t> violated;
  auto recheck = [&](Vertex v) {
    for (EventKind k : kKinds) {
      std::uint64_t id = 3 * std::uint64_t{v} + static_cast<std::uint64_t>(k);
      if (eval.violated(v, k, r.coloring, nullptr)) violated.insert(id);
      else violated.erase(id);
    }
  };
  for (Vertex v = 0; v < n; ++v) recheck(v);

  std::vector<std::uint32_t> stamp(n, 0);
  std::uint32_t epoch = 0;
  std::vector<Vertex> touched;
  while (!violated.empty()) {
    if (r.resamples >= params.max_resamples)
      throw PartitionFailure("resample budget of " + std::to_string(params.max_resamples) + " exhausted with " +
                             std::to_string(violated.size()) + " events still violated");
    auto v = static_cast<Vertex>(*violated.begin() / 3);
    r.coloring[v] = static_cast<std::uint32_t>(rng.below(params.ell));
    for (Vertex u : g.neighbors(v)) r.coloring[u] = static_cast<std::uint32_t>(rng.below(params.ell));
    ++r.resamples;

    // Events within distance two of v read at least one resampled colour.
    ++epoch;
    touched.clear();
    auto touch = [&](Vertex w) {
      if (stamp[w] != epoch) {
        stamp[w] = epoch;
        touched.push_back(w);
      }
    };
    touch(v);
    for (Vertex u : g.neighbors(v)) {
      touch(u);
      for (Vertex w : g.neighbors(u)) touch(w);
    }
    for (Vertex w : touched) recheck(w);
  }
  return r;
}

Partition cleanup_to_triangle_free(const Graph& g, const VertexOrdering& o, const ClassAssignment& coloring,
                                   const PartitionParams& params) {
  params.validate();
  check_coloring(g, coloring, params.ell);
  const std::size_t n = g.num_vertices();
  LeftStructure ls(g, o, params.bad_threshold);
  EventEvaluator eval(g, ls, params);
  for (Vertex v = 0; v < n; ++v)
    for (EventKind k : kKinds)
      if (eval.violated(v, k, coloring, nullptr))
        throw std::invalid_argument(std::string("cleanup requires a colouring without bad events; ") + to_string(k) +
                                    " fires at vertex " + std::to_string(v));

  Partition p;
  // S_{v,i}: bad same-class left-neighbours, plus one endpoint of every good
  // same-class edge not already covered. Each S member precedes v.
  std::vector<std::vector<Vertex>> removed(n);
  std::vector<std::uint8_t> in_s(n, 0), in_good(n, 0);
  std::vector<std::uint32_t> local_deg(n, 0);
  for (Vertex v = 0; v < n; ++v) {
    auto& s = removed[v];
    for (Vertex u : ls.bad(v))
      if (coloring[u] == coloring[v]) s.push_back(u);
    auto good = eval.good_same_class(v, coloring);
    for (Vertex u : good) in_good[u] = 1;
    std::vector<Edge> inner;
    for (Vertex u : good)
      for (Vertex w : g.neighbors(u))
        if (w > u && in_good[w]) {
          inner.emplace_back(u, w);
          ++local_deg[u];
          ++local_deg[w];
        }
    for (auto [a, b] : inner) {
      if (in_s[a] || in_s[b]) continue;
      Vertex pick = local_deg[a] >= local_deg[b] ? a : b;
      in_s[pick] = 1;
      s.push_back(pick);
    }
    for (Vertex u : good) {
      in_good[u] = 0;
      in_s[u] = 0;
      local_deg[u] = 0;
    }
    std::sort(s.begin(), s.end());
    if (s.size() > params.kappa_bad + params.mu)
      throw CertificationFailure("|S_v| = " + std::to_string(s.size()) + " exceeds kappa_bad + mu at vertex " +
                                 std::to_string(v));
    p.max_removed = std::max(p.max_removed, s.size());
  }

  // Greedy colouring of each conflict graph along the ordering; the earlier
  // conflict-neighbours of v are exactly S_v.
  std::vector<std::uint32_t> sub(n, 0);
  std::vector<std::uint8_t> used;
  for (Vertex v : o.order) {
    used.assign(removed[v].size() + 1, 0);
    for (Vertex u : removed[v])
      if (sub[u] < used.size()) used[sub[u]] = 1;
    std::uint32_t c = 0;
    while (used[c]) ++c;
    sub[v] = c;
    p.max_subclasses = std::max(p.max_subclasses, c + 1);
  }

  std::map<std::pair<std::uint32_t, std::uint32_t>, std::uint32_t> dense;
  for (Vertex v = 0; v < n; ++v) dense.emplace(std::pair{coloring[v], sub[v]}, 0);
  std::uint32_t next = 0;
  for (auto& [key, id] : dense) id = next++;
  p.k = next;
  p.class_of.resize(n);
  for (Vertex v = 0; v < n; ++v) p.class_of[v] = dense.at({coloring[v], sub[v]});

  auto report = verify_partition(g, p.class_of, params.part_degree_bound);
  p.certificates = report.certificates;
  if (report.triangle_witness) {
    auto [cls, tri] = *report.triangle_witness;
    throw CertificationFailure("class " + std::to_string(cls) + " contains triangle " + std::to_string(tri[0]) + " " +
                               std::to_string(tri[1]) + " " + std::to_string(tri[2]));
  }
  if (!report.over_degree.empty())
    throw CertificationFailure("class " + std::to_string(report.over_degree.front()) +
                               " exceeds the part degree bound");
  if (p.k > params.class_bound()) throw CertificationFailure("class count exceeds ell * (kappa_bad + mu + 1)");
  return p;
}

PartitionReport verify_partition(const Graph& g, const std::vector<std::uint32_t>& class_of,
                                 std::uint64_t degree_bound) {
  const std::size_t n = g.num_vertices();
  if (class_of.size() != n)
    throw InvalidPartition("partition assigns " + std::to_string(class_of.size()) + " of " + std::to_string(n) +
                           " vertices");
  PartitionReport r;
  std::uint32_t k = 0;
  for (auto c : class_of) k = std::max(k, c + 1);
  r.k = k;
  auto parts = split_by_class(g, class_of, k);
  r.certificates.resize(k);
  for (std::uint32_t c = 0; c < k; ++c) {
    const auto& sub = parts[c];
    auto& cert = r.certificates[c];
    cert.size = sub.to_parent.size();
    cert.triangles = triangle_count(sub.graph);
    cert.max_degree = sub.graph.max_degree();
    if (cert.triangles > 0 && !r.triangle_witness) {
      auto t = *find_triangle(sub.graph);
      r.triangle_witness = {c, {sub.to_parent[t[0]], sub.to_parent[t[1]], sub.to_parent[t[2]]}};
    }
    if (cert.max_degree > degree_bound) r.over_degree.push_back(c);
  }
  r.pass = !r.triangle_witness && r.over_degree.empty();
  return r;
}

PartitionReport verify_partition(const Graph& g, const Partition& p, std::uint64_t degree_bound) {
  return verify_partition(g, p.class_of, degree_bound);
}

PartitionRun partition_triangle_free(const Graph& g, const PartitionParams& params, Rng rng) {
  PartitionRun run;
  run.params = params;
  run.ordering = left_sparse_ordering(g);
  run.resampled = moser_tardos_partition(g, run.ordering, params, rng.derive("resample"));
  run.partition = cleanup_to_triangle_free(g, run.ordering, run.resampled.coloring, params);
  return run;
}

}  // namespace kttt
