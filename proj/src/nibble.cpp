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

#include "kttt/nibble.hpp"

#include <cassert>
#include <cmath>
#include <set>

#include <nlohmann/json.hpp>

namespace kttt {

std::uint64_t nibble_step_cap(double eps, double d) {
  if (d <= 1.0) return 1;
  double raw = 10.0 * (1.0 - eps / 3.0) * std::log(d) / ((1.0 + eps / 5.0) * eps);
  return std::max<std::uint64_t>(1, static_cast<std::uint64_t>(std::ceil(raw)));
}

NibbleParams NibbleParams::from_eps(double eps, std::uint64_t t) {
  NibbleParams p;
  p.eps = eps;
  p.kappa = eps / 10.0;
  p.t = t;
  p.d_floor_exponent = eps / 8.0;
  p.r_cap_exponent = eps / 20.0;
  return p;
}

void NibbleParams::validate() const {
  if (!(eps > 0.0 && eps < 1.0)) throw std::invalid_argument("nibble: eps must lie in (0, 1)");
  if (!(kappa > 0.0 && kappa < 1.0 / 3.0)) throw std::invalid_argument("nibble: kappa must lie in (0, 1/3)");
  if (t == 0) throw std::invalid_argument("nibble: t must be >= 1");
  if (mis_node_cap > kMaxMisNodeCap) throw std::invalid_argument("nibble: mis_node_cap above 64 is not supported");
}

double equalizing_probability(std::size_t degree, std::size_t max_degree, double p) {
  assert(degree <= max_degree);
  double q = std::exp(static_cast<double>(max_degree - degree) * std::log1p(-p));
  assert(q >= 0.0 && q <= 1.0);
  return q;
}

VertexSet deletion_greedy(const Graph& h) {
  VertexSet keep = VertexSet::all(h.num_vertices());
  h.for_each_edge([&](Vertex u, Vertex v) {
    if (!keep.contains(u) || !keep.contains(v)) return;
    keep.erase(h.degree(u) > h.degree(v) ? u : v);
  });
  return keep;
}

IsetStepResult iset_step(const Graph& h, double p, Rng rng, std::size_t mis_node_cap) {
  if (!(p > 0.0 && p < 1.0)) throw std::invalid_argument("iset_step: p must lie in (0, 1)");
  const std::size_t n = h.num_vertices();
  if (n == 0) throw std::invalid_argument("iset_step: empty graph");

  IsetStepResult r;
  auto& st = r.stats;
  st.vertices = n;
  st.max_degree = h.max_degree();
  st.p = p;
  st.gamma = std::exp(static_cast<double>(st.max_degree) * std::log1p(-p));

  Rng activation = rng.derive("activate");
  Rng coins = rng.derive("equalize");
  r.activated = VertexSet(n);
  for (Vertex v = 0; v < n; ++v)
    if (activation.bernoulli(p)) r.activated.insert(v);

  r.survivors = VertexSet(n);
  for (Vertex v = 0; v < n; ++v) {
    bool eq = coins.bernoulli(equalizing_probability(h.degree(v), st.max_degree, p));
    if (!eq || r.activated.contains(v)) continue;
    bool touched = false;
    for (Vertex u : h.neighbors(v))
      if (r.activated.contains(u)) {
        touched = true;
        break;
      }
    if (!touched) r.survivors.insert(v);
  }

  auto act = induced(h, r.activated);
  st.activated = r.activated.size();
  st.activated_edges = act.graph.num_edges();
  VertexSet local;
  if (st.activated <= std::min(mis_node_cap, kMaxMisNodeCap)) {
    local = exact_mis(act.graph, mis_node_cap);
    st.exact_mis = true;
  } else {
    local = deletion_greedy(act.graph);
  }
  r.independent = VertexSet(n);
  for (Vertex v : local.members()) r.independent.insert(act.to_parent[v]);
  st.independent = r.independent.size();

  r.residual = induced(h, r.survivors);
  st.survivors = r.survivors.size();
  st.residual_edges = r.residual.graph.num_edges();
  return r;
}

double expected_survivors(const Graph& h, double p) {
  if (!(p > 0.0 && p < 1.0)) throw std::invalid_argument("expected_survivors: p must lie in (0, 1)");
  double log_q = std::log1p(-p);
  double log_gamma = static_cast<double>(h.max_degree()) * log_q;
  return std::exp(log_gamma + log_q) * static_cast<double>(h.num_vertices());
}

double expected_residual_edges(const Graph& h, double p) {
  if (!(p > 0.0 && p < 1.0)) throw std::invalid_argument("expected_residual_edges: p must lie in (0, 1)");
  double log_q = std::log1p(-p);
  double log_gamma = static_cast<double>(h.max_degree()) * log_q;
  double total = 0.0;
  h.for_each_edge([&](Vertex u, Vertex v) {
    total += std::exp(2.0 * log_gamma - static_cast<double>(common_neighbor_count(h, u, v)) * log_q);
  });
  return total;
}

namespace {

bool exceeds_cleaning_threshold(std::uint64_t degree, std::uint64_t n, std::uint64_t edges, double eps) {
  // degree > (1 + eps/10) * 2e/n
  return static_cast<long double>(degree) * n > (1.0L + eps / 10.0L) * 2.0L * edges;
}

}  // namespace

std::optional<CleaningResult> cleaning_step(const Graph& h, double eps) {
  const std::size_t n = h.num_vertices();
  if (n == 0) return std::nullopt;
  Vertex best = 0;
  for (Vertex v = 1; v < n; ++v)
    if (h.degree(v) > h.degree(best)) best = v;
  if (!exceeds_cleaning_threshold(h.degree(best), n, h.num_edges(), eps)) return std::nullopt;
  VertexSet keep = VertexSet::all(n);
  keep.erase(best);
  return CleaningResult{induced(h, keep), best};
}

const char* to_string(StepKind k) {
  switch (k) {
    case StepKind::clean: return "clean";
    case StepKind::nibble: return "nibble";
    case StepKind::stop: return "stop";
  }
  return "?";
}

const char* to_string(StopReason r) {
  switch (r) {
    case StopReason::none: return "none";
    case StopReason::T1: return "T1";
    case StopReason::T2: return "T2";
    case StopReason::T3: return "T3";
  }
  return "?";
}

StopReason NibbleTrace::stop_reason() const {
  return records.empty() ? StopReason::none : records.back().reason;
}

std::size_t NibbleTrace::count(StepKind k) const {
  std::size_t c = 0;
  for (const auto& r : records) c += r.kind == k;
  return c;
}

std::string trace_record_json(const TraceRecord& r) {
  nlohmann::ordered_json j;
  j["i"] = r.i;
  j["kind"] = to_string(r.kind);
  j["N"] = r.N;
  j["D"] = r.D;
  j["R"] = r.R;
  j["tau"] = r.tau;
  nlohmann::ordered_json detail;
  switch (r.kind) {
    case StepKind::clean:
      detail["removed"] = r.removed;
      detail["degree"] = r.removed_degree;
      detail["edges"] = r.edges;
      break;
    case StepKind::nibble:
      detail["iset"] = r.step.independent;
      detail["activated"] = r.step.activated;
      detail["activated_edges"] = r.step.activated_edges;
      detail["survivors"] = r.step.survivors;
      detail["residual_edges"] = r.step.residual_edges;
      detail["max_degree"] = r.step.max_degree;
      detail["p"] = r.step.p;
      detail["gamma"] = r.step.gamma;
      detail["beta"] = r.beta;
      detail["exact_mis"] = r.step.exact_mis;
      detail["R1"] = r.r1;
      detail["R2"] = r.r2;
      detail["R3"] = r.r3;
      detail["edges"] = r.edges;
      break;
    case StepKind::stop:
      detail["reason"] = to_string(r.reason);
      detail["edges"] = r.edges;
      break;
  }
  j["detail"] = std::move(detail);
  return j.dump();
}

ReferenceBounds reference_bounds(std::size_t n, double d, double eps) {
  if (!(d > 1.0)) throw std::invalid_argument("reference_bounds: d must exceed 1");
  auto nn = static_cast<double>(n);
  return {nn / (d + 1.0), (1.0 - eps) * nn * std::log(d) / d};
}

namespace {

/// The current H_i: an immutable graph plus a removal overlay for cleaning steps,
/// so a cleaning step costs O(deg log n) instead of a rebuild.
class Residual {
 public:
  Residual(Graph g, std::vector<Vertex> to_orig) { reset(std::move(g), std::move(to_orig)); }

  void reset(Graph g, std::vector<Vertex> to_orig) {
    g_ = std::move(g);
    to_orig_ = std::move(to_orig);
    const std::size_t n = g_.num_vertices();
    alive_ = VertexSet::all(n);
    deg_.resize(n);
    by_degree_.clear();
    for (Vertex v = 0; v < n; ++v) {
      deg_[v] = g_.degree(v);
      by_degree_.emplace(-static_cast<std::int64_t>(deg_[v]), v);
    }
    edges_ = g_.num_edges();
    dirty_ = false;
  }

  std::uint64_t size() const { return alive_.size(); }
  std::uint64_t edges() const { return edges_; }
  double average_degree() const { return size() == 0 ? 0.0 : 2.0 * static_cast<double>(edges_) / static_cast<double>(size()); }

  /// Max residual degree, lowest id on ties.
  std::pair<Vertex, std::uint64_t> top() const {
    auto [neg, v] = *by_degree_.begin();
    return {v, static_cast<std::uint64_t>(-neg)};
  }

  void remove(Vertex v) {
    by_degree_.erase({-static_cast<std::int64_t>(deg_[v]), v});
    alive_.erase(v);
    edges_ -= deg_[v];
    for (Vertex u : g_.neighbors(v)) {
      if (!alive_.contains(u)) continue;
      by_degree_.erase({-static_cast<std::int64_t>(deg_[u]), u});
      --deg_[u];
      by_degree_.emplace(-static_cast<std::int64_t>(deg_[u]), u);
    }
    dirty_ = true;
  }

  Vertex original(Vertex v) const { return to_orig_[v]; }

  /// H_i as a standalone graph, ids mapped to the input graph.
  RelabeledSubgraph materialize() const {
    if (!dirty_) return {g_, to_orig_};
    auto sub = induced(g_, alive_);
    for (auto& v : sub.to_parent) v = to_orig_[v];
    return sub;
  }

 private:
  Graph g_;
  std::vector<Vertex> to_orig_;
  VertexSet alive_;
  std::vector<std::uint64_t> deg_;
  std::set<std::pair<std::int64_t, Vertex>> by_degree_;
  std::uint64_t edges_ = 0;
  bool dirty_ = false;
};

}  // namespace

NibbleOutcome run_nibble(const Graph& g, const NibbleParams& params, Rng rng) {
  params.validate();
  const std::size_t n = g.num_vertices();
  const double d = n == 0 ? 0.0 : 2.0 * static_cast<double>(g.num_edges()) / static_cast<double>(n);

  NibbleOutcome out;
  out.trace.eps = params.eps;
  out.trace.d = d;
  out.trace.tau_cap = params.tau_cap ? params.tau_cap : nibble_step_cap(params.eps, d);
  out.nibble_iset = VertexSet(n);
  if (d > 1.0) out.bounds = reference_bounds(n, d, params.eps);
  else out.bounds = {static_cast<double>(n) / (d + 1.0), 0.0};

  std::vector<Vertex> identity(n);
  for (Vertex v = 0; v < n; ++v) identity[v] = v;
  Residual h(g, identity);

  const double d_floor = std::pow(d, params.d_floor_exponent);
  const double r_cap = std::pow(d, params.r_cap_exponent);
  double ratio = 1.0;
  std::uint64_t tau = 0;

  for (std::uint64_t i = 1;; ++i) {
    TraceRecord rec;
    rec.i = i;
    rec.N = h.size();
    rec.edges = h.edges();
    rec.D = h.average_degree();
    rec.R = ratio;
    rec.tau = tau;

    StopReason stop = StopReason::none;
    if (d < 1.0 || rec.D < d_floor) stop = StopReason::T1;
    else if (ratio > r_cap) stop = StopReason::T2;
    else if (tau == out.trace.tau_cap) stop = StopReason::T3;
    if (stop != StopReason::none) {
      rec.kind = StepKind::stop;
      rec.reason = stop;
      out.trace.records.push_back(rec);
      break;
    }

    auto [top, top_degree] = h.top();
    if (exceeds_cleaning_threshold(top_degree, rec.N, rec.edges, params.eps)) {
      rec.kind = StepKind::clean;
      rec.removed = h.original(top);
      rec.removed_degree = top_degree;
      h.remove(top);
      ratio *= static_cast<double>(rec.N) / static_cast<double>(rec.N - 1);
      out.trace.records.push_back(rec);
      continue;
    }

    rec.kind = StepKind::nibble;
    auto current = h.materialize();
    const double p = params.kappa / rec.D;
    auto step = iset_step(current.graph, p, rng.derive(tau), params.mis_node_cap);
    for (Vertex v : step.independent.members()) out.nibble_iset.insert(current.to_parent[v]);

    // Survivors avoid N[A] ⊇ N[I_i], so nothing left in the residual touches I.
    assert(is_independent(current.graph, step.independent));
    rec.step = step.stats;
    rec.beta = std::pow(rec.D, -1.0 / (20.0 * static_cast<double>(params.t * params.t)));
    const auto Nd = static_cast<double>(rec.N);
    const double target = step.stats.gamma * (1.0 - p) * Nd;
    rec.r1 = static_cast<double>(step.stats.independent) >= (1.0 - 2.0 * params.kappa) * Nd * p;
    rec.r2 = std::abs(static_cast<double>(step.stats.survivors) - target) <= rec.beta * target;
    const double next_d = step.stats.survivors == 0 ? 0.0
                                                    : 2.0 * static_cast<double>(step.stats.residual_edges) /
                                                          static_cast<double>(step.stats.survivors);
    rec.r3 = next_d <= (1.0 + 4.0 * rec.beta) * step.stats.gamma * rec.D;
    out.trace.records.push_back(rec);

    std::vector<Vertex> to_orig(step.residual.to_parent.size());
    for (std::size_t j = 0; j < to_orig.size(); ++j) to_orig[j] = current.to_parent[step.residual.to_parent[j]];
    h.reset(std::move(step.residual.graph), std::move(to_orig));
    ++tau;
  }

  out.residual = h.materialize();
  out.iset = out.nibble_iset;
  if (params.finish_with_greedy) {
    // The residual lies inside G - N[I], so the union stays independent.
    for (Vertex v : greedy_independent_set(out.residual.graph).members()) out.iset.insert(out.residual.to_parent[v]);
  }
  if (auto bad = independence_witness(g, out.iset))
    throw std::logic_error("run_nibble produced a dependent set: edge " + std::to_string(bad->first) + " " +
                           std::to_string(bad->second));
  return out;
}

CleaningCheck check_cleaning_inequalities(const NibbleTrace& trace) {
  CleaningCheck c;
  const long double eps = trace.eps;
  for (std::size_t k = 0; k + 1 < trace.records.size(); ++k) {
    const auto& cur = trace.records[k];
    if (cur.kind != StepKind::clean) continue;
    const auto& next = trace.records[k + 1];
    if (cur.N < 3 || next.edges == 0 || cur.edges == 0) {
      ++c.guarded;
      continue;
    }
    ++c.checked;
    const long double N = cur.N, Np = next.N;
    const long double ratio = (Np * Np / (2.0L * next.edges)) / (N * N / (2.0L * cur.edges));
    if (!(ratio >= 1.0L + eps / (5.0L * N))) c.lemma_violations.push_back(cur.i);
    if (!(ratio >= std::pow(N / Np, eps / 20.0L))) c.corollary_violations.push_back(cur.i);
  }
  return c;
}

}  // namespace kttt
