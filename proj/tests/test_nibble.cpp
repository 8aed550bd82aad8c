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

#include <gtest/gtest.h>

#include <cmath>
#include <nlohmann/json.hpp>

#include "kttt/generators.hpp"
#include "kttt/nibble.hpp"
#include "oracles.hpp"

using namespace kttt;

TEST(StepCap, HandValue) {
  // 10 * (11/12) * ln 64 / (1.05 * 0.25) = 145.23...
  EXPECT_EQ(nibble_step_cap(0.25, 64.0), 146u);
  EXPECT_EQ(nibble_step_cap(0.5, 1.0), 1u);
}

TEST(Params, FromEpsAndValidation) {
  auto p = NibbleParams::from_eps(0.4, 2);
  EXPECT_DOUBLE_EQ(p.kappa, 0.04);
  EXPECT_DOUBLE_EQ(p.d_floor_exponent, 0.05);
  EXPECT_DOUBLE_EQ(p.r_cap_exponent, 0.02);
  EXPECT_EQ(p.t, 2u);
  EXPECT_THROW(NibbleParams::from_eps(1.0).validate(), std::invalid_argument);
  EXPECT_THROW(NibbleParams::from_eps(0.0).validate(), std::invalid_argument);
  auto big = NibbleParams::from_eps(0.2);
  big.mis_node_cap = 65;
  EXPECT_THROW(big.validate(), std::invalid_argument);
}

TEST(Expectations, HandExamples) {
  EXPECT_NEAR(expected_survivors(Graph(10), 0.1), 9.0, 1e-12);
  EXPECT_NEAR(expected_survivors(complete_graph(2), 0.5), 0.5, 1e-12);
  EXPECT_NEAR(expected_residual_edges(complete_graph(3), 0.5), 0.375, 1e-12);
  Graph pet = petersen_graph();
  double gamma = std::pow(0.8, 3);
  EXPECT_NEAR(expected_residual_edges(pet, 0.2), gamma * gamma * 15, 1e-12);
}

TEST(Expectations, MatchExhaustiveEnumeration) {
  for (std::size_t n = 1; n <= 4; ++n) {
    const std::uint32_t pairs = static_cast<std::uint32_t>(n * (n - 1) / 2);
    for (std::uint32_t mask = 0; mask < (1u << pairs); ++mask) {
      Graph g = oracle::graph_from_mask(n, mask);
      auto a = oracle::adjacency(g);
      for (double p : {0.05, 0.3, 0.5, 0.9}) {
        auto e = oracle::enumerate_step(a, p);
        EXPECT_NEAR(expected_survivors(g, p), e.survivors, 1e-9);
        EXPECT_NEAR(expected_residual_edges(g, p), e.residual_edges, 1e-9);
        const double gamma = std::pow(1.0 - p, static_cast<double>(g.max_degree()));
        for (double s : e.survival) EXPECT_NEAR(s, gamma * (1.0 - p), 1e-12);
      }
    }
  }
}

TEST(Expectations, P3HalfMatchesEnumeration) {
  Graph p3 = path_graph(3);
  auto e = oracle::enumerate_step(oracle::adjacency(p3), 0.5);
  EXPECT_NEAR(expected_survivors(p3, 0.5), e.survivors, 1e-12);
  EXPECT_NEAR(expected_residual_edges(p3, 0.5), e.residual_edges, 1e-12);
}

TEST(Expectations, MonteCarloWithinFourStandardErrors) {
  const std::size_t trials = 100000;
  for (const Graph& g : {path_graph(3), cycle_graph(5), complete_graph(4)}) {
    const double p = 0.3;
    double s1 = 0, s2 = 0, e1 = 0, e2 = 0;
    Rng base(2024);
    for (std::size_t i = 0; i < trials; ++i) {
      auto r = iset_step(g, p, base.derive(i));
      auto k = static_cast<double>(r.survivors.size());
      auto m = static_cast<double>(r.residual.graph.num_edges());
      s1 += k, s2 += k * k, e1 += m, e2 += m * m;
    }
    const double N = static_cast<double>(trials);
    auto check = [&](double sum, double sq, double expected) {
      double mean = sum / N;
      double var = (sq - N * mean * mean) / (N - 1);
      double se = std::sqrt(var / N);
      EXPECT_LE(std::abs(mean - expected), 4 * se + 1e-12) << "mean " << mean << " expected " << expected;
    };
    check(s1, s2, expected_survivors(g, p));
    check(e1, e2, expected_residual_edges(g, p));
  }
}

TEST(EqualizingCoin, Range) {
  EXPECT_DOUBLE_EQ(equalizing_probability(5, 5, 0.3), 1.0);
  EXPECT_NEAR(equalizing_probability(2, 5, 0.3), std::pow(0.7, 3), 1e-15);
  // Large degree gaps stay positive in log space.
  double q = equalizing_probability(0, 5000, 0.01);
  EXPECT_GT(q, 0.0);
  EXPECT_LT(q, 1e-20);
}

TEST(IsetStep, Invariants) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    Graph g = oracle::random_graph(40, 0.15, seed);
    double p = 0.05 + 0.01 * static_cast<double>(seed % 30);
    auto r = iset_step(g, p, Rng(seed), 40);
    // I inside A and independent.
    for (Vertex v : r.independent.members()) EXPECT_TRUE(r.activated.contains(v));
    EXPECT_TRUE(is_independent(g, r.independent));
    // K avoids N[A].
    for (Vertex v : r.survivors.members()) {
      EXPECT_FALSE(r.activated.contains(v));
      for (Vertex u : g.neighbors(v)) EXPECT_FALSE(r.activated.contains(u));
    }
    // Residual is exactly H[K].
    auto ref = induced(g, r.survivors);
    EXPECT_EQ(r.residual.graph, ref.graph);
    EXPECT_EQ(r.residual.to_parent, ref.to_parent);
    // Size guarantee, and exactness under the cap.
    auto act = induced(g, r.activated);
    EXPECT_GE(r.independent.size() + act.graph.num_edges(), r.activated.size());
    EXPECT_TRUE(r.stats.exact_mis);
    if (r.activated.size() <= 20) EXPECT_EQ(r.independent.size(), oracle::mis_size(act.graph));
    EXPECT_EQ(r.stats.activated, r.activated.size());
    EXPECT_EQ(r.stats.activated_edges, act.graph.num_edges());
  }
}

TEST(IsetStep, EdgelessGraph) {
  Graph g(30);
  auto r = iset_step(g, 0.2, Rng(3));
  EXPECT_DOUBLE_EQ(r.stats.gamma, 1.0);
  EXPECT_EQ(r.survivors.size() + r.activated.size(), 30u);
  EXPECT_EQ(r.independent, r.activated);
}

TEST(IsetStep, DeletionGreedyAboveCap) {
  Graph g = oracle::random_graph(200, 0.05, 1);
  auto r = iset_step(g, 0.5, Rng(1), 10);
  EXPECT_FALSE(r.stats.exact_mis);
  auto act = induced(g, r.activated);
  EXPECT_TRUE(is_independent(g, r.independent));
  EXPECT_GE(r.independent.size() + act.graph.num_edges(), r.activated.size());
}

TEST(IsetStep, RejectsBadInput) {
  EXPECT_THROW(iset_step(complete_graph(3), 0.0, Rng(1)), std::invalid_argument);
  EXPECT_THROW(iset_step(complete_graph(3), 1.0, Rng(1)), std::invalid_argument);
  EXPECT_THROW(iset_step(Graph(0), 0.5, Rng(1)), std::invalid_argument);
}

TEST(DeletionGreedy, Bound) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    Graph g = oracle::random_graph(50, 0.08, seed);
    auto s = deletion_greedy(g);
    EXPECT_TRUE(is_independent(g, s));
    EXPECT_GE(s.size() + g.num_edges(), 50u);
  }
}

TEST(Cleaning, Examples) {
  EXPECT_FALSE(cleaning_step(cycle_graph(7), 0.25));
  EXPECT_FALSE(cleaning_step(petersen_graph(), 0.9));
  auto star = cleaning_step(star_graph(9), 0.3);
  ASSERT_TRUE(star);
  EXPECT_EQ(star->removed, 0u);
  EXPECT_EQ(star->graph.graph.num_vertices(), 9u);
  EXPECT_EQ(star->graph.graph.num_edges(), 0u);
  EXPECT_FALSE(cleaning_step(star->graph.graph, 0.3));
}

TEST(Cleaning, LowestIdAmongTies) {
  // Two hubs of degree 4 sharing nothing else: 0 and 5.
  std::vector<Edge> e{{0, 1}, {0, 2}, {0, 3}, {0, 4}, {5, 6}, {5, 7}, {5, 8}, {5, 9}};
  auto r = cleaning_step(Graph::from_edges(10, e), 0.25);
  ASSERT_TRUE(r);
  EXPECT_EQ(r->removed, 0u);
}

TEST(ReferenceBounds, HandValues) {
  double d = std::exp(1.0) - 1.0;
  auto b = reference_bounds(1000, d, 0.0);
  EXPECT_NEAR(b.greedy, 1000.0 / std::exp(1.0), 1e-9);
  EXPECT_NEAR(b.shearer_target, 315.0, 0.1);
  // 0.75 * 2e5 * ln 64 / 64 = 9747.38...
  EXPECT_NEAR(reference_bounds(200000, 64, 0.25).shearer_target, 9747.38, 0.01);
  EXPECT_THROW(reference_bounds(10, 1.0, 0.1), std::invalid_argument);
}

TEST(RunNibble, EdgelessStopsAtOnce) {
  auto out = run_nibble(Graph(12), NibbleParams::from_eps(0.25), Rng(1));
  ASSERT_EQ(out.trace.records.size(), 1u);
  EXPECT_EQ(out.trace.stop_reason(), StopReason::T1);
  EXPECT_EQ(out.iset.size(), 12u);
  EXPECT_EQ(out.nibble_iset.size(), 0u);
}

TEST(RunNibble, CliqueCopiesNeverClean) {
  Graph g = disjoint_union(complete_graph(9), 40);  // K_{d+1} copies, d = 8
  auto out = run_nibble(g, NibbleParams::from_eps(0.5), Rng(3));
  EXPECT_EQ(out.trace.count(StepKind::clean), 0u);
  EXPECT_GT(out.trace.count(StepKind::nibble), 0u);
  EXPECT_TRUE(is_independent(g, out.iset));
  for (std::size_t c = 0; c < 40; ++c) {
    std::size_t in = 0;
    for (Vertex v = static_cast<Vertex>(9 * c); v < 9 * (c + 1); ++v) in += out.iset.contains(v);
    EXPECT_EQ(in, 1u);
  }
}

TEST(RunNibble, TraceInvariants) {
  for (std::uint64_t seed = 1; seed <= 6; ++seed) {
    Graph g = seed % 2 ? gnp(3000, 12.0 / 3000, seed) : random_regular(2000, 10, seed);
    auto params = NibbleParams::from_eps(0.3);
    auto out = run_nibble(g, params, Rng(seed));
    const auto& recs = out.trace.records;
    ASSERT_FALSE(recs.empty());
    EXPECT_EQ(recs.back().kind, StepKind::stop);
    for (std::size_t k = 0; k + 1 < recs.size(); ++k) {
      const auto &a = recs[k], &b = recs[k + 1];
      EXPECT_NE(a.kind, StepKind::stop);
      EXPECT_EQ(b.i, a.i + 1);
      EXPECT_LE(b.N, a.N);
      EXPECT_GE(b.R, a.R);
      EXPECT_GE(b.tau, a.tau);
      if (a.kind == StepKind::clean) {
        EXPECT_EQ(b.N, a.N - 1);
        EXPECT_GT(b.R, a.R);
        EXPECT_EQ(b.tau, a.tau);
      } else {
        EXPECT_EQ(b.R, a.R);
        EXPECT_EQ(b.tau, a.tau + 1);
        EXPECT_EQ(b.N, a.step.survivors);
      }
    }
    EXPECT_TRUE(is_independent(g, out.iset));
    EXPECT_TRUE(is_independent(g, out.nibble_iset));
    for (Vertex v : out.nibble_iset.members()) EXPECT_TRUE(out.iset.contains(v));
    // Nothing in the residual touches the nibble set.
    for (Vertex v : out.residual.to_parent) {
      EXPECT_FALSE(out.nibble_iset.contains(v));
      for (Vertex u : g.neighbors(v)) EXPECT_FALSE(out.nibble_iset.contains(u));
    }
    EXPECT_TRUE(check_cleaning_inequalities(out.trace).pass());
  }
}

TEST(RunNibble, StopRules) {
  // T3 with a cap of one nibble step on a regular graph.
  Graph g = random_regular(500, 6, 4);
  auto params = NibbleParams::from_eps(0.25);
  params.tau_cap = 1;
  auto out = run_nibble(g, params, Rng(2));
  EXPECT_EQ(out.trace.stop_reason(), StopReason::T3);
  EXPECT_EQ(out.trace.count(StepKind::nibble), 1u);
  // No finishing: the output is the nibble set alone.
  params.finish_with_greedy = false;
  auto raw = run_nibble(g, params, Rng(2));
  EXPECT_EQ(raw.iset, raw.nibble_iset);
  EXPECT_EQ(raw.nibble_iset, out.nibble_iset);
}

TEST(RunNibble, Deterministic) {
  Graph g = gnp(2000, 0.004, 8);
  auto a = run_nibble(g, NibbleParams::from_eps(0.25), Rng(77));
  auto b = run_nibble(g, NibbleParams::from_eps(0.25), Rng(77));
  EXPECT_EQ(a.iset, b.iset);
  ASSERT_EQ(a.trace.records.size(), b.trace.records.size());
  for (std::size_t i = 0; i < a.trace.records.size(); ++i)
    EXPECT_EQ(trace_record_json(a.trace.records[i]), trace_record_json(b.trace.records[i]));
}

TEST(CleaningCheck, VacuousAndGuarded) {
  NibbleTrace empty;
  empty.eps = 0.3;
  auto c = check_cleaning_inequalities(empty);
  EXPECT_TRUE(c.pass());
  EXPECT_EQ(c.checked, 0u);

  auto out = run_nibble(star_graph(9), NibbleParams::from_eps(0.3), Rng(1));
  ASSERT_GE(out.trace.records.size(), 2u);
  EXPECT_EQ(out.trace.records[0].kind, StepKind::clean);
  EXPECT_EQ(out.trace.records[0].removed, 0u);
  auto star = check_cleaning_inequalities(out.trace);
  EXPECT_EQ(star.guarded, 1u);
  EXPECT_EQ(star.checked, 0u);
  EXPECT_TRUE(star.pass());
}

TEST(CleaningCheck, DetectsViolation) {
  NibbleTrace t;
  t.eps = 0.5;
  TraceRecord a, b;
  a.kind = StepKind::clean, a.N = 10, a.edges = 10, a.i = 1;
  b.kind = StepKind::stop, b.N = 9, b.edges = 10, b.i = 2;  // N/D fell: 5 -> 4.05
  t.records = {a, b};
  auto c = check_cleaning_inequalities(t);
  EXPECT_EQ(c.lemma_violations, std::vector<std::uint64_t>{1});
  EXPECT_EQ(c.corollary_violations, std::vector<std::uint64_t>{1});
}

TEST(TraceJson, FieldsPresent) {
  auto out = run_nibble(random_regular(300, 6, 1), NibbleParams::from_eps(0.25), Rng(1));
  for (const auto& r : out.trace.records) {
    auto j = nlohmann::json::parse(trace_record_json(r));
    for (const char* key : {"i", "kind", "N", "D", "R", "tau", "detail"}) EXPECT_TRUE(j.contains(key)) << key;
    EXPECT_EQ(j["kind"], to_string(r.kind));
  }
  EXPECT_EQ(nlohmann::json::parse(trace_record_json(out.trace.records.back()))["detail"]["reason"],
            to_string(out.trace.stop_reason()));
}
