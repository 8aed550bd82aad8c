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

#include <numeric>

#include "kttt/generators.hpp"
#include "kttt/turan_order.hpp"
#include "oracles.hpp"

using namespace kttt;

TEST(Codegree, Examples) {
  auto k4 = codegree_profile(complete_graph(4));
  ASSERT_EQ(k4.codegree.size(), 6u);
  for (auto q : k4.codegree) EXPECT_EQ(q, 2u);
  EXPECT_EQ(k4.sum, 12u);
  EXPECT_EQ(k4.max, 2u);
  auto tf = codegree_profile(petersen_graph());
  for (auto q : tf.codegree) EXPECT_EQ(q, 0u);
  EXPECT_EQ(tf.sum, 0u);
}

TEST(Codegree, MatchesScanOracle) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    Graph g = oracle::random_graph(10 + seed, 0.3, seed);
    auto a = oracle::adjacency(g);
    auto prof = codegree_profile(g);
    ASSERT_EQ(prof.edges, g.edges());
    std::uint64_t sum = 0;
    std::vector<std::uint64_t> hist(prof.histogram.size(), 0);
    for (std::size_t i = 0; i < prof.edges.size(); ++i) {
      auto [u, v] = prof.edges[i];
      EXPECT_EQ(prof.codegree[i], oracle::common(a, u, v));
      sum += prof.codegree[i];
      ++hist.at(prof.codegree[i]);
    }
    EXPECT_EQ(prof.sum, sum);
    EXPECT_EQ(prof.sum, 3 * oracle::triangles(a));
    EXPECT_EQ(prof.histogram, hist);
  }
}

TEST(StarExtension, Examples) {
  EXPECT_EQ(star_extension_floor(codegree_profile(complete_graph(4)), 2), 6);
  EXPECT_EQ(star_extension_floor(codegree_profile(petersen_graph()), 3), 0);
  EXPECT_EQ(star_extension_floor(codegree_profile(complete_graph(5)), 3), 10);
}

TEST(StarExtension, ExactForLargeValues) {
  // K_{2, 200} plus the edge between the two hubs: that edge has codegree 200.
  std::vector<Edge> e{{0, 1}};
  for (Vertex v = 2; v < 202; ++v) {
    e.emplace_back(0, v);
    e.emplace_back(1, v);
  }
  auto prof = codegree_profile(Graph::from_edges(202, e));
  // binomial(200, 100), computed by the multiplicative formula in big integers.
  BigInt expected = 1;
  for (int i = 1; i <= 100; ++i) expected = expected * (100 + i) / i;
  // Every hub-to-leaf edge has codegree 1 and contributes 0 at t = 100.
  EXPECT_EQ(star_extension_floor(prof, 100), expected);
}

TEST(LeftSparse, K4HandCount) {
  auto o = left_sparse_ordering(complete_graph(4));
  std::vector<std::uint64_t> along;
  for (Vertex v : o.order) along.push_back(o.left_tri[v]);
  EXPECT_EQ(along, (std::vector<std::uint64_t>{0, 0, 1, 3}));
  auto ok = verify_left_sparsity(complete_graph(4), o, 3);
  EXPECT_TRUE(ok.pass);
  EXPECT_EQ(ok.max_left, 3u);
  auto bad = verify_left_sparsity(complete_graph(4), o, 2);
  EXPECT_FALSE(bad.pass);
  EXPECT_EQ(bad.violators, std::vector<Vertex>{o.order.back()});
}

TEST(LeftSparse, TriangleFreeIsAllZero) {
  for (Graph g : {petersen_graph(), complete_bipartite(4, 6), cycle_graph(9)}) {
    auto o = left_sparse_ordering(g);
    for (auto x : o.left_tri) EXPECT_EQ(x, 0u);
  }
}

TEST(LeftSparse, MatchesRightmostOracleAndCertificate) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    std::size_t n = 10 + seed % 51;
    Graph g = oracle::random_graph(n, 0.25, seed);
    auto a = oracle::adjacency(g);
    auto built = build_left_sparse_ordering(g);
    const auto& o = built.ordering;

    auto sorted = o.order;
    std::sort(sorted.begin(), sorted.end());
    std::vector<Vertex> ids(n);
    std::iota(ids.begin(), ids.end(), Vertex{0});
    ASSERT_EQ(sorted, ids);

    EXPECT_EQ(o.left_tri, oracle::left_triangles(a, o.order)) << "seed " << seed;
    EXPECT_EQ(left_triangle_counts(g, o.order), o.left_tri);

    // Replay the extraction against brute-force residual counts.
    ASSERT_EQ(built.steps.size(), n);
    auto residual = a;
    std::vector<bool> gone(n, false);
    for (std::size_t i = 0; i < n; ++i) {
      const auto& st = built.steps[i];
      EXPECT_EQ(st.vertex, o.order[n - 1 - i]);
      std::uint64_t best = UINT64_MAX;
      Vertex arg = 0;
      for (Vertex v = 0; v < n; ++v) {
        if (gone[v]) continue;
        auto tv = oracle::triangles_at(residual, v);
        if (tv < best) best = tv, arg = v;
      }
      EXPECT_EQ(st.vertex, arg);
      EXPECT_EQ(st.vertex_triangles, best);
      EXPECT_EQ(st.residual_triangles, oracle::triangles(residual));
      EXPECT_EQ(st.residual_size, n - i);
      EXPECT_TRUE(st.within_average());
      gone[st.vertex] = true;
      for (std::size_t w = 0; w < n; ++w) residual[st.vertex][w] = residual[w][st.vertex] = false;
    }

    auto rep = verify_left_sparsity(g, o, o.max_left());
    EXPECT_TRUE(rep.pass);
    EXPECT_TRUE(rep.sum_identity);
    EXPECT_TRUE(rep.matches_recorded);
    EXPECT_EQ(rep.triangles, oracle::triangles(a));
  }
}

TEST(LeftSparse, SumIdentityForArbitraryOrders) {
  Graph g = oracle::random_graph(30, 0.4, 11);
  std::vector<Vertex> order(30);
  std::iota(order.begin(), order.end(), Vertex{0});
  std::mt19937_64 gen(5);
  for (int r = 0; r < 10; ++r) {
    std::shuffle(order.begin(), order.end(), gen);
    auto left = left_triangle_counts(g, order);
    EXPECT_EQ(std::accumulate(left.begin(), left.end(), std::uint64_t{0}), triangle_count(g));
    EXPECT_EQ(left, oracle::left_triangles(oracle::adjacency(g), order));
  }
}

TEST(LeftSparse, RejectsNonPermutation) {
  Graph g = complete_graph(4);
  VertexOrdering bad{{0, 1, 1, 3}, {0, 0, 0, 0}};
  EXPECT_THROW(verify_left_sparsity(g, bad, 10), InvalidOrdering);
  VertexOrdering shorter{{0, 1, 2}, {0, 0, 0}};
  EXPECT_THROW(verify_left_sparsity(g, shorter, 10), InvalidOrdering);
}

TEST(LeftSparse, Deterministic) {
  Graph g = oracle::random_graph(50, 0.3, 2);
  EXPECT_EQ(left_sparse_ordering(g).order, left_sparse_ordering(g).order);
}
