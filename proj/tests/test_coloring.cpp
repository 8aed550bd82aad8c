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

#include <set>

#include "kttt/coloring.hpp"
#include "kttt/generators.hpp"
#include "oracles.hpp"

using namespace kttt;

namespace {

const PartColorer kAll[] = {PartColorer::greedy_degeneracy, PartColorer::dsatur, PartColorer::randomized_local};

bool proper_by_matrix(const Graph& g, const std::vector<std::uint32_t>& c) {
  auto a = oracle::adjacency(g);
  for (std::size_t u = 0; u < a.size(); ++u)
    for (std::size_t v = u + 1; v < a.size(); ++v)
      if (a[u][v] && c[u] == c[v]) return false;
  return true;
}

std::size_t distinct(const std::vector<std::uint32_t>& c) { return std::set<std::uint32_t>(c.begin(), c.end()).size(); }

}  // namespace

TEST(ColorPart, Examples) {
  for (auto s : kAll) {
    EXPECT_EQ(color_part(complete_graph(2), s, Rng(1)).palette_size, 2u);
    EXPECT_LE(color_part(cycle_graph(5), s, Rng(1)).palette_size, 3u);
    EXPECT_EQ(color_part(Graph(4), s, Rng(1)).palette_size, 1u);
    EXPECT_EQ(color_part(Graph(0), s, Rng(1)).palette_size, 0u);
  }
}

TEST(ColorPart, ProperWithinDegreeBound) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    Graph g = oracle::random_graph(30, 0.05 + 0.01 * static_cast<double>(seed), seed);
    for (auto s : kAll) {
      auto c = color_part(g, s, Rng(seed));
      ASSERT_EQ(c.color_of.size(), g.num_vertices());
      EXPECT_TRUE(proper_by_matrix(g, c.color_of));
      EXPECT_LE(c.palette_size, g.max_degree() + 1);
      EXPECT_EQ(distinct(c.color_of), c.palette_size);
      auto rep = verify_coloring(g, c);
      EXPECT_TRUE(rep.pass);
      EXPECT_TRUE(rep.dense);
    }
  }
}

TEST(ColorPart, StrategyNames) {
  for (auto s : kAll) EXPECT_EQ(part_colorer_from_string(to_string(s)), s);
  EXPECT_THROW(part_colorer_from_string("rainbow"), std::invalid_argument);
}

TEST(VerifyColoring, Examples) {
  Graph k2 = complete_graph(2);
  EXPECT_TRUE(verify_coloring(k2, {{0, 1}, 2}).pass);
  auto bad = verify_coloring(k2, {{0, 0}, 1});
  EXPECT_FALSE(bad.pass);
  EXPECT_EQ(bad.monochromatic, (std::vector<Edge>{{0, 1}}));
  auto sparse = verify_coloring(k2, {{0, 2}, 3});
  EXPECT_TRUE(sparse.pass);
  EXPECT_FALSE(sparse.dense);
}

TEST(Pipeline, EdgelessUsesOneColour) {
  auto r = color_kttt_free(Graph(7), 1, PartColorer::greedy_degeneracy, Rng(1));
  EXPECT_EQ(r.coloring.palette_size, 1u);
}

TEST(Pipeline, K3BlowupCertified) {
  for (std::uint64_t t : {2u, 3u}) {
    Graph g = blowup(complete_graph(3), t - 1);
    for (auto s : kAll) {
      auto r = color_kttt_free(g, t, s, Rng(t));
      EXPECT_TRUE(proper_by_matrix(g, r.coloring.color_of));
      const auto& part = r.partition.partition;
      auto cert = verify_partition(g, part, r.partition.params.part_degree_bound);
      EXPECT_TRUE(cert.pass);
    }
  }
}

TEST(Pipeline, DisjointPalettes) {
  for (std::uint64_t seed = 1; seed <= 6; ++seed) {
    Graph g = seed % 2 ? blowup(cycle_graph(5), 4) : gnp(300, 0.03, seed);
    for (auto s : kAll) {
      auto r = color_kttt_free(g, 1, s, Rng(seed));
      const auto& part = r.partition.partition;
      EXPECT_TRUE(proper_by_matrix(g, r.coloring.color_of));
      EXPECT_TRUE(verify_coloring(g, r.coloring).dense);

      std::uint32_t total = 0;
      for (auto x : r.part_palette) total += x;
      EXPECT_EQ(r.coloring.palette_size, total);

      // Each colour belongs to exactly one class.
      std::vector<std::set<std::uint32_t>> owners(r.coloring.palette_size);
      for (Vertex v = 0; v < g.num_vertices(); ++v) owners[r.coloring.color_of[v]].insert(part.class_of[v]);
      for (const auto& o : owners) EXPECT_EQ(o.size(), 1u);

      // Per-class palette is within the greedy bound for that class.
      auto parts = split_by_class(g, part.class_of, part.k);
      for (std::uint32_t c = 0; c < part.k; ++c)
        EXPECT_LE(r.part_palette[c], parts[c].graph.max_degree() + 1);
      EXPECT_LE(r.coloring.palette_size, r.palette_bound());
      EXPECT_EQ(r.palette_bound(), std::uint64_t{part.k} * (1 + r.max_part_degree));
    }
  }
}

TEST(Pipeline, Deterministic) {
  Graph g = gnp(200, 0.05, 3);
  auto a = color_kttt_free(g, 1, PartColorer::randomized_local, Rng(5));
  auto b = color_kttt_free(g, 1, PartColorer::randomized_local, Rng(5));
  EXPECT_EQ(a.coloring.color_of, b.coloring.color_of);
  EXPECT_EQ(a.partition.partition.class_of, b.partition.partition.class_of);
}
