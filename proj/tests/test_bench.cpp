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

#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include "kttt/bench.hpp"
#include "kttt/generators.hpp"
#include "kttt/io.hpp"

using namespace kttt;
namespace fs = std::filesystem;

namespace {

class TempDir {
 public:
  TempDir() {
    static int counter = 0;
    path_ = fs::temp_directory_path() / ("kttt_bench_test_" + std::to_string(::getpid()) + "_" + std::to_string(counter++));
    fs::remove_all(path_);
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  fs::path operator/(const std::string& name) const { return path_ / name; }
  const fs::path& path() const { return path_; }

 private:
  fs::path path_;
};

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

void spit(const fs::path& p, const std::string& text) {
  std::ofstream out(p);
  out << text;
}

RunConfig small_config(const TempDir& dir) {
  RunConfig c;
  c.instances = {InstanceSource{"gnp:n=400,d=12", ""}};
  c.seeds = {1, 2, 3};
  c.algorithms = {Algorithm::greedy, Algorithm::nibble};
  c.nibble = NibbleParams::from_eps(0.25);
  c.iset_dir = (dir / "isets").string();
  c.trace_dir = (dir / "traces").string();
  c.csv_path = (dir / "rows.csv").string();
  c.record_wall_time = false;
  fs::create_directories(c.iset_dir);
  fs::create_directories(c.trace_dir);
  return c;
}

}  // namespace

TEST(Bench, InstanceIds) {
  EXPECT_EQ((InstanceSource{"gnp:n=10,p=0.5", ""}).id(), "gnp-n=10_p=0.5");
  EXPECT_EQ((InstanceSource{"gnp:n=10,p=0.5", ""}).family(), "gnp");
  EXPECT_EQ((InstanceSource{"", "/data/road.edges"}).id(), "road");
}

TEST(Bench, RowsAndFiles) {
  TempDir dir;
  auto config = small_config(dir);
  std::vector<RunReport> seen;
  auto rows = run_suite(config, [&](const RunReport& r) { seen.push_back(r); });
  ASSERT_EQ(rows.size(), 6u);
  EXPECT_EQ(seen.size(), 6u);
  EXPECT_TRUE(all_pass(rows));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    EXPECT_EQ(rows[i].seed, config.seeds[i / 2]);
    EXPECT_EQ(rows[i].algorithm, i % 2 ? Algorithm::nibble : Algorithm::greedy);
    EXPECT_TRUE(fs::exists(fs::path(config.iset_dir) / iset_file_name(rows[i])));
  }
  EXPECT_TRUE(fs::exists(fs::path(config.trace_dir) / trace_file_name(rows[1])));

  auto csv = slurp(config.csv_path);
  EXPECT_EQ(csv.rfind(csv_header(), 0), 0u);
  std::size_t lines = 0;
  for (char ch : csv) lines += ch == '\n';
  EXPECT_EQ(lines, 2u + 6u);
  for (const auto& r : rows) EXPECT_NE(csv.find(csv_row(r)), std::string::npos);

  // Appending does not repeat the header.
  run_suite(config);
  auto twice = slurp(config.csv_path);
  EXPECT_EQ(twice.find(kCsvVersionLine, 1), std::string::npos);
}

TEST(Bench, RowsReplayOutsideTheSuite) {
  TempDir dir;
  auto config = small_config(dir);
  auto rows = run_suite(config);
  for (const auto& r : rows) {
    Graph g = generate(parse_gen_spec(config.instances[0].spec, r.seed));
    EXPECT_EQ(r.n, g.num_vertices());
    EXPECT_EQ(r.m, g.num_edges());
    EXPECT_EQ(r.greedy_baseline, greedy_independent_set(g).size());
    VertexSet expected = r.algorithm == Algorithm::greedy
                             ? greedy_independent_set(g)
                             : run_nibble(g, config.nibble, algorithm_rng(r.seed, "nibble")).iset;
    EXPECT_EQ(r.size, expected.size());
    EXPECT_EQ(load_vertex_set((fs::path(config.iset_dir) / iset_file_name(r)).string(), g.num_vertices()), expected);
  }
}

TEST(Bench, ThreadCountDoesNotChangeOutput) {
  TempDir one, three;
  auto a = small_config(one);
  auto b = small_config(three);
  a.algorithms = b.algorithms = {Algorithm::greedy, Algorithm::nibble, Algorithm::color, Algorithm::partition};
  a.instances = b.instances = {InstanceSource{"gnp:n=300,d=10", ""}, InstanceSource{"blowup_c5:s=4,copies=3", ""}};
  a.threads = 1;
  b.threads = 3;
  auto ra = run_suite(a);
  auto rb = run_suite(b);
  ASSERT_EQ(ra.size(), rb.size());
  for (std::size_t i = 0; i < ra.size(); ++i) EXPECT_EQ(csv_row(ra[i]), csv_row(rb[i]));
  EXPECT_EQ(slurp(a.csv_path), slurp(b.csv_path));
  for (const auto& r : ra)
    if (r.algorithm == Algorithm::greedy || r.algorithm == Algorithm::nibble)
      EXPECT_EQ(slurp(fs::path(a.iset_dir) / iset_file_name(r)), slurp(fs::path(b.iset_dir) / iset_file_name(r)));
  EXPECT_TRUE(all_pass(ra));
}

TEST(Bench, BadInstanceIsAnErrorRow) {
  RunConfig c;
  c.instances = {InstanceSource{"", "/nonexistent/graph.edges"}};
  c.record_wall_time = false;
  auto rows = run_suite(c);
  ASSERT_EQ(rows.size(), 2u);
  EXPECT_EQ(rows[0].verdict, Verdict::error);
  EXPECT_FALSE(all_pass(rows));
}

TEST(Bench, ConfigValidation) {
  RunConfig c;
  EXPECT_THROW(c.validate(), std::invalid_argument);
  c.instances = {InstanceSource{"gnp:n=10,p=0.1", ""}};
  EXPECT_NO_THROW(c.validate());
  c.seeds.clear();
  EXPECT_THROW(c.validate(), std::invalid_argument);
}

TEST(VerifyArtifacts, IsetOnTriangle) {
  TempDir dir;
  auto graph = (dir / "k3.edges").string();
  std::ostringstream text;
  write_edge_list(text, complete_graph(3));
  spit(graph, text.str());
  spit(dir / "good.iset", "0\n");
  spit(dir / "bad.iset", "0\n1\n");
  EXPECT_TRUE(verify_artifacts(graph, ArtifactKind::iset, (dir / "good.iset").string()).pass);
  auto bad = verify_artifacts(graph, ArtifactKind::iset, (dir / "bad.iset").string());
  EXPECT_FALSE(bad.pass);
  EXPECT_NE(bad.message.find("0 1"), std::string::npos) << bad.message;
}

TEST(VerifyArtifacts, CorruptedBenchIset) {
  TempDir dir;
  auto config = small_config(dir);
  config.seeds = {4};
  auto rows = run_suite(config);
  Graph g = generate(parse_gen_spec(config.instances[0].spec, 4));
  auto graph_path = (dir / "g.edges").string();
  std::ostringstream text;
  write_edge_list(text, g);
  spit(graph_path, text.str());

  auto iset_path = fs::path(config.iset_dir) / iset_file_name(rows[1]);
  EXPECT_TRUE(verify_artifacts(graph_path, ArtifactKind::iset, iset_path.string()).pass);
  // Add a neighbour of a member.
  auto members = load_vertex_set(iset_path.string(), g.num_vertices()).members();
  Vertex v = 0;
  for (Vertex m : members)
    if (g.degree(m) > 0) {
      v = m;
      break;
    }
  spit(iset_path, slurp(iset_path) + std::to_string(g.neighbors(v)[0]) + "\n");
  EXPECT_FALSE(verify_artifacts(graph_path, ArtifactKind::iset, iset_path.string()).pass);
}

TEST(VerifyArtifacts, ColoringAndPartition) {
  TempDir dir;
  auto graph = (dir / "c5.edges").string();
  std::ostringstream text;
  write_edge_list(text, cycle_graph(5));
  spit(graph, text.str());
  spit(dir / "ok.col", "0\n1\n0\n1\n2\n");
  spit(dir / "bad.col", "0\n1\n0\n1\n0\n");
  EXPECT_TRUE(verify_artifacts(graph, ArtifactKind::coloring, (dir / "ok.col").string()).pass);
  EXPECT_FALSE(verify_artifacts(graph, ArtifactKind::coloring, (dir / "bad.col").string()).pass);
  spit(dir / "one.part", "0\n0\n0\n0\n0\n");
  EXPECT_TRUE(verify_artifacts(graph, ArtifactKind::partition, (dir / "one.part").string()).pass);
  EXPECT_FALSE(verify_artifacts(graph, ArtifactKind::partition, (dir / "one.part").string(), 1).pass);
  spit(dir / "short.part", "0\n0\n");
  EXPECT_THROW(verify_artifacts(graph, ArtifactKind::partition, (dir / "short.part").string()), Error);
}
