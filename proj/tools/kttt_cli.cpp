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

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>

#include <CLI11.hpp>
#include <spdlog/cfg/helpers.h>
#include <spdlog/sinks/stdout_color_sinks.h>
#include <spdlog/spdlog.h>

#include "kttt/bench.hpp"
#include "kttt/generators.hpp"
#include "kttt/io.hpp"
#include "kttt/partition.hpp"
#include "kttt/turan_order.hpp"

namespace {

using namespace kttt;

struct Globals {
  std::uint64_t seed = 1;
  std::size_t threads = 1;
  std::string out;
};

// Primary artifact goes to --out (or stdout); the summary goes to stdout only
// when the artifact went to a file.
class Output {
 public:
  explicit Output(const std::string& path) : path_(path) {}
  std::ostream& artifact() { return path_.empty() ? std::cout : buffer_; }
  std::ostream& summary() { return path_.empty() ? std::cerr : std::cout; }
  void commit() {
    if (!path_.empty()) save_text(path_, buffer_.str());
    std::cout.flush();
  }

 private:
  std::string path_;
  std::ostringstream buffer_;
};

std::vector<std::uint64_t> parse_seed_list(const std::string& text) {
  std::vector<std::uint64_t> seeds;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    auto dash = item.find('-');
    try {
      if (dash == std::string::npos) {
        seeds.push_back(std::stoull(item));
      } else {
        auto lo = std::stoull(item.substr(0, dash)), hi = std::stoull(item.substr(dash + 1));
        if (lo > hi) throw std::invalid_argument("");
        for (auto s = lo; s <= hi; ++s) seeds.push_back(s);
      }
    } catch (const std::logic_error&) {
      throw std::invalid_argument("bad seed list entry '" + item + "'");
    }
  }
  return seeds;
}

std::string csv_cell_instance(const std::string& path) { return InstanceSource{"", path}.id(); }

void append_csv(const std::string& path, const RunReport& r) {
  bool fresh = !std::ifstream(path).good();
  std::ofstream csv(path, std::ios::app);
  if (!csv) throw Error(path + ": cannot open for appending");
  if (fresh) csv << csv_header();
  csv << csv_row(r) << '\n';
}

void setup_logging() {
  auto logger = spdlog::stderr_color_mt("kttt");
  spdlog::set_default_logger(logger);
  spdlog::set_level(spdlog::level::warn);
  if (const char* env = std::getenv("NIBBLE_LOG")) spdlog::cfg::helpers::load_levels(env);
}

}  // namespace

int main(int argc, char** argv) {
  setup_logging();
  Globals g;
  CLI::App app{"kttt: independent sets and colourings of K_{t,t,t}-free graphs"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--seed", g.seed, "Seed for every random choice")->capture_default_str();
  app.add_option("--threads", g.threads, "Worker threads (bench)")->capture_default_str()->check(CLI::PositiveNumber);
  app.add_option("--out", g.out, "Output path for the primary artifact (default stdout)");

  // gen
  auto* gen = app.add_subcommand("gen", "Generate an instance as an edge list");
  std::string spec_text;
  gen->add_option("--spec", spec_text, std::string("Generator spec:\n") + kGenSpecHelp)->required();

  // order
  auto* order = app.add_subcommand("order", "Left-sparse vertex ordering");
  std::string order_graph = "-";
  order->add_option("graph", order_graph, "Edge-list file ('-' for stdin)");

  // partition
  auto* partition = app.add_subcommand("partition", "Partition into triangle-free classes");
  std::string part_graph = "-", part_csv;
  std::uint64_t part_t = 1;
  std::optional<std::uint64_t> ell, kappa_bad, mu, bad_threshold, part_degree_bound, max_resamples;
  partition->add_option("graph", part_graph, "Edge-list file ('-' for stdin)");
  partition->add_option("--t", part_t, "Forbidden K_{t,t,t}")->capture_default_str()->check(CLI::PositiveNumber);
  partition->add_option("--ell", ell, "Number of random classes");
  partition->add_option("--kappa-bad", kappa_bad, "Allowed same-class bad left neighbours");
  partition->add_option("--mu", mu, "Edge threshold among good same-class left neighbours");
  partition->add_option("--bad-threshold", bad_threshold, "Codegree at which a left neighbour is bad");
  partition->add_option("--part-degree-bound", part_degree_bound, "Same-class neighbour bound");
  partition->add_option("--max-resamples", max_resamples, "Resampling budget");
  partition->add_option("--csv", part_csv, "Append a CSV row to this file");

  // nibble
  auto* nibble = app.add_subcommand("nibble", "Cleaning / nibble independent set");
  std::string nib_graph = "-", trace_out, iset_out;
  double eps = 0.25;
  std::uint64_t nib_t = 1;
  std::size_t mis_cap = kDefaultMisNodeCap;
  bool no_finish = false;
  nibble->add_option("graph", nib_graph, "Edge-list file ('-' for stdin)");
  nibble->add_option("--eps", eps, "Accuracy parameter in (0, 1)")->capture_default_str();
  nibble->add_option("--t", nib_t, "Forbidden K_{t,t,t}")->capture_default_str()->check(CLI::PositiveNumber);
  nibble->add_option("--mis-cap", mis_cap, "Largest activated set solved exactly")->capture_default_str();
  nibble->add_flag("--no-finish", no_finish, "Do not add a greedy set of the residual graph");
  nibble->add_option("--trace-out", trace_out, "JSON lines trace, one record per iteration");
  nibble->add_option("--iset-out", iset_out, "Independent set file (default: --out or stdout)");

  // color
  auto* color = app.add_subcommand("color", "Colour via triangle-free partition");
  std::string col_graph = "-", strategy = "greedy_degeneracy";
  std::uint64_t col_t = 1;
  color->add_option("graph", col_graph, "Edge-list file ('-' for stdin)");
  color->add_option("--t", col_t, "Forbidden K_{t,t,t}")->capture_default_str()->check(CLI::PositiveNumber);
  color->add_option("--strategy", strategy, "greedy_degeneracy | dsatur | randomized_local")->capture_default_str();

  // verify
  auto* verify = app.add_subcommand("verify", "Check an artifact against a graph");
  std::string ver_graph, ver_iset, ver_coloring, ver_partition;
  std::optional<std::uint64_t> ver_bound;
  verify->add_option("graph", ver_graph, "Edge-list file")->required();
  auto* o_iset = verify->add_option("--iset", ver_iset, "Independent set file");
  auto* o_col = verify->add_option("--coloring", ver_coloring, "Per-vertex colour file");
  auto* o_part = verify->add_option("--partition", ver_partition, "Per-vertex class file");
  verify->add_option("--degree-bound", ver_bound, "Max class degree for --partition");
  o_iset->excludes(o_col, o_part);
  o_col->excludes(o_part);

  // bench
  auto* bench = app.add_subcommand("bench", "Run a seeded suite and emit CSV");
  std::vector<std::string> bench_specs, bench_graphs;
  std::string seed_list, algo_list = "greedy,nibble", bench_strategy = "greedy_degeneracy", iset_dir, trace_dir;
  double bench_eps = 0.25;
  std::uint64_t bench_t = 1;
  std::size_t bench_mis_cap = kDefaultMisNodeCap;
  bool no_wall = false;
  bench->add_option("--spec", bench_specs, "Generator spec (repeatable)");
  bench->add_option("--graph", bench_graphs, "Edge-list file (repeatable)");
  bench->add_option("--seeds", seed_list, "Seeds, e.g. 1-5 or 1,4,9 (default: --seed)");
  bench->add_option("--algorithms", algo_list, "Comma list of greedy, nibble, color, partition")->capture_default_str();
  bench->add_option("--eps", bench_eps, "Nibble accuracy parameter")->capture_default_str();
  bench->add_option("--t", bench_t, "Forbidden K_{t,t,t}")->capture_default_str()->check(CLI::PositiveNumber);
  bench->add_option("--mis-cap", bench_mis_cap, "Largest activated set solved exactly")->capture_default_str();
  bench->add_option("--strategy", bench_strategy, "Part colourer for color runs")->capture_default_str();
  bench->add_option("--iset-dir", iset_dir, "Write one iset file per run here");
  bench->add_option("--trace-dir", trace_dir, "Write one JSON lines trace per nibble run here");
  bench->add_flag("--no-wall", no_wall, "Write 0 in the wall_ms column");

  CLI11_PARSE(app, argc, argv);

  try {
    Output out(g.out);

    if (*gen) {
      auto spec = parse_gen_spec(spec_text, g.seed);
      spdlog::info("generating {}", spec.to_string());
      write_edge_list(out.artifact(), generate(spec));
      out.commit();
      return 0;
    }

    if (*order) {
      Graph graph = load_graph(order_graph);
      auto o = left_sparse_ordering(graph);
      for (Vertex v : o.order) out.artifact() << v << '\n';
      auto report = verify_left_sparsity(graph, o, UINT64_MAX);
      out.artifact() << "# max_left_tri " << o.max_left() << '\n' << "# triangles " << report.triangles << '\n';
      out.commit();
      return report.sum_identity ? 0 : 1;
    }

    if (*partition) {
      Graph graph = load_graph(part_graph);
      auto params = default_params(std::max<std::uint64_t>(1, graph.max_degree()), part_t);
      if (ell) params.ell = *ell;
      if (kappa_bad) params.kappa_bad = *kappa_bad;
      if (mu) params.mu = *mu;
      if (bad_threshold) params.bad_threshold = *bad_threshold;
      if (part_degree_bound) params.part_degree_bound = *part_degree_bound;
      if (max_resamples) params.max_resamples = *max_resamples;
      auto run = partition_triangle_free(graph, params, algorithm_rng(g.seed, "partition"));
      auto report = verify_partition(graph, run.partition.class_of, params.part_degree_bound);
      bool pass = report.pass && run.partition.k <= params.class_bound();
      write_labels(out.artifact(), run.partition.class_of);
      std::size_t max_deg = 0;
      for (const auto& c : report.certificates) max_deg = std::max(max_deg, c.max_degree);
      auto& s = out.summary();
      s << "classes " << run.partition.k << " (bound " << params.class_bound() << ")\n"
        << "params ell=" << params.ell << " kappa_bad=" << params.kappa_bad << " mu=" << params.mu
        << " bad_threshold=" << params.bad_threshold << " part_degree_bound=" << params.part_degree_bound << "\n"
        << "resamples " << run.resampled.resamples << "\n"
        << "max class degree " << max_deg << "\n"
        << "max removed per vertex " << run.partition.max_removed << "\n"
        << "verdict " << (pass ? "pass" : "fail") << "\n";
      if (!part_csv.empty()) {
        RunReport r;
        r.instance = part_graph == "-" ? "stdin" : csv_cell_instance(part_graph);
        r.family = "file";
        r.n = graph.num_vertices();
        r.m = graph.num_edges();
        r.d = degrees(graph).average();
        r.max_degree = graph.max_degree();
        r.algorithm = Algorithm::partition;
        r.seed = g.seed;
        r.size = run.partition.k;
        r.verdict = pass ? Verdict::pass : Verdict::fail;
        append_csv(part_csv, r);
      }
      out.commit();
      return pass ? 0 : 1;
    }

    if (*nibble) {
      Graph graph = load_graph(nib_graph);
      auto params = NibbleParams::from_eps(eps, nib_t);
      params.mis_node_cap = mis_cap;
      params.finish_with_greedy = !no_finish;
      auto res = run_nibble(graph, params, algorithm_rng(g.seed, "nibble"));
      std::string trace_text;
      for (const auto& rec : res.trace.records) {
        auto line = trace_record_json(rec);
        spdlog::debug("{}", line);
        trace_text += line + "\n";
      }
      if (!trace_out.empty()) save_text(trace_out, trace_text);
      bool pass = is_independent(graph, res.iset);
      std::string iset_path = iset_out.empty() ? g.out : iset_out;
      Output iset(iset_path);
      write_vertex_set(iset.artifact(), res.iset);
      auto& s = iset.summary();
      s << "iset " << res.iset.size() << " (nibble " << res.nibble_iset.size() << ")\n"
        << "greedy " << greedy_independent_set(graph).size() << "\n";
      if (degrees(graph).average() > 1)
        s << "shearer_target " << reference_bounds(graph.num_vertices(), degrees(graph).average(), eps).shearer_target
          << "\n";
      s << "steps clean " << res.trace.count(StepKind::clean) << " nibble " << res.trace.count(StepKind::nibble)
        << " stop " << to_string(res.trace.stop_reason()) << "\n"
        << "verdict " << (pass ? "pass" : "fail") << "\n";
      iset.commit();
      return pass ? 0 : 1;
    }

    if (*color) {
      Graph graph = load_graph(col_graph);
      auto res = color_kttt_free(graph, col_t, part_colorer_from_string(strategy), algorithm_rng(g.seed, "color"));
      auto report = verify_coloring(graph, res.coloring);
      write_labels(out.artifact(), res.coloring.color_of);
      out.summary() << "palette " << res.coloring.palette_size << "\n"
                    << "k " << res.partition.partition.k << "\n"
                    << "max part degree " << res.max_part_degree << "\n"
                    << "verdict " << (report.pass ? "pass" : "fail") << "\n";
      out.commit();
      return report.pass ? 0 : 1;
    }

    if (*verify) {
      ArtifactKind kind;
      std::string path;
      if (*o_iset) kind = ArtifactKind::iset, path = ver_iset;
      else if (*o_col) kind = ArtifactKind::coloring, path = ver_coloring;
      else if (*o_part) kind = ArtifactKind::partition, path = ver_partition;
      else throw std::invalid_argument("verify needs one of --iset, --coloring, --partition");
      auto v = verify_artifacts(ver_graph, kind, path, ver_bound);
      std::cout << (v.pass ? "pass" : "fail") << ": " << v.message << "\n";
      return v.pass ? 0 : 1;
    }

    if (*bench) {
      RunConfig config;
      for (const auto& s : bench_specs) config.instances.push_back({s, ""});
      for (const auto& p : bench_graphs) config.instances.push_back({"", p});
      config.seeds = seed_list.empty() ? std::vector<std::uint64_t>{g.seed} : parse_seed_list(seed_list);
      config.algorithms.clear();
      std::stringstream ss(algo_list);
      for (std::string a; std::getline(ss, a, ',');)
        if (!a.empty()) config.algorithms.push_back(algorithm_from_string(a));
      config.nibble = NibbleParams::from_eps(bench_eps, bench_t);
      config.nibble.mis_node_cap = bench_mis_cap;
      config.t = bench_t;
      config.colorer = part_colorer_from_string(bench_strategy);
      config.csv_path = g.out;
      config.iset_dir = iset_dir;
      config.trace_dir = trace_dir;
      config.threads = g.threads;
      config.record_wall_time = !no_wall;
      if (g.out.empty()) std::cout << csv_header();
      auto reports = run_suite(config, [&](const RunReport& r) {
        spdlog::info("{} {} seed {}: {} {}", r.instance, to_string(r.algorithm), r.seed, r.size, to_string(r.verdict));
        if (!r.detail.empty()) spdlog::warn("{} {} seed {}: {}", r.instance, to_string(r.algorithm), r.seed, r.detail);
        if (g.out.empty()) std::cout << csv_row(r) << '\n' << std::flush;
      });
      return all_pass(reports) ? 0 : 1;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
