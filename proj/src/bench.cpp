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

#include "kttt/bench.hpp"

#include <atomic>
#include <charconv>
#include <chrono>
#include <condition_variable>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <sstream>
#include <thread>

#include "kttt/generators.hpp"
#include "kttt/io.hpp"
#include "kttt/partition.hpp"

namespace kttt {

const char* to_string(Algorithm a) {
  switch (a) {
    case Algorithm::greedy: return "greedy";
    case Algorithm::nibble: return "nibble";
    case Algorithm::color: return "color";
    case Algorithm::partition: return "partition";
  }
  return "?";
}

Algorithm algorithm_from_string(std::string_view s) {
  for (auto a : {Algorithm::greedy, Algorithm::nibble, Algorithm::color, Algorithm::partition})
    if (s == to_string(a)) return a;
  throw std::invalid_argument("unknown algorithm '" + std::string(s) + "'");
}

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::pass: return "pass";
    case Verdict::fail: return "fail";
    case Verdict::error: return "error";
  }
  return "?";
}

std::string InstanceSource::id() const {
  if (!spec.empty()) {
    std::string out = spec;
    for (char& c : out)
      if (c == ':') c = '-';
      else if (c == ',') c = '_';
    return out;
  }
  return std::filesystem::path(path).stem().string();
}

std::string InstanceSource::family() const {
  if (spec.empty()) return "file";
  return spec.substr(0, spec.find(':'));
}

void RunConfig::validate() const {
  if (instances.empty()) throw std::invalid_argument("no instances given");
  if (seeds.empty()) throw std::invalid_argument("seed list is empty");
  if (algorithms.empty()) throw std::invalid_argument("no algorithms given");
  if (threads == 0) throw std::invalid_argument("threads must be >= 1");
  for (const auto& inst : instances) {
    if (inst.spec.empty() == inst.path.empty())
      throw std::invalid_argument("an instance needs exactly one of spec or path");
    if (!inst.spec.empty()) parse_gen_spec(inst.spec);
  }
  nibble.validate();
  for (const auto& dir : {iset_dir, trace_dir})
    if (!dir.empty() && !std::filesystem::is_directory(dir))
      throw Error(dir + ": not a directory");
}

namespace {

std::string fmt_real(double x) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x, std::chars_format::general, 10);
  return ec == std::errc{} ? std::string(buf, ptr) : std::string("nan");
}

constexpr const char* kColumns =
    "instance,family,n,m,d,max_degree,algorithm,seed,size,greedy_baseline,shearer_target,"
    "n_clean,n_nibble,stop_reason,wall_ms,verdict";

struct Job {
  const InstanceSource* instance;
  std::uint64_t seed;
};

struct JobOutput {
  std::vector<RunReport> reports;
  std::vector<std::pair<std::string, std::string>> files;  // path, content
};

JobOutput run_job(const RunConfig& config, const Job& job) {
  JobOutput out;
  RunReport base;
  base.instance = job.instance->id();
  base.family = job.instance->family();
  base.seed = job.seed;

  Graph g;
  try {
    g = job.instance->spec.empty() ? load_graph(job.instance->path)
                                   : generate(parse_gen_spec(job.instance->spec, job.seed));
  } catch (const std::exception& e) {
    for (auto a : config.algorithms) {
      RunReport r = base;
      r.algorithm = a;
      r.detail = e.what();
      out.reports.push_back(r);
    }
    return out;
  }
  auto summary = degrees(g);
  base.n = g.num_vertices();
  base.m = g.num_edges();
  base.d = summary.average();
  base.max_degree = summary.max_degree;
  base.greedy_baseline = greedy_independent_set(g).size();
  if (base.d > 1) base.shearer_target = reference_bounds(base.n, base.d, config.nibble.eps).shearer_target;

  using Clock = std::chrono::steady_clock;
  for (auto a : config.algorithms) {
    RunReport r = base;
    r.algorithm = a;
    Rng rng = algorithm_rng(job.seed, to_string(a));
    try {
      auto start = Clock::now();
      auto stop_clock = [&] {
        r.wall_ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
      };
      std::optional<VertexSet> iset;
      switch (a) {
        case Algorithm::greedy: {
          iset = greedy_independent_set(g);
          stop_clock();
          break;
        }
        case Algorithm::nibble: {
          auto res = run_nibble(g, config.nibble, rng);
          stop_clock();
          r.n_clean = res.trace.count(StepKind::clean);
          r.n_nibble = res.trace.count(StepKind::nibble);
          r.stop_reason = to_string(res.trace.stop_reason());
          if (!config.trace_dir.empty()) {
            std::string lines;
            for (const auto& rec : res.trace.records) lines += trace_record_json(rec) + "\n";
            out.files.emplace_back((std::filesystem::path(config.trace_dir) / trace_file_name(r)).string(),
                                   std::move(lines));
          }
          iset = std::move(res.iset);
          break;
        }
        case Algorithm::color: {
          auto res = color_kttt_free(g, config.t, config.colorer, rng);
          stop_clock();
          r.size = res.coloring.palette_size;
          auto report = verify_coloring(g, res.coloring);
          r.verdict = report.pass ? Verdict::pass : Verdict::fail;
          break;
        }
        case Algorithm::partition: {
          auto params = default_params(std::max<std::uint64_t>(1, g.max_degree()), config.t);
          auto res = partition_triangle_free(g, params, rng);
          stop_clock();
          r.size = res.partition.k;
          auto report = verify_partition(g, res.partition.class_of, params.part_degree_bound);
          r.verdict = report.pass && res.partition.k <= params.class_bound() ? Verdict::pass : Verdict::fail;
          break;
        }
      }
      if (iset) {
        r.size = iset->size();
        auto witness = independence_witness(g, *iset);
        r.verdict = witness ? Verdict::fail : Verdict::pass;
        if (witness) r.detail = "edge " + std::to_string(witness->first) + " " + std::to_string(witness->second);
        if (!config.iset_dir.empty()) {
          std::ostringstream text;
          write_vertex_set(text, *iset);
          out.files.emplace_back((std::filesystem::path(config.iset_dir) / iset_file_name(r)).string(), text.str());
        }
      }
    } catch (const std::exception& e) {
      r.verdict = Verdict::error;
      r.detail = e.what();
    }
    if (!config.record_wall_time) r.wall_ms = 0;
    out.reports.push_back(std::move(r));
  }
  return out;
}

}  // namespace

std::string csv_header() { return std::string(kCsvVersionLine) + "\n" + kColumns + "\n"; }

std::string csv_row(const RunReport& r) {
  std::string s;
  s += r.instance + ',' + r.family + ',' + std::to_string(r.n) + ',' + std::to_string(r.m) + ',' + fmt_real(r.d) +
       ',' + std::to_string(r.max_degree) + ',' + to_string(r.algorithm) + ',' + std::to_string(r.seed) + ',' +
       std::to_string(r.size) + ',' + std::to_string(r.greedy_baseline) + ',' + fmt_real(r.shearer_target) + ',' +
       std::to_string(r.n_clean) + ',' + std::to_string(r.n_nibble) + ',' + r.stop_reason + ',';
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", r.wall_ms);
  s += std::string(buf) + ',' + to_string(r.verdict);
  return s;
}

std::string iset_file_name(const RunReport& r) {
  return r.instance + "." + to_string(r.algorithm) + ".s" + std::to_string(r.seed) + ".iset";
}

std::string trace_file_name(const RunReport& r) {
  return r.instance + "." + to_string(r.algorithm) + ".s" + std::to_string(r.seed) + ".jsonl";
}

std::vector<RunReport> run_suite(const RunConfig& config, const std::function<void(const RunReport&)>& on_row) {
  config.validate();
  std::vector<Job> jobs;
  for (const auto& inst : config.instances)
    for (auto seed : config.seeds) jobs.push_back({&inst, seed});

  std::ofstream csv;
  if (!config.csv_path.empty()) {
    bool fresh = !std::filesystem::exists(config.csv_path) || std::filesystem::file_size(config.csv_path) == 0;
    csv.open(config.csv_path, std::ios::app);
    if (!csv) throw Error(config.csv_path + ": cannot open for appending");
    if (fresh) csv << csv_header() << std::flush;
  }

  std::vector<std::optional<JobOutput>> done(jobs.size());
  std::mutex mu;
  std::condition_variable ready;
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (;;) {
      std::size_t i = next.fetch_add(1);
      if (i >= jobs.size()) return;
      JobOutput result = run_job(config, jobs[i]);
      std::lock_guard lock(mu);
      done[i] = std::move(result);
      ready.notify_all();
    }
  };
  std::vector<std::thread> pool;
  const std::size_t workers = std::min(config.threads, jobs.size());
  for (std::size_t k = 0; k < workers; ++k) pool.emplace_back(worker);

  // Single writer: commit jobs strictly in order.
  std::vector<RunReport> reports;
  std::exception_ptr failure;
  for (std::size_t i = 0; i < jobs.size(); ++i) {
    JobOutput result;
    {
      std::unique_lock lock(mu);
      ready.wait(lock, [&] { return done[i].has_value(); });
      result = std::move(*done[i]);
      done[i].reset();
    }
    try {
      for (auto& [path, content] : result.files) save_text(path, content);
      for (auto& r : result.reports) {
        if (csv.is_open()) {
          csv << csv_row(r) << '\n' << std::flush;
          if (!csv) throw Error(config.csv_path + ": write failed");
        }
        if (on_row) on_row(r);
        reports.push_back(std::move(r));
      }
    } catch (...) {
      if (!failure) failure = std::current_exception();
    }
  }
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
  return reports;
}

bool all_pass(const std::vector<RunReport>& reports) {
  for (const auto& r : reports)
    if (r.verdict != Verdict::pass) return false;
  return true;
}

ArtifactVerdict verify_artifacts(const std::string& graph_path, ArtifactKind kind, const std::string& artifact_path,
                                 std::optional<std::uint64_t> degree_bound) {
  Graph g = load_graph(graph_path);
  ArtifactVerdict v;
  switch (kind) {
    case ArtifactKind::iset: {
      auto s = load_vertex_set(artifact_path, g.num_vertices());
      auto witness = independence_witness(g, s);
      v.pass = !witness;
      v.message = witness ? "edge " + std::to_string(witness->first) + " " + std::to_string(witness->second) +
                                " has both ends in the set"
                          : "independent set of size " + std::to_string(s.size());
      break;
    }
    case ArtifactKind::coloring: {
      auto labels = load_labels(artifact_path, g.num_vertices());
      Coloring c{labels, 0};
      for (auto x : labels) c.palette_size = std::max(c.palette_size, x + 1);
      auto report = verify_coloring(g, c);
      v.pass = report.pass;
      v.message = report.pass ? "proper colouring with " + std::to_string(c.palette_size) + " colours"
                              : "edge " + std::to_string(report.monochromatic.front().first) + " " +
                                    std::to_string(report.monochromatic.front().second) + " is monochromatic";
      break;
    }
    case ArtifactKind::partition: {
      auto labels = load_labels(artifact_path, g.num_vertices());
      auto report = verify_partition(g, labels, degree_bound.value_or(UINT64_MAX));
      v.pass = report.pass;
      if (report.triangle_witness) {
        const auto& [c, t] = *report.triangle_witness;
        v.message = "class " + std::to_string(c) + " contains triangle " + std::to_string(t[0]) + " " +
                    std::to_string(t[1]) + " " + std::to_string(t[2]);
      } else if (!report.over_degree.empty()) {
        auto c = report.over_degree.front();
        v.message = "class " + std::to_string(c) + " has max degree " +
                    std::to_string(report.certificates[c].max_degree) + " above the bound";
      } else {
        v.message = "triangle-free partition into " + std::to_string(report.k) + " classes";
      }
      break;
    }
  }
  return v;
}

}  // namespace kttt
