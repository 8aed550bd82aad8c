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

#include "kttt/io.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

namespace kttt {

namespace {

bool skippable(std::string_view line) {
  auto pos = line.find_first_not_of(" \t\r");
  return pos == std::string_view::npos || line[pos] == '#';
}

std::uint64_t parse_id(std::string_view line, std::size_t lineno) {
  auto b = line.find_first_not_of(" \t");
  auto e = line.find_last_not_of(" \t\r");
  if (b == std::string_view::npos) throw ParseError(lineno, "expected a non-negative integer");
  line = line.substr(b, e - b + 1);
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(line.data(), line.data() + line.size(), v);
  if (ec != std::errc{} || ptr != line.data() + line.size())
    throw ParseError(lineno, "expected a non-negative integer, got '" + std::string(line) + "'");
  return v;
}

template <class F>
auto with_path(const std::string& path, F&& f) {
  try {
    return f();
  } catch (const ParseError& e) {
    throw ParseError(path, e.line(), e.detail());
  } catch (const Error& e) {
    throw Error(path + ": " + e.what());
  }
}

template <class F>
auto with_input(const std::string& path, F&& f) {
  if (path == "-") return with_path("<stdin>", [&] { return f(std::cin); });
  std::ifstream in(path);
  if (!in) throw Error(path + ": cannot open for reading");
  return with_path(path, [&] { return f(in); });
}

}  // namespace

VertexSet read_vertex_set(std::istream& in, std::size_t n) {
  VertexSet s(n);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (skippable(line)) continue;
    auto v = parse_id(line, lineno);
    if (v >= n) throw ParseError(lineno, "vertex id " + std::to_string(v) + " out of range");
    if (!s.insert(static_cast<Vertex>(v))) throw ParseError(lineno, "duplicate vertex id " + std::to_string(v));
  }
  return s;
}

void write_vertex_set(std::ostream& out, const VertexSet& s) {
  for (Vertex v : s.members()) out << v << '\n';
}

std::vector<std::uint32_t> read_labels(std::istream& in, std::size_t n) {
  std::vector<std::uint32_t> labels;
  labels.reserve(n);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (skippable(line)) continue;
    if (labels.size() == n) throw ParseError(lineno, "more labels than vertices");
    auto v = parse_id(line, lineno);
    if (v > UINT32_MAX) throw ParseError(lineno, "label out of range");
    labels.push_back(static_cast<std::uint32_t>(v));
  }
  if (labels.size() != n)
    throw ParseError(lineno + 1, "expected " + std::to_string(n) + " labels, got " + std::to_string(labels.size()));
  return labels;
}

void write_labels(std::ostream& out, const std::vector<std::uint32_t>& labels) {
  for (auto x : labels) out << x << '\n';
}

Graph load_graph(const std::string& path) {
  return with_input(path, [](std::istream& in) { return parse_edge_list(in); });
}

VertexSet load_vertex_set(const std::string& path, std::size_t n) {
  return with_input(path, [n](std::istream& in) { return read_vertex_set(in, n); });
}

std::vector<std::uint32_t> load_labels(const std::string& path, std::size_t n) {
  return with_input(path, [n](std::istream& in) { return read_labels(in, n); });
}

void save_text(const std::string& path, const std::string& content) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(path + ": cannot open for writing");
    out << content;
    out.flush();
    if (!out) throw Error(path + ": write failed");
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0) {
    std::remove(tmp.c_str());
    throw Error(path + ": cannot replace file");
  }
}

}  // namespace kttt
