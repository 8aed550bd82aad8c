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

#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "kttt/graph.hpp"

namespace kttt {

/// Vertex set file: one id per line, ascending on write. Blank lines and
/// lines starting with '#' are skipped on read; duplicates are rejected.
VertexSet read_vertex_set(std::istream& in, std::size_t n);
void write_vertex_set(std::ostream& out, const VertexSet& s);

/// Label file (classes, colours): line v holds the label of vertex v, exactly n lines.
std::vector<std::uint32_t> read_labels(std::istream& in, std::size_t n);
void write_labels(std::ostream& out, const std::vector<std::uint32_t>& labels);

/// File wrappers; errors carry the path. "-" means stdin.
Graph load_graph(const std::string& path);
VertexSet load_vertex_set(const std::string& path, std::size_t n);
std::vector<std::uint32_t> load_labels(const std::string& path, std::size_t n);

/// Writes via a temporary file in the same directory, then renames.
void save_text(const std::string& path, const std::string& content);

}  // namespace kttt
