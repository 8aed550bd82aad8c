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
#include <map>
#include <string>
#include <string_view>

#include "kttt/graph.hpp"

namespace kttt {

/// Each pair independently with probability p.
Graph gnp(std::size_t n, double p, std::uint64_t seed);

/// Uniform-ish simple d-regular graph by stub pairing; throws Error if every restart fails.
Graph random_regular(std::size_t n, std::size_t d, std::uint64_t seed, std::size_t max_restarts = 1000);

/// Bipartite G(a, b, p): parts [0, a) and [a, a + b).
Graph random_bipartite(std::size_t a, std::size_t b, double p, std::uint64_t seed);

/// Every base vertex becomes an independent blob; adjacent blobs are completely joined.
/// Vertex (x, j) gets id x * blob + j.
Graph blowup(const Graph& base, std::size_t blob);

/// copies disjoint copies of g.
Graph disjoint_union(const Graph& g, std::size_t copies);

Graph complete_graph(std::size_t n);
Graph cycle_graph(std::size_t n);
Graph path_graph(std::size_t n);
Graph star_graph(std::size_t leaves);
Graph complete_bipartite(std::size_t a, std::size_t b);
Graph petersen_graph();

/// G(n, p) with one edge of every remaining triangle deleted, scanning
/// triangles in lexicographic order and dropping the lowest edge.
Graph triangle_scrubbed_gnp(std::size_t n, double p, std::uint64_t seed);

/// Parsed form of "family:key=value,key=value".
struct GenSpec {
  std::string family;
  std::map<std::string, std::string> params;
  std::uint64_t seed = 0;

  std::string to_string() const;
};

/// Grammar:
///   gnp:n=<int>,(p=<real>|d=<real>)
///   triangle_scrubbed_gnp:n=<int>,(p=<real>|d=<real>)
///   random_regular:n=<int>,d=<int>
///   bipartite:a=<int>,b=<int>,(p=<real>|d=<real>)
///   blowup_k3:s=<int>[,copies=<int>]     (scale is accepted for copies)
///   blowup_c5:s=<int>[,copies=<int>]
/// Any family also takes seed=<int>, which overrides the seed argument.
GenSpec parse_gen_spec(std::string_view text, std::uint64_t default_seed = 0);
Graph generate(const GenSpec& spec);

extern const char* const kGenSpecHelp;

}  // namespace kttt
