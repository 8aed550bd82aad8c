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
#include <string_view>
#include <vector>

#include "kttt/graph.hpp"
#include "kttt/partition.hpp"
#include "kttt/rng.hpp"

namespace kttt {

struct Coloring {
  std::vector<std::uint32_t> color_of;
  std::uint32_t palette_size = 0;
};

enum class PartColorer { greedy_degeneracy, dsatur, randomized_local };
const char* to_string(PartColorer c);
PartColorer part_colorer_from_string(std::string_view s);

/// Proper colouring of one part; greedy strategies stay within max_degree + 1 colours.
Coloring color_part(const Graph& g, PartColorer choice, Rng rng);
inline Coloring color_part(const RelabeledSubgraph& g, PartColorer choice, Rng rng) {
  return color_part(g.graph, choice, std::move(rng));
}

struct ColoringReport {
  bool pass = false;
  std::vector<Edge> monochromatic;
  bool dense = false;  // every id in [palette_size) is used
};

ColoringReport verify_coloring(const Graph& g, const Coloring& c);

struct PipelineColoring {
  Coloring coloring;
  PartitionRun partition;
  std::vector<std::uint32_t> part_palette;  // colours used by each class
  std::size_t max_part_degree = 0;

  /// k * (1 + max part degree)
  std::uint64_t palette_bound() const;
};

/// Left-sparse ordering, resampled partition, cleanup, then each triangle-free
/// class coloured on its own palette.
PipelineColoring color_kttt_free(const Graph& g, const PartitionParams& params, PartColorer choice, Rng rng);
PipelineColoring color_kttt_free(const Graph& g, std::uint64_t t, PartColorer choice, Rng rng);

}  // namespace kttt
