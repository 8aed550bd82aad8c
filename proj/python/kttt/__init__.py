# Copyright 2026 The kttt Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Independent sets, nibble runs and colourings of K_{t,t,t}-free graphs."""

import json as _json

from ._core import (
    Graph,
    InstanceTooLarge,
    ParseError,
    PartitionFailure,
    color,
    exact_mis,
    expected_residual_edges,
    expected_survivors,
    generate,
    greedy_independent_set,
    is_independent,
    left_sparse_ordering,
    partition,
    reference_bounds,
    triangle_count,
    verify_coloring,
)
from ._core import run_nibble as _run_nibble

__all__ = [
    "Graph",
    "InstanceTooLarge",
    "ParseError",
    "PartitionFailure",
    "color",
    "exact_mis",
    "expected_residual_edges",
    "expected_survivors",
    "generate",
    "greedy_independent_set",
    "is_independent",
    "left_sparse_ordering",
    "partition",
    "reference_bounds",
    "run_nibble",
    "triangle_count",
    "verify_coloring",
]


def run_nibble(g, eps=0.25, seed=1, t=1, finish=True):
    """Runs the cleaning/nibble loop; the trace comes back as a list of dicts."""
    out = _run_nibble(g, eps=eps, seed=seed, t=t, finish=finish)
    out["trace"] = [_json.loads(line) for line in out["trace"]]
    return out
