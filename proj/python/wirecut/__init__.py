# Copyright 2026 The wirecut Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Circuit wire cutting with grouped Pauli measurements."""

import json

from ._wirecut import (
    Circuit,
    CutPlanError,
    CutSpec,
    Fragment,
    InfeasibleError,
    ParseError,
    PauliString,
    apply_cuts,
    diagonalizer,
    ghz,
    greedy_find_cuts,
    mub_partition,
    qft,
    random_blocks,
    random_layered,
    run,
)
from ._wirecut import bench as _bench

__all__ = [
    "Circuit",
    "CutPlanError",
    "CutSpec",
    "Fragment",
    "InfeasibleError",
    "ParseError",
    "PauliString",
    "apply_cuts",
    "bench",
    "diagonalizer",
    "ghz",
    "greedy_find_cuts",
    "mub_partition",
    "qft",
    "random_blocks",
    "random_layered",
    "run",
]


def bench(config, base_dir="", threads=1):
    """Run a benchmark described by a dict (same schema as the CLI config) and return the report."""
    return json.loads(_bench(json.dumps(config), base_dir, threads))
