"""Unique-shortest-path realizability of path systems.

The package decides whether a set of node sequences (a "path system") can
appear as the unique shortest paths of a real-weighted graph, in directed,
undirected, positive-weight, and acyclic settings.  Positive answers come
with verified rational edge weights; negative answers come with a distinct
boundary-sharing weighted system, and, when a bounded search finds one, a
two-colored cell complex (a polyhedron) explaining the obstruction.
"""

from pathsys.core import (
    PathSystem,
    WeightedPathSystem,
    SystemFlags,
    boundary_path,
    boundary_system,
    boundary_edges,
    classify,
    reversal_closure,
    circular_shift,
    subsystem,
)
from pathsys.metrizability import Decision, decide, extract_usp_system, rotate_and_decide

__version__ = "0.1.0"
SCHEMA_VERSION = "1"

__all__ = [
    "PathSystem",
    "WeightedPathSystem",
    "SystemFlags",
    "boundary_path",
    "boundary_system",
    "boundary_edges",
    "classify",
    "reversal_closure",
    "circular_shift",
    "subsystem",
    "Decision",
    "decide",
    "extract_usp_system",
    "rotate_and_decide",
    "__version__",
    "SCHEMA_VERSION",
]
