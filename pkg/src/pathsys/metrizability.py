"""Top-level decision: is a path system realizable as unique shortest paths?

Directed pipeline: screen consistency; strip zero-boundary paths; with at
most one path left the system is realizable outright; otherwise run the
rigidity test on the stripped system and the cutting-plane witness search
on the full one.  The two routes must agree (the equivalence is exact),
and a disagreement raises instead of guessing.  Positive answers return a
verified weight graph covering every original path, trivial ones included
(the witness LP carries their rows natively, so no weight patching is
needed).  Negative answers return a distinct boundary-sharing normalized
system, plus, when a bounded search finds one, a polyhedral partner and
manifold report for the stripped system itself.

Undirected systems reduce to the directed decision of the reversal
closure, with the witness symmetrized.  The dag setting additionally
screens acyclicity and rejects non-acyclic inputs as a usage error.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from fractions import Fraction

from pathsys import graphalg, rigidity, topology, witness
from pathsys.core import (
    PathSystem,
    WeightedPathSystem,
    circular_shift,
    classify,
    is_trivial_path,
    reversal_closure,
)

ONE = Fraction(1)

SETTINGS = ("directed", "undirected", "dag")


class CrossValidationError(RuntimeError):
    """The rigidity route and the witness route disagreed (a defect)."""


@dataclass
class Decision:
    tag: str  # "strongly_metrizable" | "not_strongly_metrizable" | "inconsistent"
    setting: str
    witness_graph: graphalg.WeightedDigraph | None = None
    certificate: WeightedPathSystem | None = None
    partner: PathSystem | None = None
    manifold: topology.ManifoldReport | None = None
    stats: dict = field(default_factory=dict)

    @property
    def is_sm(self) -> bool:
        return self.tag == "strongly_metrizable"


def _strip_trivial(s: PathSystem) -> PathSystem:
    kept = [p for p in s.name_paths() if not is_trivial_path(p)]
    if not kept:
        return PathSystem((), ())
    return PathSystem.from_names(kept)


def decide(s: PathSystem, setting: str = "directed",
           evidence_budget_ms: float | None = 1000.0) -> Decision:
    """Full decision with verified artifacts; see the module docstring.

    ``evidence_budget_ms`` caps the optional polyhedral-evidence search on
    negative answers; None skips it.  Evidence never affects the tag.
    """
    if setting not in SETTINGS:
        raise ValueError(f"unknown setting {setting!r}")
    t0 = time.monotonic()
    if setting == "undirected":
        closure = reversal_closure(s)
        inner = decide(closure, "directed", evidence_budget_ms)
        inner.setting = "undirected"
        if inner.is_sm:
            sym = graphalg.symmetrize(inner.witness_graph)
            if not witness.verify_witness(closure, sym):
                raise CrossValidationError("symmetrized witness failed")
            inner.witness_graph = sym
        inner.stats["wall_ms"] = (time.monotonic() - t0) * 1000.0
        return inner
    if setting == "dag" and not classify(s).acyclic:
        raise ValueError("dag setting requires an acyclic system")

    stats = {"lp_pivots": 0, "oracle_calls": 0}
    flags = classify(s)
    if not flags.consistent:
        stats["wall_ms"] = (time.monotonic() - t0) * 1000.0
        return Decision("inconsistent", setting, stats=stats)

    stripped = _strip_trivial(s)
    witness_run = witness.witness_weights(s)
    stats["lp_pivots"] += witness_run.lp_pivots
    stats["oracle_calls"] += witness_run.oracle_calls

    if len(stripped.paths) <= 1:
        # A single nontrivial path (or none) is always realizable, so the
        # witness run is the whole decision and must have succeeded.
        if not witness_run.ok:
            raise CrossValidationError("witness refuted a trivially realizable system")
        stats["wall_ms"] = (time.monotonic() - t0) * 1000.0
        return Decision("strongly_metrizable", setting,
                        witness_graph=witness_run.graph, stats=stats)

    outcome = rigidity.rigidity_test(WeightedPathSystem.unit(stripped))
    stats["lp_pivots"] += outcome.lp_pivots
    if outcome.rigid != witness_run.ok:
        raise CrossValidationError(
            f"rigidity says {outcome.rigid}, witness says {witness_run.ok}")
    if outcome.rigid:
        stats["wall_ms"] = (time.monotonic() - t0) * 1000.0
        return Decision("strongly_metrizable", setting,
                        witness_graph=witness_run.graph, stats=stats)

    cert = rigidity.certificate(stripped, outcome)
    partner = None
    report = None
    if evidence_budget_ms is not None:
        try:
            partner = topology.find_gray_partner(stripped, max_len=6,
                                                 budget_ms=evidence_budget_ms)
        except ValueError:
            partner = None  # stripped system not in normal form; no evidence
    if partner is not None:
        cx = topology.build_complex(stripped, partner)
        report = topology.manifold_report(cx)
    stats["wall_ms"] = (time.monotonic() - t0) * 1000.0
    return Decision("not_strongly_metrizable", setting, certificate=cert,
                    partner=partner, manifold=report, stats=stats)


def extract_usp_system(g: graphalg.WeightedDigraph) -> PathSystem:
    """All-pairs unique shortest paths of a positive-weight graph.

    Pairs whose shortest path is tied are omitted; the result is
    realizable by construction (g itself realizes it).
    """
    paths = []
    for s in range(g.n()):
        for t in range(g.n()):
            if s == t:
                continue
            dist, path, unique = graphalg.shortest_path(g, s, t)
            if dist is not None and unique:
                paths.append(tuple(g.names[v] for v in path))
    return PathSystem.from_names(paths)


def rotate_and_decide(s: PathSystem, shifts: list[int],
                      check_preconditions: bool = True) -> tuple[bool, Decision]:
    """Apply per-path circular shifts and decide the shifted system.

    Requires an acyclic, realizable input (checked unless the caller
    already knows); returns the shifted system's consistency flag together
    with its full directed decision.  For realizable acyclic inputs, the
    decision is positive exactly when the shifted system is consistent.
    """
    if len(shifts) != len(s.paths):
        raise ValueError("one shift per path required")
    if check_preconditions:
        if not classify(s).acyclic:
            raise ValueError("input system must be acyclic")
        if not decide(s, "directed", evidence_budget_ms=None).is_sm:
            raise ValueError("input system must be realizable")
    shifted_paths = [circular_shift(p, j)
                     for p, j in zip(s.name_paths(), shifts)]
    shifted = PathSystem.from_names(shifted_paths)
    consistent = classify(shifted).consistent
    return consistent, decide(shifted, "directed", evidence_budget_ms=None)
