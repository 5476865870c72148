"""Constructive side: find edge weights making every path uniquely shortest.

Weights live on exactly the consecutive pairs of the system (extra edges
could only create competitors) and are bounded below by 1, which keeps all
cycles strictly positive; strict "shorter than any alternative" rows are
closed up to a margin (scaling any strict solution achieves margin 1, so
nothing is lost).  Rows are generated lazily: solve, ask a second-shortest
oracle for violated alternatives, add them, repeat.  Each (path,
alternative) row enters at most once and alternatives are finitely many,
so the loop terminates, ending in verified weights or an infeasible pool.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from pathsys import exactlp, graphalg
from pathsys.core import PathSystem, classify, endpoints

ZERO = Fraction(0)
ONE = Fraction(1)


@dataclass
class WitnessResult:
    ok: bool
    graph: graphalg.WeightedDigraph | None = None
    violated: list[tuple[tuple[int, ...], tuple[int, ...]]] = field(default_factory=list)
    lp_pivots: int = 0
    oracle_calls: int = 0


def system_edges(s: PathSystem) -> list[tuple[int, int]]:
    return sorted({(u, v) for p in s.paths for u, v in zip(p, p[1:]) if u != v})


def _graph(s: PathSystem, edges, point) -> graphalg.WeightedDigraph:
    return graphalg.WeightedDigraph.from_weights(
        s.names, {e: point[j] for j, e in enumerate(edges)})


def witness_weights(s: PathSystem, margin: Fraction = ONE) -> WitnessResult:
    """Cutting-plane search for unique-shortest-path weights.

    Requires a consistent system.  Returns weights (>= 1 on every system
    edge) with every path verified uniquely shortest, or the infeasible
    row pool when no weights can exist.
    """
    if margin <= 0:
        raise ValueError("margin must be positive")
    if not classify(s).consistent:
        raise ValueError("witness search requires a consistent system")
    edges = system_edges(s)
    eidx = {e: j for j, e in enumerate(edges)}
    rows: list[exactlp.Constraint] = []
    pool: dict[tuple, tuple] = {}
    pivots = 0
    oracle_calls = 0
    check_paths = [p for p in s.paths if len(p) > 1]
    while True:
        lp = exactlp.LinearProgram(
            num_vars=len(edges),
            rows=list(rows),
            objective={j: ONE for j in range(len(edges))},
            maximize=False,
            bounds=[(ONE, None)] * len(edges),
        )
        out = exactlp.solve(lp)
        pivots += out.pivots
        if out.status == "infeasible":
            return WitnessResult(False, violated=sorted(pool),
                                 lp_pivots=pivots, oracle_calls=oracle_calls)
        assert out.status == "optimal"
        g = _graph(s, edges, out.point)
        new_rows = []
        for p in check_paths:
            st, tt = endpoints(p)
            oracle_calls += 1
            alt = graphalg.second_shortest_simple(g, st, tt, p)
            if alt is None:
                continue
            alt_len, alt_path = alt
            if alt_len > g.path_length(p):
                continue
            key = (p, alt_path)
            assert key not in pool, "a satisfied row cannot re-violate"
            pool[key] = key
            coeffs: dict[int, Fraction] = {}
            for u, v in zip(alt_path, alt_path[1:]):
                coeffs[eidx[(u, v)]] = coeffs.get(eidx[(u, v)], ZERO) + ONE
            for u, v in zip(p, p[1:]):
                coeffs[eidx[(u, v)]] = coeffs.get(eidx[(u, v)], ZERO) - ONE
            coeffs = {j: c for j, c in coeffs.items() if c}
            new_rows.append(exactlp.Constraint(coeffs, ">=", margin))
        if not new_rows:
            assert verify_witness(s, g), "clean sweep must verify"
            return WitnessResult(True, graph=g, lp_pivots=pivots,
                                 oracle_calls=oracle_calls)
        rows.extend(new_rows)


def witness_failures(s: PathSystem, g: graphalg.WeightedDigraph) -> list[str]:
    """Human-readable reasons why g fails to realize s (empty = success)."""
    problems = []
    gidx = {n: i for i, n in enumerate(g.names)}
    for p in s.paths:
        names = s.path_names(p)
        if any(n not in gidx for n in names):
            problems.append(f"path {names}: node missing from the graph")
            continue
        gp = tuple(gidx[n] for n in names)
        try:
            plen = g.path_length(gp)
        except KeyError as exc:
            problems.append(f"path {names}: {exc.args[0]}")
            continue
        if len(gp) == 1:
            continue
        dist, _, unique = graphalg.shortest_path(g, gp[0], gp[-1])
        if dist != plen:
            problems.append(f"path {names}: length {plen} but distance {dist}")
        elif not unique:
            problems.append(f"path {names}: shortest but not unique")
    return problems


def verify_witness(s: PathSystem, g: graphalg.WeightedDigraph) -> bool:
    """True iff every system path is the unique shortest path in g."""
    return not witness_failures(s, g)
