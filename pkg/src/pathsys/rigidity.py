"""Flow algebra over ordered node pairs and the multiflow uniqueness test.

The canonical multiflow of a weighted path system routes, for each path,
its weight along its own consecutive pairs.  The system is realizable as
unique shortest paths (for two or more paths) exactly when no distinct
multiflow preserves every per-path boundary and the edgewise total; we
call that property rigidity and decide it exactly:

1. kernel test: restrict the equality system (per-path conservation plus
   edgewise totals) to the coordinates the canonical multiflow uses; a
   nontrivial null space gives a two-sided escape direction;
2. one LP: maximize the total mass placed on unused coordinates over
   directions d with A d = 0, 0 <= d <= 1 off the support and
   -B <= d <= B on it.  A positive optimum gives a one-sided escape.

The LP starts from the basis formed by the support columns (independent
whenever step 1 found nothing), so no phase-1 run is ever needed.

Failures of rigidity are turned into certificates: path/cycle-decompose
the escaping multiflow, collect the pieces into a weighted system, and
normalize.  The result shares the input's boundary, differs from it, and
is nontrivial, semisimple and skip-free.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from pathsys import exactlp
from pathsys.core import (
    Pair,
    PairVec,
    PathSystem,
    WeightedPathSystem,
    boundary_by_names,
    boundary_edges,
    endpoints,
    vec_add_scaled,
)
from pathsys.normalize import normalize

ZERO = Fraction(0)
ONE = Fraction(1)


@dataclass(frozen=True)
class Flow:
    """Nonnegative pair vector whose node boundary is value * (-s + t)."""

    values: dict[Pair, Fraction]
    source: int
    target: int
    value: Fraction

    def __post_init__(self):
        if any(w < 0 for w in self.values.values()):
            raise ValueError("flow values must be nonnegative")
        expect = {}
        if self.source != self.target and self.value:
            expect = {self.source: -self.value, self.target: self.value}
        if boundary_edges(self.values) != expect:
            raise ValueError("boundary does not match declared endpoints/value")


@dataclass(frozen=True)
class Multiflow:
    """One flow per path of a system, in the system's canonical path order."""

    flows: tuple[Flow, ...]

    def edge_total(self) -> PairVec:
        out: PairVec = {}
        for f in self.flows:
            vec_add_scaled(out, f.values, ONE)
        return out


@dataclass(frozen=True)
class RigidityOutcome:
    rigid: bool
    witness: Multiflow | None = None      # distinct multiflow, when non-rigid
    direction: dict[tuple[int, Pair], Fraction] | None = None
    epsilon: Fraction | None = None
    lp_pivots: int = 0


def canonical_multiflow(ws: WeightedPathSystem) -> Multiflow:
    """Each path's weight pushed along its own consecutive pairs."""
    flows = []
    for p, w in zip(ws.system.paths, ws.weights):
        vals: PairVec = {}
        for u, v in zip(p, p[1:]):
            if u != v:
                vals[(u, v)] = vals.get((u, v), ZERO) + w
        s, t = endpoints(p)
        flows.append(Flow(vals, s, t, w if s != t else ZERO))
    return Multiflow(tuple(flows))


def _find_cycle_in_support(support: set[Pair]) -> tuple[int, ...] | None:
    """A simple cycle (v0, ..., v0) inside the edge set, or None."""
    succ: dict[int, list[int]] = {}
    for u, v in support:
        succ.setdefault(u, []).append(v)
    for lst in succ.values():
        lst.sort()
    state: dict[int, int] = {}
    stack: list[int] = []

    def dfs(u):
        state[u] = 1
        stack.append(u)
        for v in succ.get(u, ()):
            if state.get(v) == 1:
                i = stack.index(v)
                return tuple(stack[i:]) + (v,)
            if state.get(v) is None:
                found = dfs(v)
                if found:
                    return found
        stack.pop()
        state[u] = 2
        return None

    for u in sorted(succ):
        if state.get(u) is None:
            found = dfs(u)
            if found:
                return found
    return None


def _canon_cycle(c: tuple[int, ...]) -> tuple[int, ...]:
    """Rotate a closed sequence (v0..v0) to start at its least node."""
    body = c[:-1]
    k = body.index(min(body))
    body = body[k:] + body[:k]
    return body + (body[0],)


def acyclic_decompose(f: Flow):
    """Split f into an acyclic flow plus boundary of cycle weights.

    Returns (acyclic Flow, {cycle: weight}); cycles are closed tuples
    starting at their least node.  Integrality is preserved.
    """
    vals = dict(f.values)
    cycles: dict[tuple[int, ...], Fraction] = {}
    while True:
        cyc = _find_cycle_in_support(set(vals))
        if cyc is None:
            break
        pairs = list(zip(cyc, cyc[1:]))
        ell = min(vals[e] for e in pairs)
        for e in pairs:
            rest = vals[e] - ell
            if rest:
                vals[e] = rest
            else:
                del vals[e]
        key = _canon_cycle(cyc)
        cycles[key] = cycles.get(key, ZERO) + ell
    return Flow(vals, f.source, f.target, f.value), cycles


def cycle_decompose(values: PairVec) -> dict[tuple[int, ...], Fraction]:
    """Write a boundaryless nonnegative pair vector as cycle weights."""
    if any(w < 0 for w in values.values()):
        raise ValueError("vector must be nonnegative")
    if boundary_edges(values):
        raise ValueError("vector has nonzero boundary")
    anon = Flow(dict(values), 0, 0, ZERO) if values else Flow({}, 0, 0, ZERO)
    acyc, cycles = acyclic_decompose(anon)
    assert not acyc.values, "boundaryless acyclic flow must vanish"
    return cycles


def path_decompose(f: Flow):
    """Write f as cycles plus simple source~>target paths.

    Returns (cycle weights x, path weights p) with
    boundary(x + p) + value * (source, target) = f  and  sum(p) = value.
    """
    acyc, cycles = acyclic_decompose(f)
    if not f.value:
        assert not acyc.values
        return cycles, {}
    s, t = f.source, f.target
    closed = dict(acyc.values)
    closed[(t, s)] = closed.get((t, s), ZERO) + f.value
    paths: dict[tuple[int, ...], Fraction] = {}
    for cyc, w in cycle_decompose(closed).items():
        idx = next((i for i, e in enumerate(zip(cyc, cyc[1:])) if e == (t, s)),
                   None)
        if idx is None:
            cycles[cyc] = cycles.get(cyc, ZERO) + w
            continue
        body = cyc[:-1]
        k = len(body)
        rot = tuple(body[(idx + 1 + d) % k] for d in range(k))
        paths[rot] = paths.get(rot, ZERO) + w
    assert sum(paths.values(), ZERO) == f.value
    return cycles, paths


def _edge_list(system: PathSystem) -> list[Pair]:
    return sorted({(u, v) for p in system.paths for u, v in zip(p, p[1:])
                   if u != v})


def _equality_rows(ws: WeightedPathSystem, edges: list[Pair]):
    """Conservation rows per (path, node) and total-load rows per edge.

    Variables are (path index, edge index) -> i * m + e.  Empty rows are
    dropped.  Returns (rows, rhs).
    """
    system = ws.system
    m = len(edges)
    rows: list[dict[int, Fraction]] = []
    rhs: list[Fraction] = []
    for i, (p, w) in enumerate(zip(system.paths, ws.weights)):
        s, t = endpoints(p)
        for v in range(len(system.names)):
            coeffs: dict[int, Fraction] = {}
            for j, (a, b) in enumerate(edges):
                if b == v:
                    coeffs[i * m + j] = coeffs.get(i * m + j, ZERO) + ONE
                if a == v:
                    coeffs[i * m + j] = coeffs.get(i * m + j, ZERO) - ONE
            coeffs = {k: c for k, c in coeffs.items() if c}
            target = ZERO
            if s != t:
                target = -w if v == s else (w if v == t else ZERO)
            if coeffs or target:
                rows.append(coeffs)
                rhs.append(target)
    totals = canonical_multiflow(ws).edge_total()
    for j, e in enumerate(edges):
        coeffs = {i * m + j: ONE for i in range(len(system.paths))}
        rows.append(coeffs)
        rhs.append(totals.get(e, ZERO))
    return rows, rhs


def _coord_vector(ws: WeightedPathSystem, edges: list[Pair]) -> dict[int, Fraction]:
    m = len(edges)
    eidx = {e: i for i, e in enumerate(edges)}
    x0: dict[int, Fraction] = {}
    for i, f in enumerate(canonical_multiflow(ws).flows):
        for e, w in f.values.items():
            x0[i * m + eidx[e]] = w
    return x0


def _multiflow_from_coords(ws: WeightedPathSystem, edges: list[Pair],
                           x: dict[int, Fraction]) -> Multiflow:
    m = len(edges)
    flows = []
    for i, p in enumerate(ws.system.paths):
        vals = {edges[j]: x[i * m + j]
                for j in range(m) if x.get(i * m + j)}
        s, t = endpoints(p)
        w = ws.weights[i]
        flows.append(Flow(vals, s, t, w if s != t else ZERO))
    return Multiflow(tuple(flows))


def rigidity_test(ws: WeightedPathSystem) -> RigidityOutcome:
    """Decide whether the canonical multiflow is alone in its polytope.

    The polytope: per-path conservation with the canonical boundaries,
    edgewise totals equal to the canonical load, all coordinates >= 0.
    Callers must special-case systems with fewer than two paths.
    """
    system = ws.system
    if len(system.paths) < 2:
        raise ValueError("rigidity is decided only for two or more paths")
    edges = _edge_list(system)
    m = len(edges)
    ncoords = m * len(system.paths)
    rows, rhs = _equality_rows(ws, edges)
    x0 = _coord_vector(ws, edges)
    support = sorted(x0)
    sidx = {c: i for i, c in enumerate(support)}

    restricted = []
    for row in rows:
        r = {sidx[c]: v for c, v in row.items() if c in sidx}
        if r:
            restricted.append(r)
    kern = exactlp.kernel_basis(restricted, len(support))
    if kern:
        d = {support[i]: v for i, v in enumerate(kern[0]) if v}
        return _nonrigid(ws, edges, x0, d, lp_pivots=0)

    # Support columns are independent; warm-start the direction LP there.
    big = ONE + sum(x0.values(), ZERO)
    lo = [ZERO] * ncoords
    up: list[Fraction | None] = [ONE] * ncoords
    for c in support:
        lo[c] = -big
        up[c] = big
    objective = {c: ONE for c in range(ncoords) if c not in sidx}
    outcome = exactlp.optimize_from_basis(rows, [ZERO] * len(rows), lo, up,
                                          objective, support)
    assert outcome.status == "optimal"
    if outcome.value > 0:
        d = {c: v for c, v in enumerate(outcome.point) if v}
        return _nonrigid(ws, edges, x0, d, lp_pivots=outcome.pivots)
    return RigidityOutcome(rigid=True, lp_pivots=outcome.pivots)


def _nonrigid(ws, edges, x0, d, lp_pivots) -> RigidityOutcome:
    negatives = [x0[c] / -v for c, v in d.items() if v < 0]
    assert negatives, "an escape direction always has a negative entry"
    eps = min(ONE, min(negatives))
    x = dict(x0)
    for c, v in d.items():
        s = x.get(c, ZERO) + eps * v
        if s:
            x[c] = s
        else:
            x.pop(c, None)
    witness = _multiflow_from_coords(ws, edges, x)
    _check_witness(ws, witness)
    named = {(i, e): v for (i, e), v in
             (((c // len(edges), edges[c % len(edges)]), v)
              for c, v in d.items())}
    return RigidityOutcome(False, witness, named, eps, lp_pivots)


def _check_witness(ws: WeightedPathSystem, witness: Multiflow):
    """Exact re-verification of a non-rigidity witness; failure is a bug."""
    base = canonical_multiflow(ws)
    if witness == base:
        raise RuntimeError("witness equals the canonical multiflow")
    for f, g in zip(base.flows, witness.flows):
        if boundary_edges(f.values) != boundary_edges(g.values):
            raise RuntimeError("witness breaks a per-path boundary")
        if any(v < 0 for v in g.values.values()):
            raise RuntimeError("witness has a negative entry")
    if base.edge_total() != witness.edge_total():
        raise RuntimeError("witness changes an edge total")


def certificate(s: PathSystem, outcome: RigidityOutcome) -> WeightedPathSystem:
    """Distinct normalized weighted system with the same boundary as s.

    Decompose each escaping flow into cycles and simple paths, pool the
    pieces, and normalize.  For consistent inputs the result provably
    differs from s; the check is still enforced and a violation raises.
    """
    if outcome.rigid or outcome.witness is None:
        raise ValueError("certificate requires a non-rigid outcome")
    pieces: dict[tuple[int, ...], Fraction] = {}
    for f in outcome.witness.flows:
        cycles, paths = path_decompose(f)
        for c, w in cycles.items():
            pieces[c] = pieces.get(c, ZERO) + w
        for p, w in paths.items():
            pieces[p] = pieces.get(p, ZERO) + w
    named = {tuple(s.names[v] for v in p): w for p, w in pieces.items() if w}
    raw = WeightedPathSystem.from_mapping(named) if named else \
        WeightedPathSystem(PathSystem((), ()), ())
    cert = normalize(raw)
    base = WeightedPathSystem.unit(s)
    if boundary_by_names(cert) != boundary_by_names(base):
        raise RuntimeError("certificate boundary mismatch")
    if cert.name_items() == base.name_items():
        raise RuntimeError("certificate equals the input system")
    return cert
