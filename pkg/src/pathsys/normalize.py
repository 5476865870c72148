"""Boundary-preserving rewrites of weighted path systems.

Three rewrites, each leaving the system boundary untouched:

* nontrivial: drop every path with zero boundary;
* semisimple: split a path at a repeated node into a shorter path plus a
  cycle, until every path is a simple path or a simple cycle;
* skip-free: whenever one path's endpoint pair occurs consecutively inside
  another, splice the first into the second (moving min weight), until no
  endpoint pair occurs consecutively anywhere.

``normalize`` repeats the round (skip-free, then semisimple, then
nontrivial) until all three flags hold.  Weights stay on the grid
(1/beta)*Z for beta the lcm of the input denominators.
"""

from __future__ import annotations

from fractions import Fraction

from pathsys.core import (
    PathSystem,
    WeightedPathSystem,
    endpoints,
    is_simple,
    is_simple_cycle,
    is_trivial_path,
)

ZERO = Fraction(0)

# Iteration counters from the latest call of each rewrite, for termination
# instrumentation.
LAST_ITERATIONS = {"semisimple": 0, "skip_free": 0}


def _to_weight_map(ws: WeightedPathSystem) -> dict[tuple[str, ...], Fraction]:
    return {ws.system.path_names(p): w
            for p, w in zip(ws.system.paths, ws.weights)}


def _from_weight_map(wm: dict[tuple[str, ...], Fraction],
                     empty_ok: bool = True) -> WeightedPathSystem:
    wm = {p: w for p, w in wm.items() if w}
    if not wm and empty_ok:
        return WeightedPathSystem(PathSystem((), ()), ())
    return WeightedPathSystem.from_mapping(wm)


def nontrivial_mod(ws: WeightedPathSystem) -> WeightedPathSystem:
    """Delete every zero-boundary path; the boundary cannot change."""
    wm = {p: w for p, w in _to_weight_map(ws).items()
          if not is_trivial_path(p)}
    return _from_weight_map(wm)


def _split_point(p: tuple) -> tuple[int, int] | None:
    """First repeated occurrence pair (i, j), skipping the pure-cycle pair."""
    k = len(p)
    pos: dict = {}
    for j, v in enumerate(p):
        if v in pos and not (pos[v] == 0 and j == k - 1):
            return pos[v], j
        pos.setdefault(v, j)
    return None


def semisimple_mod(ws: WeightedPathSystem) -> WeightedPathSystem:
    """Split paths at repeated nodes until all are simple paths or cycles."""
    wm = _to_weight_map(ws)
    iterations = 0
    while True:
        target = next((p for p in sorted(wm)
                       if not (is_simple(p) or is_simple_cycle(p))), None)
        if target is None:
            break
        iterations += 1
        split = _split_point(target)
        assert split is not None
        i, j = split
        w = wm.pop(target)
        p1 = target[:i + 1] + target[j + 1:]
        p2 = (target[i],) + target[i + 1:j] + (target[i],)
        for piece in (p1, p2):
            wm[piece] = wm.get(piece, ZERO) + w
    LAST_ITERATIONS["semisimple"] = iterations
    return _from_weight_map(wm)


def skipfree_mod(ws: WeightedPathSystem) -> WeightedPathSystem:
    """Splice endpoint-skipping paths together until none skip.

    Node pairs are processed in canonical order; within a pair the
    lexicographically least (pi1, pi2) merges first.  Each merge moves
    w_min of weight onto a path of combined length, dropping the total
    weighted length by 2*w_min on a fixed rational grid, so the loop
    terminates.
    """
    wm = _to_weight_map(ws)
    iterations = 0
    while True:
        merge = _find_skip(wm)
        if merge is None:
            break
        iterations += 1
        p1, p2, cut = merge
        wmin = min(wm[p1], wm[p2])
        merged = p2[:cut] + p1 + p2[cut + 2:]
        for p in (p1, p2):
            w = wm[p] - wmin
            if w:
                wm[p] = w
            else:
                del wm[p]
        wm[merged] = wm.get(merged, ZERO) + wmin
    LAST_ITERATIONS["skip_free"] = iterations
    return _from_weight_map(wm)


def _find_skip(wm: dict[tuple, Fraction]):
    """Least (s, t), then least (pi1, pi2) with pi1: s~>t and (s, t) in pi2."""
    by_pair: dict[tuple, list] = {}
    for p in wm:
        by_pair.setdefault(endpoints(p), []).append(p)
    best = None
    for p2 in wm:
        for cut, pair in enumerate(zip(p2, p2[1:])):
            for p1 in by_pair.get(pair, ()):
                if p1 == p2:
                    continue
                cand = (pair, p1, p2, cut)
                if best is None or cand < best:
                    best = cand
    if best is None:
        return None
    _, p1, p2, cut = best
    return p1, p2, cut


def _flags_ok(ws: WeightedPathSystem) -> bool:
    from pathsys.core import classify
    flags = classify(ws.system)
    return flags.nontrivial and flags.semisimple and flags.skip_free


def normalize(ws: WeightedPathSystem) -> WeightedPathSystem:
    """Skip-free, then semisimple, then nontrivial, repeated to a fixpoint.

    One round does not always suffice: splitting a self-skipping path like
    (a,d,a,b,d) leaves (a,b,d) whose endpoint pair sits inside the sibling
    cycle (a,d,a), re-creating a skip.  Rounds terminate: merges preserve
    the grid quantity sum(w * max(len - 2, 0)) while splits strictly
    decrease it, and a split-free round is final or ends on a fixpoint.
    """
    out = nontrivial_mod(semisimple_mod(skipfree_mod(ws)))
    guard = 0
    while not _flags_ok(out):
        out = nontrivial_mod(semisimple_mod(skipfree_mod(out)))
        guard += 1
        if guard > 10_000:
            raise RuntimeError("normalization failed to reach a fixpoint")
    return out
