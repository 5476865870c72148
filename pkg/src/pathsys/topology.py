"""Pinwheels, flat nodes, polyhedral pairs, and glued cell complexes.

Every semisimple path through a node v has one corner there, with two
typed sides: the side toward the previous node and the side toward the
next one.  Interior nodes get plain edge sides; the first/last node of a
non-cycle path gets an "endpoint" side along the closing (marked) arc from
its last node back to its first.  Two systems are flat at v when all their
corners at v chain into one alternating cycle, colorful and gray cells
matching side for side; a pair of distinct normalized systems flat at
every node is polyhedral.

Gluing one cell per path along matching arcs turns a polyhedral pair into
a closed orientable surface; the manifold report checks that combinatorially
(one corner cycle per vertex, consistent orientation signs, Euler count,
balance of marked arcs and colors).
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from fractions import Fraction
from math import lcm

from pathsys.core import (
    PathSystem,
    WeightedPathSystem,
    boundary_by_names,
    classify,
    is_simple,
    is_simple_cycle,
)

ZERO = Fraction(0)
ONE = Fraction(1)

EDGE = "edge"
ENDPOINT = "ep"

Slot = tuple[str, str]  # (neighbor node, EDGE | ENDPOINT)
NamePath = tuple[str, ...]


def corner_slots(p: NamePath, v: str) -> tuple[Slot, Slot]:
    """(incoming side, outgoing side) of path p's corner at v.

    p must be a simple path or simple cycle containing v exactly once.
    """
    if is_simple_cycle(p):
        body = p[:-1]
        i = body.index(v)
        k = len(body)
        return (body[(i - 1) % k], EDGE), (body[(i + 1) % k], EDGE)
    if not is_simple(p):
        raise ValueError(f"path {p} is not semisimple")
    i = p.index(v)
    into = (p[i - 1], EDGE) if i > 0 else (p[-1], ENDPOINT)
    out = (p[i + 1], EDGE) if i < len(p) - 1 else (p[0], ENDPOINT)
    return into, out


@dataclass(frozen=True)
class Pinwheel:
    """Alternating cycle of colorful and gray paths around a center node.

    colorful[i] and gray[i] share the outgoing side toward out_nodes[i];
    gray[i] and colorful[i+1] (circularly) share the incoming side from
    in_nodes[i].  The out nodes are pairwise distinct, as are the in
    nodes, and neither family contains the center.
    """

    center: str
    colorful: tuple[NamePath, ...]
    gray: tuple[NamePath, ...]
    out_nodes: tuple[str, ...]
    in_nodes: tuple[str, ...]

    def size(self) -> int:
        return len(self.colorful)


def check_pinwheel(s1: PathSystem, s2: PathSystem, pw: Pinwheel) -> bool:
    """Literal check of the pinwheel conditions against two systems."""
    k = pw.size()
    if k == 0 or not (len(pw.gray) == len(pw.out_nodes) == len(pw.in_nodes) == k):
        return False
    p1 = set(s1.name_paths())
    p2 = set(s2.name_paths())
    v = pw.center
    if any(p not in p1 for p in pw.colorful) or any(p not in p2 for p in pw.gray):
        return False
    for i in range(k):
        w = pw.out_nodes[i]
        if not _share(pw.colorful[i], pw.gray[i], v, w, outgoing=True):
            return False
        u = pw.in_nodes[i]
        if not _share(pw.colorful[(i + 1) % k], pw.gray[i], v, u, outgoing=False):
            return False
    outs, ins = set(pw.out_nodes), set(pw.in_nodes)
    return (len(outs) == k and len(ins) == k and v not in outs and v not in ins)


def _share(pa: NamePath, pb: NamePath, v: str, n: str, outgoing: bool) -> bool:
    try:
        sa = corner_slots(pa, v)[1 if outgoing else 0]
        sb = corner_slots(pb, v)[1 if outgoing else 0]
    except ValueError:
        return False
    return sa == sb == (n, EDGE) or sa == sb == (n, ENDPOINT)


def cancel_at(s1: WeightedPathSystem, s2: WeightedPathSystem, v: str) -> bool:
    """True iff the two boundaries agree on every index touching v."""
    b1 = boundary_by_names(s1)
    b2 = boundary_by_names(s2)
    keys = {k for k in b1 if v in k} | {k for k in b2 if v in k}
    return all(b1.get(k, ZERO) == b2.get(k, ZERO) for k in keys)


def _paths_through(paths, v):
    return sorted(p for p in paths if v in p)


def find_pinwheel(s1: PathSystem, s2: PathSystem, v: str) -> Pinwheel | None:
    """Greedy alternating walk around v; closes at the first repeated side.

    Preconditions (checked): both systems nontrivial and skip-free, and
    their unit-weight boundaries cancel at v.  Returns None when no path
    of s1 goes through v, or when the closed walk fails the distinctness
    conditions (possible when a node carries both an edge side and an
    endpoint side).
    """
    for s in (s1, s2):
        flags = classify(s)
        if not (flags.nontrivial and flags.skip_free):
            raise ValueError("pinwheel search needs nontrivial skip-free systems")
    if not cancel_at(WeightedPathSystem.unit(s1), WeightedPathSystem.unit(s2), v):
        raise ValueError(f"systems do not cancel at {v!r}")
    return _greedy_pinwheel(s1.name_paths(), s2.name_paths(), v)


def _greedy_pinwheel(paths1, paths2, v) -> Pinwheel | None:
    colorful_pool = _paths_through(paths1, v)
    gray_pool = _paths_through(paths2, v)
    if not colorful_pool:
        return None
    C: list[NamePath] = [colorful_pool[0]]
    G: list[NamePath] = []
    W: list[Slot] = []
    U: list[Slot] = []
    while True:
        out = corner_slots(C[-1], v)[1]
        if out in W:
            i = W.index(out)
            j = len(W)
            pw = Pinwheel(
                center=v,
                colorful=tuple(C[i + 1:j + 1]),
                gray=tuple(G[i + 1:j] + [G[i]]),
                out_nodes=tuple(n for n, _ in W[i + 1:j] + [W[i]]),
                in_nodes=tuple(n for n, _ in U[i + 1:j] + [U[i]]),
            )
            return pw if _valid(pw) else None
        W.append(out)
        g = next((p for p in gray_pool if corner_slots(p, v)[1] == out), None)
        if g is None:
            raise RuntimeError("cancellation guarantees a matching gray side")
        G.append(g)
        into = corner_slots(g, v)[0]
        if into in U:
            i = U.index(into)
            j = len(U)
            pw = Pinwheel(
                center=v,
                colorful=tuple(C[i + 1:j + 1]),
                gray=tuple(G[i + 1:j + 1]),
                out_nodes=tuple(n for n, _ in W[i + 1:j + 1]),
                in_nodes=tuple(n for n, _ in (U[i + 1:j] + [U[i]])),
            )
            return pw if _valid(pw) else None
        U.append(into)
        nxt = next((p for p in colorful_pool if corner_slots(p, v)[0] == into), None)
        if nxt is None:
            raise RuntimeError("cancellation guarantees a matching colorful side")
        C.append(nxt)


def _valid(pw: Pinwheel) -> bool:
    k = pw.size()
    return (k > 0
            and len(set(pw.out_nodes)) == k and len(set(pw.in_nodes)) == k
            and pw.center not in set(pw.out_nodes) | set(pw.in_nodes))


def pinwheel_decomposition(s1: WeightedPathSystem, s2: WeightedPathSystem,
                           v: str) -> list[Pinwheel]:
    """Peel pinwheels at v until no path of s1 goes through it.

    Each path through v lands in exactly beta * weight pinwheels, where
    beta clears all denominators.  Preconditions: nontrivial, semisimple,
    skip-free, canceling at v.
    """
    for s in (s1, s2):
        flags = classify(s.system)
        if not (flags.nontrivial and flags.semisimple and flags.skip_free):
            raise ValueError("decomposition needs normalized systems")
    if not cancel_at(s1, s2, v):
        raise ValueError(f"systems do not cancel at {v!r}")
    denoms = [w.denominator for w in s1.weights + s2.weights]
    beta = lcm(*denoms) if denoms else 1
    unit = Fraction(1, beta)
    w1 = {p: w for p, w in s1.name_items()}
    w2 = {p: w for p, w in s2.name_items()}
    out: list[Pinwheel] = []
    while any(v in p for p in w1):
        pw = _greedy_pinwheel(sorted(w1), sorted(w2), v)
        if pw is None:
            raise RuntimeError(f"no valid pinwheel found at {v!r}")
        for side, wm in ((pw.colorful, w1), (pw.gray, w2)):
            for p in side:
                wm[p] -= unit
                if wm[p] < 0:
                    raise RuntimeError("pinwheel overuses a path")
                if not wm[p]:
                    del wm[p]
        out.append(pw)
    if any(v in p for p in w2):
        raise RuntimeError("gray side left over after colorful side emptied")
    return out


def _single_pinwheel(corners1: dict[NamePath, tuple[Slot, Slot]],
                     corners2: dict[NamePath, tuple[Slot, Slot]],
                     v: str) -> bool:
    """All corners chain into one alternating cycle with distinct nodes."""
    if not corners1 or len(corners1) != len(corners2):
        return False
    outs1 = [s for _, s in corners1.values()]
    outs2 = [s for _, s in corners2.values()]
    ins1 = [s for s, _ in corners1.values()]
    ins2 = [s for s, _ in corners2.values()]
    k = len(corners1)
    for slots in (outs1, outs2, ins1, ins2):
        if len({n for n, _ in slots}) != k or any(n == v for n, _ in slots):
            return False
    if sorted(outs1) != sorted(outs2) or sorted(ins1) != sorted(ins2):
        return False
    by_out2 = {s: p for p, (_, s) in corners2.items()}
    by_in1 = {s: p for p, (s, _) in corners1.items()}
    start = min(corners1)
    cur = start
    seen = 0
    while True:
        gray = by_out2[corners1[cur][1]]
        cur = by_in1[corners2[gray][0]]
        seen += 1
        if cur == start:
            break
    return seen == k


def is_flat(t1: PathSystem, t2: PathSystem, v: str) -> bool:
    """True iff all paths of both systems through v form one pinwheel."""
    try:
        c1 = {p: corner_slots(p, v) for p in _paths_through(t1.name_paths(), v)}
        c2 = {p: corner_slots(p, v) for p in _paths_through(t2.name_paths(), v)}
    except ValueError:
        return False  # a non-semisimple path through v
    return _single_pinwheel(c1, c2, v)


def _undirected_links(p: NamePath, v: str) -> tuple[Slot, Slot]:
    into, out = corner_slots(p, v)
    return tuple(sorted((into, out)))


def _flat_undirected(t1: PathSystem, t2: PathSystem, v: str) -> bool:
    """Relaxed flatness: side orientations are forgotten, and the shared
    in-family and out-family must additionally be disjoint, which here
    amounts to: all link nodes around v are distinct."""
    try:
        c1 = {p: _undirected_links(p, v) for p in _paths_through(t1.name_paths(), v)}
        c2 = {p: _undirected_links(p, v) for p in _paths_through(t2.name_paths(), v)}
    except ValueError:
        return False
    if not c1 or len(c1) != len(c2):
        return False
    links1 = [s for pair in c1.values() for s in pair]
    links2 = [s for pair in c2.values() for s in pair]
    if sorted(links1) != sorted(links2):
        return False
    nodes = [n for n, _ in links1]
    if len(set(nodes)) != len(nodes) or v in nodes:
        return False
    by_link2: dict[Slot, NamePath] = {}
    for p, pair in c2.items():
        for s in pair:
            by_link2[s] = p
    start = min(c1)
    cur, via = start, c1[start][1]
    seen = 0
    while True:
        gray = by_link2[via]
        a, b = c2[gray]
        via = a if b == via else b
        nxt = next(p for p, pair in c1.items() if via in pair)
        a, b = c1[nxt]
        via = a if b == via else b
        cur = nxt
        seen += 1
        if cur == start:
            break
    return seen == len(c1)


def first_non_flat_node(t1: PathSystem, t2: PathSystem,
                        setting: str = "directed") -> str | None:
    """First node (in name order) where the pair fails to be flat."""
    flat = is_flat if setting == "directed" else _flat_undirected
    return next((v for v in t1.names if not flat(t1, t2, v)), None)


def is_polyhedral_pair(t1: PathSystem, t2: PathSystem,
                       setting: str = "directed") -> bool:
    """Distinct normalized systems over one node set, flat everywhere."""
    if setting not in ("directed", "undirected"):
        raise ValueError(f"unknown setting {setting!r}")
    if t1.names != t2.names or t1.paths == t2.paths:
        return False
    for t in (t1, t2):
        flags = classify(t)
        if not (flags.nontrivial and flags.semisimple and flags.skip_free):
            return False
    flat = is_flat if setting == "directed" else _flat_undirected
    return all(flat(t1, t2, v) for v in t1.names)


def _arc_multiset(paths) -> dict[tuple[str, str], int]:
    arcs: dict[tuple[str, str], int] = {}
    for p in paths:
        for u, w in zip(p, p[1:]):
            arcs[(u, w)] = arcs.get((u, w), 0) + 1
    return arcs


def find_gray_partner(t: PathSystem, max_len: int = 6,
                      budget_ms: float | None = None) -> PathSystem | None:
    """Bounded exhaustive search for a partner making t polyhedral.

    In a polyhedral pair the partner must traverse exactly the arcs of t:
    each consecutive pair once, and one partner path per endpoint pair of
    t.  The search partitions t's arc multiset into one simple s~>t path
    per endpoint pair plus simple cycles, bounded by ``max_len`` nodes per
    path, and returns the first partition that verifies as a polyhedral
    pair.  Returns None when the bounded search is exhausted (never a
    wrong no) or the time budget runs out.
    """
    flags = classify(t)
    if not (flags.nontrivial and flags.semisimple and flags.skip_free):
        raise ValueError("partner search needs a normalized system")
    deadline = None if budget_ms is None else time.monotonic() + budget_ms / 1000.0
    arcs = _arc_multiset(t.name_paths())
    if any(c > 1 for c in arcs.values()):
        return None  # a doubled arc already rules out a partner
    endpoint_pairs = sorted({(p[0], p[-1]) for p in t.name_paths()
                             if p[0] != p[-1]})
    result: list[PathSystem] = []

    def timed_out():
        return deadline is not None and time.monotonic() > deadline

    def simple_walks(u, goal, avail, bound):
        """Simple u~>goal node sequences over arcs in avail, <= bound nodes.

        goal == u yields closed sequences (u, ..., u).  avail is read-only.
        """
        by_tail: dict[str, list[str]] = {}
        for a, b in sorted(avail):
            by_tail.setdefault(a, []).append(b)
        found: list[NamePath] = []
        walk = [u]

        def rec(x):
            if len(walk) >= bound:
                return
            for b in by_tail.get(x, ()):
                if b == goal and len(walk) >= 2 and len(walk) < bound:
                    found.append(tuple(walk) + (goal,))
                if b != goal and b != u and b not in walk:
                    walk.append(b)
                    rec(b)
                    walk.pop()

        rec(u)
        return found

    def assign(idx, avail, chosen):
        if timed_out() or result:
            return
        if idx == len(endpoint_pairs):
            cover_cycles(avail, chosen)
            return
        s0, t0 = endpoint_pairs[idx]
        for cand in simple_walks(s0, t0, avail, max_len):
            if result or timed_out():
                return
            if cand in chosen:
                continue
            used = set(zip(cand, cand[1:]))
            avail -= used
            assign(idx + 1, avail, chosen + [cand])
            avail |= used

    def cover_cycles(avail, chosen):
        if result or timed_out():
            return
        if not avail:
            finish(chosen)
            return
        u, w = min(avail)
        for cyc in simple_walks(u, u, avail, max_len):
            if result:
                return
            if cyc[1] != w or cyc in chosen:
                continue  # the least remaining arc must be covered first
            used = set(zip(cyc, cyc[1:]))
            avail -= used
            cover_cycles(avail, chosen + [cyc])
            avail |= used

    def finish(chosen):
        try:
            cand = PathSystem.from_names(chosen)
        except ValueError:
            return
        if cand.names != t.names or cand.paths == t.paths:
            return
        if len(cand.paths) != len(chosen):
            return  # duplicates collapsed
        if is_polyhedral_pair(t, cand, "directed"):
            result.append(cand)

    assign(0, set(arcs), [])
    return result[0] if result else None


@dataclass(frozen=True)
class Cell:
    path: NamePath
    color: str  # "colorful" | "gray"
    corners: tuple[str, ...]
    arcs: tuple[tuple[str, str, bool], ...]  # (u, v, marked); arc i runs corners[i] -> corners[i+1 mod k]


ArcRef = tuple[int, int]  # (cell index, arc index)


@dataclass(frozen=True)
class CellComplex:
    cells: tuple[Cell, ...]
    glues: tuple[tuple[ArcRef, ArcRef, bool], ...]  # (colorful occ, gray occ, reversed)

    def vertex_names(self) -> tuple[str, ...]:
        return tuple(sorted({v for c in self.cells for v in c.corners}))


def _make_cell(p: NamePath, color: str) -> Cell:
    if is_simple_cycle(p):
        body = p[:-1]
        arcs = tuple((body[i], body[(i + 1) % len(body)], False)
                     for i in range(len(body)))
        return Cell(p, color, body, arcs)
    if not is_simple(p) or len(p) < 2:
        raise ValueError(f"cannot build a cell for {p}")
    arcs = tuple((p[i], p[i + 1], False) for i in range(len(p) - 1))
    arcs += ((p[-1], p[0], True),)
    return Cell(p, color, p, arcs)


def build_complex(t1: PathSystem, t2: PathSystem,
                  setting: str = "directed") -> CellComplex:
    """One disc per path, glued along equal-name arcs, colorful to gray.

    Directed: a (u, v) arc glues only to a (u, v) arc, and occurrence
    counts must agree side by side for every ordered pair; a mismatch is
    reported with the offending pair.  Undirected: a (u, v) arc may also
    glue to a (v, u) arc, flagged as reversed; same-direction occurrences
    pair up first.  Gluing order is canonical, which is the unique choice
    for polyhedral pairs.
    """
    cells = tuple([_make_cell(p, "colorful") for p in t1.name_paths()]
                  + [_make_cell(p, "gray") for p in t2.name_paths()])
    occ: dict[tuple[str, str], dict[str, list[ArcRef]]] = {}
    for ci, cell in enumerate(cells):
        for ai, (u, v, _) in enumerate(cell.arcs):
            occ.setdefault((u, v), {"colorful": [], "gray": []})[cell.color].append((ci, ai))
    glues = []
    if setting == "directed":
        for pair in sorted(occ):
            colorful = occ[pair]["colorful"]
            gray = occ[pair]["gray"]
            if len(colorful) != len(gray):
                raise ValueError(f"arc multiplicity mismatch at {pair}")
            glues.extend((a, b, False) for a, b in zip(colorful, gray))
    elif setting == "undirected":
        for u, v in sorted(occ):
            if (v, u) in occ and (v, u) < (u, v):
                continue  # handled from the other direction
            fwd = occ.get((u, v), {"colorful": [], "gray": []})
            bwd = occ.get((v, u), {"colorful": [], "gray": []})
            n_colorful = len(fwd["colorful"]) + len(bwd["colorful"])
            if n_colorful != len(fwd["gray"]) + len(bwd["gray"]):
                raise ValueError(f"arc multiplicity mismatch at {(u, v)}")
            straight = min(len(fwd["colorful"]), len(fwd["gray"]))
            glues.extend((a, b, False) for a, b in
                         zip(fwd["colorful"][:straight], fwd["gray"][:straight]))
            glues.extend((a, b, False) for a, b in
                         zip(bwd["colorful"], bwd["gray"]))
            glues.extend((a, b, True) for a, b in
                         zip(fwd["colorful"][straight:], bwd["gray"][len(bwd["colorful"]):]))
            glues.extend((a, b, True) for a, b in
                         zip(bwd["colorful"][len(bwd["gray"]):], fwd["gray"][straight:]))
    else:
        raise ValueError(f"unknown setting {setting!r}")
    return CellComplex(cells, tuple(glues))


@dataclass(frozen=True)
class ManifoldReport:
    is_manifold: bool
    boundaryless: bool
    orientable: bool
    components: int
    vertices: int
    edges: int
    faces: int
    euler_characteristic: int
    genus: Fraction | None
    locally_balanced: bool
    globally_balanced: bool
    offending_vertices: tuple[str, ...] = ()
    degenerate_vertices: tuple[str, ...] = ()

    def as_dict(self) -> dict:
        genus = self.genus
        if genus is not None and genus.denominator == 1:
            genus = int(genus)
        return {
            "is_manifold": self.is_manifold,
            "boundaryless": self.boundaryless,
            "orientable": self.orientable,
            "components": self.components,
            "vertices": self.vertices,
            "edges": self.edges,
            "faces": self.faces,
            "euler_characteristic": self.euler_characteristic,
            "genus": str(genus) if genus is not None else None,
            "locally_balanced": self.locally_balanced,
            "globally_balanced": self.globally_balanced,
            "offending_vertices": list(self.offending_vertices),
            "degenerate_vertices": list(self.degenerate_vertices),
        }


class _UnionFind:
    def __init__(self):
        self.parent = {}

    def find(self, x):
        p = self.parent.setdefault(x, x)
        if p != x:
            p = self.parent[x] = self.find(p)
        return p

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[ra] = rb


def _glue_slot_links(cells, glues):
    """Pairs of (cell, corner, side) slots identified by each glue."""
    links = []
    for (ci, ai), (cj, aj), rev in glues:
        ki = len(cells[ci].corners)
        kj = len(cells[cj].corners)
        a_start = (ci, ai, "out")
        a_end = (ci, (ai + 1) % ki, "in")
        b_start = (cj, aj, "out")
        b_end = (cj, (aj + 1) % kj, "in")
        if rev:
            links.append((a_start, b_end))
            links.append((a_end, b_start))
        else:
            links.append((a_start, b_start))
            links.append((a_end, b_end))
    return links


def manifold_report(cx: CellComplex) -> ManifoldReport:
    """Combinatorial surface checks for a glued complex.

    Manifold: every glued pair joins equal-named endpoints, every arc
    occurrence is glued exactly once, and the corners at each vertex chain
    into a single cycle.  Orientation: colorful cells traverse their
    boundary forward and gray cells backward; gluing must let the signs
    2-color consistently.
    """
    cells = cx.cells
    offending: set[str] = set()
    glue_count: dict[ArcRef, int] = {}
    names_ok = True
    for (ci, ai), (cj, aj), rev in cx.glues:
        u1, v1, _ = cells[ci].arcs[ai]
        u2, v2, _ = cells[cj].arcs[aj]
        expect = (v2, u2) if rev else (u2, v2)
        if (u1, v1) != expect:
            names_ok = False
            offending.update({u1, v1, u2, v2})
        glue_count[(ci, ai)] = glue_count.get((ci, ai), 0) + 1
        glue_count[(cj, aj)] = glue_count.get((cj, aj), 0) + 1
    all_occ = [(ci, ai) for ci, c in enumerate(cells) for ai in range(len(c.arcs))]
    boundaryless = all(glue_count.get(o, 0) == 1 for o in all_occ)
    over_glued = any(glue_count.get(o, 0) > 1 for o in all_occ)

    # Vertex classes: same-named corners are one point, and glue endpoints
    # identify corner points across cells.
    uf = _UnionFind()
    by_name: dict[str, list] = {}
    for ci, c in enumerate(cells):
        for k, name in enumerate(c.corners):
            by_name.setdefault(name, []).append((ci, k))
    for grp in by_name.values():
        for other in grp[1:]:
            uf.union(grp[0], other)
    links = _glue_slot_links(cells, cx.glues)
    slot_link: dict = {}
    link_ok = True
    for a, b in links:
        for s in (a, b):
            if s in slot_link:
                link_ok = False
        slot_link[a] = b
        slot_link[b] = a
        uf.union(a[:2], b[:2])

    classes: dict = {}
    for ci, c in enumerate(cells):
        for k in range(len(c.corners)):
            classes.setdefault(uf.find((ci, k)), []).append((ci, k))
    class_names = {root: sorted({cells[ci].corners[k] for ci, k in members})
                   for root, members in classes.items()}
    for root, names in class_names.items():
        if len(names) > 1:
            names_ok = False
            offending.update(names)

    # Link test: the corners in each class, joined through their two slot
    # links, must form one closed cycle.
    single_cycles = True
    for root, members in classes.items():
        if not _corners_single_cycle(members, slot_link):
            single_cycles = False
            offending.update(class_names[root])

    vertices = len(classes)
    edges = len(cx.glues)
    faces = len(cells)
    euler = vertices - edges + faces

    comp = _UnionFind()
    for ci in range(len(cells)):
        comp.find(("cell", ci))
    for (ci, _), (cj, _), _rev in cx.glues:
        comp.union(("cell", ci), ("cell", cj))
    for members in classes.values():
        first = members[0][0]
        for ci, _ in members[1:]:
            comp.union(("cell", first), ("cell", ci))
    components = len({comp.find(("cell", ci)) for ci in range(len(cells))})

    orientable = _orientable(cells, cx.glues)

    is_manifold = (names_ok and boundaryless and not over_glued
                   and link_ok and single_cycles)
    genus = None
    if is_manifold and orientable:
        genus = Fraction(2 * components - euler, 2)
    marked_per_cell = [sum(1 for *_, m in c.arcs if m) for c in cells]
    locally = all(m <= 1 for m in marked_per_cell)
    colorful_count = sum(1 for c in cells if c.color == "colorful")
    globally = colorful_count * 2 == len(cells)
    degenerate = tuple(sorted(class_names[root][0] for root, members in classes.items()
                              if len(members) == 2 and len(class_names[root]) == 1))
    return ManifoldReport(
        is_manifold=is_manifold,
        boundaryless=boundaryless,
        orientable=orientable,
        components=components,
        vertices=vertices,
        edges=edges,
        faces=faces,
        euler_characteristic=euler,
        genus=genus,
        locally_balanced=locally,
        globally_balanced=globally,
        offending_vertices=tuple(sorted(offending)),
        degenerate_vertices=degenerate,
    )


def _corners_single_cycle(members, slot_link) -> bool:
    member_set = set(members)
    for ci, k in members:
        for side in ("in", "out"):
            peer = slot_link.get((ci, k, side))
            if peer is None or peer[:2] not in member_set:
                return False
    seen = set()
    cur = members[0]
    side = "out"
    while True:
        if cur in seen:
            return False
        seen.add(cur)
        peer = slot_link[(cur[0], cur[1], side)]
        cur = peer[:2]
        side = "out" if peer[2] == "in" else "in"
        if cur == members[0] and side == "out":
            break
    return len(seen) == len(members)


def _orientable(cells, glues) -> bool:
    sign: dict[int, int] = {}
    adj: dict[int, list[tuple[int, int]]] = {}
    for (ci, _), (cj, _), rev in glues:
        want = 1 if rev else -1  # reversed glue: same sign; direct: opposite
        adj.setdefault(ci, []).append((cj, want))
        adj.setdefault(cj, []).append((ci, want))
    for start in range(len(cells)):
        if start in sign:
            continue
        sign[start] = 1 if cells[start].color == "colorful" else -1
        stack = [start]
        while stack:
            a = stack.pop()
            for b, want in adj.get(a, ()):
                expected = sign[a] * want
                if b not in sign:
                    sign[b] = expected
                    stack.append(b)
                elif sign[b] != expected:
                    return False
    return True


def to_off(cx: CellComplex) -> str:
    """OFF export: vertices on a unit sphere spiral, face colors by side."""
    names = cx.vertex_names()
    idx = {n: i for i, n in enumerate(names)}
    nv = len(names)
    lines = ["OFF", f"# vertices: {', '.join(names)}",
             "# colorful faces carry distinct warm colors; gray faces are gray",
             f"{nv} {len(cx.cells)} {len(cx.glues)}"]
    golden = 2.399963229728653
    from math import cos, sin
    for i in range(nv):
        y = 1.0 - 2.0 * (i + 0.5) / max(nv, 1)
        r = (max(0.0, 1.0 - y * y)) ** 0.5
        theta = golden * i
        lines.append(f"{r * cos(theta):.6f} {y:.6f} {r * sin(theta):.6f}")
    palette = [(0.8, 0.2, 0.2), (0.9, 0.6, 0.1), (0.2, 0.6, 0.2),
               (0.2, 0.3, 0.8), (0.6, 0.2, 0.7), (0.8, 0.4, 0.0)]
    ci = 0
    for cell in cx.cells:
        ids = " ".join(str(idx[v]) for v in cell.corners)
        if cell.color == "gray":
            rgb = (0.55, 0.55, 0.55)
        else:
            rgb = palette[ci % len(palette)]
            ci += 1
        lines.append(f"{len(cell.corners)} {ids} {rgb[0]:.2f} {rgb[1]:.2f} {rgb[2]:.2f}")
    return "\n".join(lines) + "\n"
