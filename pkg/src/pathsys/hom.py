"""Structure-preserving maps between path systems.

A homomorphism maps nodes and paths so that every path's image is a
(not-necessarily-continuous) subsequence of its assigned target path, and
branching survives: whenever two paths merge at a node through distinct
predecessors, their target paths must merge somewhere in the corresponding
windows (symmetrically for splits).  Such maps pull realizability
backwards: if the target has unique-shortest-path weights, distances along
the mapped nodes equip the source with verifying weights too.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from pathsys import graphalg
from pathsys.core import PathSystem, subsystem

NamePath = tuple[str, ...]


@dataclass(frozen=True)
class Homomorphism:
    source: PathSystem
    target: PathSystem
    phi: dict[str, str]              # node map
    rho: dict[NamePath, NamePath]    # path map

    def map_path(self, p: NamePath) -> NamePath:
        return tuple(self.phi[v] for v in p)


def _is_subsequence(small: NamePath, big: NamePath) -> bool:
    it = iter(big)
    return all(v in it for v in small)


def _occurrences(p: NamePath, v: str) -> list[int]:
    return [i for i, x in enumerate(p) if x == v]


def _merges(p1: NamePath, p2: NamePath):
    """(v, u1, u2) for every merge: distinct predecessors of a shared node."""
    out = []
    for i1 in range(1, len(p1)):
        for i2 in range(1, len(p2)):
            if p1[i1] == p2[i2] and p1[i1 - 1] != p2[i2 - 1]:
                out.append((p1[i1], p1[i1 - 1], p2[i2 - 1]))
    return out


def _merge_survives(q1: NamePath, q2: NamePath, a1: str, a2: str, b: str) -> bool:
    """Do q1, q2 merge on some x with a1 < x <= b in q1 and a2 < x <= b in q2?"""
    for j1 in range(1, len(q1)):
        for j2 in range(1, len(q2)):
            x = q1[j1]
            if x != q2[j2] or q1[j1 - 1] == q2[j2 - 1]:
                continue
            if not _window_ok(q1, j1, a1, b) or not _window_ok(q2, j2, a2, b):
                continue
            return True
    return False


def _window_ok(q: NamePath, j: int, a: str, b: str) -> bool:
    """Position j lies strictly after an occurrence of a and at or before b."""
    x = q[j]
    if x == a:
        return False
    if not any(q[i] == a for i in range(j)):
        return False
    if x == b:
        return True
    return any(q[i] == b for i in range(j + 1, len(q)))


def verify_hom(s1: PathSystem, s2: PathSystem, h: Homomorphism) -> bool:
    """Check totality, the subsequence condition, and branching survival."""
    paths1 = s1.name_paths()
    paths2 = set(s2.name_paths())
    if set(h.phi) != set(s1.names) or not set(h.phi.values()) <= set(s2.names):
        raise ValueError("node map must be total from source to target nodes")
    if set(h.rho) != set(paths1) or not set(h.rho.values()) <= paths2:
        raise ValueError("path map must be total from source to target paths")
    for p in paths1:
        if not _is_subsequence(h.map_path(p), h.rho[p]):
            return False
    for p1 in paths1:
        for p2 in paths1:
            for v, u1, u2 in _merges(p1, p2):
                if not _merge_survives(h.rho[p1], h.rho[p2],
                                       h.phi[u1], h.phi[u2], h.phi[v]):
                    return False
            rev1, rev2 = p1[::-1], p2[::-1]
            for v, w1, w2 in _merges(rev1, rev2):
                if not _merge_survives(h.rho[p1][::-1], h.rho[p2][::-1],
                                       h.phi[w1], h.phi[w2], h.phi[v]):
                    return False
    return True


def search_hom(s1: PathSystem, s2: PathSystem,
               node_budget: int = 10) -> Homomorphism | None:
    """Exhaustive backtracking search for any homomorphism s1 -> s2.

    Node maps are enumerated in canonical order with subsequence pruning
    on partial assignments; for each full node map, path images are chosen
    among the target paths containing the mapped path.  Exceeding the node
    budget raises, never silently returns None.
    """
    if len(s1.names) > node_budget or len(s2.names) > node_budget:
        raise ValueError(f"system exceeds the {node_budget}-node search budget")
    paths1 = s1.name_paths()
    paths2 = s2.name_paths()
    names1 = s1.names
    phi: dict[str, str] = {}

    def partial_ok() -> bool:
        for p in paths1:
            if not all(v in phi for v in p):
                # prune on the mapped prefix of nodes that are assigned
                proj = tuple(phi[v] for v in p if v in phi)
                if proj and not any(_is_subsequence(proj, q) for q in paths2):
                    return False
                continue
            img = tuple(phi[v] for v in p)
            if not any(_is_subsequence(img, q) for q in paths2):
                return False
        return True

    def assign(k: int) -> Homomorphism | None:
        if k == len(names1):
            return pick_rho()
        v = names1[k]
        for cand in s2.names:
            phi[v] = cand
            if partial_ok():
                found = assign(k + 1)
                if found is not None:
                    return found
            del phi[v]
        return None

    def pick_rho() -> Homomorphism | None:
        options = []
        for p in paths1:
            img = tuple(phi[v] for v in p)
            cands = [q for q in paths2 if _is_subsequence(img, q)]
            if not cands:
                return None
            options.append(cands)
        rho: dict[NamePath, NamePath] = {}

        def choose(i: int) -> Homomorphism | None:
            if i == len(paths1):
                h = Homomorphism(s1, s2, dict(phi), dict(rho))
                return h if verify_hom(s1, s2, h) else None
            for q in options[i]:
                rho[paths1[i]] = q
                found = choose(i + 1)
                if found is not None:
                    return found
            del rho[paths1[i]]
            return None

        return choose(0)

    return assign(0)


def compose(h12: Homomorphism, h23: Homomorphism) -> Homomorphism:
    """(phi, rho) composed pointwise; domains must line up."""
    if h12.target != h23.source:
        raise ValueError("codomain of the first map must be the second's domain")
    phi = {v: h23.phi[h12.phi[v]] for v in h12.phi}
    rho = {p: h23.rho[h12.rho[p]] for p in h12.rho}
    return Homomorphism(h12.source, h23.target, phi, rho)


def subsystem_hom(sub: PathSystem, sup: PathSystem,
                  drop_nodes: set[str] = frozenset(),
                  drop_paths: set[NamePath] = frozenset()) -> Homomorphism:
    """Identity embedding of a recorded-deletion subsystem into its parent.

    The record (deleted nodes, deleted paths) must reproduce ``sub`` from
    ``sup``; each surviving path maps to its least originating parent path.
    """
    rebuilt = subsystem(sup, drop_nodes, drop_paths)
    if rebuilt != sub:
        raise ValueError("deletion record does not produce the given subsystem")
    dropped = {tuple(p) for p in drop_paths}
    origin: dict[NamePath, NamePath] = {}
    for parent in sup.name_paths():
        if parent in dropped:
            continue
        image = tuple(v for v in parent if v not in drop_nodes)
        origin.setdefault(image, parent)
    phi = {v: v for v in sub.names}
    rho = {p: origin[p] for p in sub.name_paths()}
    h = Homomorphism(sub, sup, phi, rho)
    if not verify_hom(sub, sup, h):
        raise RuntimeError("subsystem embedding failed to verify")
    return h


def transfer_weights(s1: PathSystem, s2: PathSystem, h: Homomorphism,
                     g2: graphalg.WeightedDigraph) -> graphalg.WeightedDigraph:
    """Pull witness weights back along a homomorphism.

    Each source edge (u, v) gets the target distance between the mapped
    nodes.  Requires g2 to verify s2 and h to verify; the output then
    realizes s1.
    """
    from pathsys.witness import verify_witness

    if not verify_hom(s1, s2, h):
        raise ValueError("map does not verify as a homomorphism")
    if not verify_witness(s2, g2):
        raise ValueError("graph does not realize the target system")
    gidx = {n: i for i, n in enumerate(g2.names)}
    dist_cache: dict[int, list] = {}
    edges = {}
    for p in s1.name_paths():
        for u, v in zip(p, p[1:]):
            a, b = gidx[h.phi[u]], gidx[h.phi[v]]
            if a not in dist_cache:
                dist_cache[a] = graphalg.dijkstra(g2, a)
            d = dist_cache[a][b]
            assert d is not None, "images of adjacent nodes are connected"
            edges[(u, v)] = Fraction(d)
    g1 = graphalg.WeightedDigraph.from_named_edges(
        [(u, v, w) for (u, v), w in edges.items()])
    if not verify_witness(s1, g1):
        raise RuntimeError("transferred weights failed to verify")
    return g1
