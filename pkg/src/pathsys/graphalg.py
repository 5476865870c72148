"""Exact-weight graph algorithms for witness checking and reductions.

Graphs are directed with rational weights.  Shortest-path queries require
positive weights (Dijkstra); uniqueness is decided by counting paths in
the tight-edge graph, which is acyclic whenever weights are positive, so
big-integer path counts are exact.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

ZERO = Fraction(0)


@dataclass(frozen=True)
class WeightedDigraph:
    """Directed graph on named nodes with rational edge weights, no loops."""

    names: tuple[str, ...]
    edges: dict[tuple[int, int], Fraction]
    out_adj: tuple[tuple[tuple[int, Fraction], ...], ...] = field(compare=False)
    in_adj: tuple[tuple[tuple[int, Fraction], ...], ...] = field(compare=False)

    @classmethod
    def from_weights(cls, names: Sequence[str],
                     edges: dict[tuple[int, int], Fraction]) -> "WeightedDigraph":
        names = tuple(names)
        n = len(names)
        for (u, v) in edges:
            if u == v:
                raise ValueError("self-loops are not allowed")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError("edge endpoint out of range")
        edges = {e: Fraction(w) for e, w in sorted(edges.items())}
        out = [[] for _ in range(n)]
        inc = [[] for _ in range(n)]
        for (u, v), w in edges.items():
            out[u].append((v, w))
            inc[v].append((u, w))
        return cls(names, edges,
                   tuple(tuple(a) for a in out), tuple(tuple(a) for a in inc))

    @classmethod
    def from_named_edges(cls, triples: Iterable[tuple[str, str, Fraction]]) -> "WeightedDigraph":
        triples = list(triples)
        names = sorted({x for u, v, _ in triples for x in (u, v)})
        idx = {x: i for i, x in enumerate(names)}
        return cls.from_weights(names, {(idx[u], idx[v]): Fraction(w)
                                        for u, v, w in triples})

    def n(self) -> int:
        return len(self.names)

    def reweighted(self, edges: dict[tuple[int, int], Fraction]) -> "WeightedDigraph":
        return WeightedDigraph.from_weights(self.names, edges)

    def path_length(self, path: Sequence[int]) -> Fraction:
        total = ZERO
        for u, v in zip(path, path[1:]):
            if (u, v) not in self.edges:
                raise KeyError(f"missing edge ({self.names[u]}, {self.names[v]})")
            total += self.edges[(u, v)]
        return total


def _require_positive(g: WeightedDigraph):
    if any(w <= 0 for w in g.edges.values()):
        raise ValueError("this operation requires strictly positive weights")


def dijkstra(g: WeightedDigraph, s: int) -> list[Fraction | None]:
    """Distances from s; None marks unreachable nodes.  Weights must be > 0."""
    _require_positive(g)
    dist: list[Fraction | None] = [None] * g.n()
    dist[s] = ZERO
    heap = [(ZERO, s)]
    done = [False] * g.n()
    while heap:
        d, u = heapq.heappop(heap)
        if done[u]:
            continue
        done[u] = True
        for v, w in g.out_adj[u]:
            nd = d + w
            if dist[v] is None or nd < dist[v]:
                dist[v] = nd
                heapq.heappush(heap, (nd, v))
    return dist


def _tight_path_counts(g: WeightedDigraph, dist: Sequence[Fraction | None]):
    """Path counts from the Dijkstra source in the tight-edge graph.

    Tight edges strictly increase dist under positive weights, so counting
    in dist order is exact.
    """
    order = sorted((i for i in range(g.n()) if dist[i] is not None),
                   key=lambda i: (dist[i], i))
    count = {i: 0 for i in order}
    src = order[0]
    count[src] = 1
    for u in order:
        for v, w in g.out_adj[u]:
            if dist[v] is not None and dist[u] + w == dist[v]:
                count[v] += count[u]
    return count


def shortest_path(g: WeightedDigraph, s: int, t: int):
    """Returns (distance, path, unique); (None, None, False) if unreachable.

    ``unique`` is true iff exactly one s~>t path attains the distance,
    decided by big-integer path counting over tight edges.
    """
    dist = dijkstra(g, s)
    if dist[t] is None:
        return None, None, False
    path = [t]
    while path[-1] != s:
        v = path[-1]
        u = min(u for u, w in g.in_adj[v]
                if dist[u] is not None and dist[u] + w == dist[v])
        path.append(u)
    path.reverse()
    counts = _tight_path_counts(g, dist)
    return dist[t], tuple(path), counts[t] == 1


def second_shortest_simple(g: WeightedDigraph, s: int, t: int,
                           baseline: Sequence[int]):
    """Shortest simple s~>t path distinct from ``baseline``, or None.

    Deviation search: for each prefix of the baseline, ban the next
    baseline edge and the earlier prefix nodes, then run Dijkstra from the
    deviation point.  Positive weights keep every returned path simple.
    """
    _require_positive(g)
    baseline = tuple(baseline)
    if not baseline or baseline[0] != s or baseline[-1] != t:
        raise ValueError("baseline must be an s~>t path")
    g.path_length(baseline)  # raises if the baseline is not in g
    best = None
    for i in range(len(baseline) - 1):
        root = baseline[:i + 1]
        banned_nodes = set(root[:-1])
        banned_edge = (baseline[i], baseline[i + 1])
        spur = _dijkstra_restricted(g, root[-1], t, banned_nodes, banned_edge)
        if spur is None:
            continue
        d, tail = spur
        cand_path = root[:-1] + tail
        cand = (g.path_length(cand_path), cand_path)
        if best is None or cand < best:
            best = cand
    return best


def _dijkstra_restricted(g: WeightedDigraph, s: int, t: int,
                         banned_nodes: set[int], banned_edge: tuple[int, int]):
    dist: dict[int, Fraction] = {s: ZERO}
    pred: dict[int, int] = {}
    done: set[int] = set()
    heap = [(ZERO, s)]
    while heap:
        d, u = heapq.heappop(heap)
        if u in done:
            continue
        done.add(u)
        if u == t:
            break
        for v, w in g.out_adj[u]:
            if v in banned_nodes or (u, v) == banned_edge:
                continue
            nd = d + w
            if v not in dist or nd < dist[v] or (nd == dist[v] and u < pred[v]):
                dist[v] = nd
                pred[v] = u
                heapq.heappush(heap, (nd, v))
    if t not in done:
        return None
    path = [t]
    while path[-1] != s:
        path.append(pred[path[-1]])
    path.reverse()
    return dist[t], tuple(path)


def bellman_ford(g: WeightedDigraph, s: int) -> list[Fraction | None]:
    """Distances under arbitrary weights; raises on a negative cycle."""
    dist: list[Fraction | None] = [None] * g.n()
    dist[s] = ZERO
    for _ in range(g.n() - 1):
        changed = False
        for (u, v), w in g.edges.items():
            if dist[u] is not None and (dist[v] is None or dist[u] + w < dist[v]):
                dist[v] = dist[u] + w
                changed = True
        if not changed:
            break
    for (u, v), w in g.edges.items():
        if dist[u] is not None and (dist[v] is None or dist[u] + w < dist[v]):
            raise ValueError("negative cycle detected")
    return dist


def _reachable(adj, s: int, n: int) -> set[int]:
    seen = {s}
    stack = [s]
    while stack:
        u = stack.pop()
        for v, _ in adj[u]:
            if v not in seen:
                seen.add(v)
                stack.append(v)
    return seen


def is_strongly_connected(g: WeightedDigraph) -> bool:
    if g.n() == 0:
        return True
    return (len(_reachable(g.out_adj, 0, g.n())) == g.n()
            and len(_reachable(g.in_adj, 0, g.n())) == g.n())


def johnson_reweight(g: WeightedDigraph, x: int) -> WeightedDigraph:
    """Shift each weight by dist(x, u) - dist(x, v).

    Every u~>v path length shifts by dist(x, u) - dist(x, v), so shortest
    u~>v path sets are untouched, while the triangle inequality makes all
    new weights nonnegative.  Requires strong connectivity and no negative
    cycle.
    """
    if not is_strongly_connected(g):
        raise ValueError("graph must be strongly connected")
    h = bellman_ford(g, x)
    new = {(u, v): w + h[u] - h[v] for (u, v), w in g.edges.items()}
    assert all(w >= 0 for w in new.values())
    return g.reweighted(new)


def symmetrize(g: WeightedDigraph) -> WeightedDigraph:
    """Undirected view: w'(u,v) = w'(v,u) = w(u,v) + w(v,u).

    Requires the edge support to be symmetric.
    """
    for (u, v) in g.edges:
        if (v, u) not in g.edges:
            raise ValueError(
                f"asymmetric edge support at ({g.names[u]}, {g.names[v]})")
    new = {(u, v): w + g.edges[(v, u)] for (u, v), w in g.edges.items()}
    return g.reweighted(new)


def enumerate_simple_paths(g: WeightedDigraph, s: int, t: int,
                           limit: int | None = None) -> list[tuple[int, ...]]:
    """All simple s~>t paths in lexicographic order (test oracle helper)."""
    if s == t:
        return [(s,)]
    out: list[tuple[int, ...]] = []
    path = [s]
    on_path = {s}

    def rec(u):
        if limit is not None and len(out) >= limit:
            return
        if u == t:
            out.append(tuple(path))
            return
        for v, _ in g.out_adj[u]:
            if v not in on_path:
                path.append(v)
                on_path.add(v)
                rec(v)
                path.pop()
                on_path.remove(v)

    rec(s)
    return sorted(out)


def to_dot(g: WeightedDigraph) -> str:
    lines = ["digraph g {"]
    for (u, v), w in sorted(g.edges.items()):
        lines.append(f'  "{g.names[u]}" -> "{g.names[v]}" [label="{w}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
