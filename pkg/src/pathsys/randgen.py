"""Seeded random instances for fuzz loops and experiment scripts."""

from __future__ import annotations

import random
from fractions import Fraction

from pathsys.core import PathSystem, WeightedPathSystem
from pathsys.graphalg import WeightedDigraph

LETTERS = "abcdefghijklmnopqrstuvwxyz"


def random_system(rng: random.Random, max_nodes: int = 6, max_paths: int = 5,
                  max_len: int = 5) -> PathSystem:
    """Arbitrary small system: paths are any node sequences."""
    n = rng.randint(1, max_nodes)
    nodes = list(LETTERS[:n])
    paths = []
    for _ in range(rng.randint(1, max_paths)):
        k = rng.randint(1, max_len)
        paths.append(tuple(rng.choice(nodes) for _ in range(k)))
    return PathSystem.from_names(paths)


def random_semisimple_system(rng: random.Random, max_nodes: int = 7,
                             max_paths: int = 5) -> PathSystem:
    """Paths are simple paths or simple cycles (no trivial guarantee)."""
    n = rng.randint(2, max_nodes)
    nodes = list(LETTERS[:n])
    paths = []
    for _ in range(rng.randint(1, max_paths)):
        k = rng.randint(2, n)
        body = rng.sample(nodes, k)
        if k >= 2 and rng.random() < 0.3:
            paths.append(tuple(body) + (body[0],))  # simple cycle
        else:
            paths.append(tuple(body))
    return PathSystem.from_names(paths)


def random_weights(rng: random.Random, s: PathSystem,
                   max_den: int = 6) -> WeightedPathSystem:
    ws = tuple(Fraction(rng.randint(1, 9), rng.randint(1, max_den))
               for _ in s.paths)
    return WeightedPathSystem(s, ws)


def random_weighted_system(rng: random.Random, **kw) -> WeightedPathSystem:
    return random_weights(rng, random_system(rng, **kw))


def random_positive_graph(rng: random.Random, n: int,
                          density: float = 0.4,
                          max_den: int = 8) -> WeightedDigraph:
    """Random digraph with positive rational weights (possibly sparse)."""
    if n < 2:
        raise ValueError("need at least two nodes")
    edges = {}
    for u in range(n):
        for v in range(n):
            if u != v and rng.random() < density:
                edges[(u, v)] = Fraction(rng.randint(1, 12), rng.randint(1, max_den))
    if not edges:
        edges[(0, 1)] = Fraction(1)
    return WeightedDigraph.from_weights(list(LETTERS[:n]), edges)


def random_dag(rng: random.Random, n: int, density: float = 0.5,
               max_den: int = 8) -> WeightedDigraph:
    """Random DAG: edges go forward in a random node permutation."""
    if n < 2:
        raise ValueError("need at least two nodes")
    order = list(range(n))
    rng.shuffle(order)
    rank = {v: i for i, v in enumerate(order)}
    edges = {}
    for u in range(n):
        for v in range(n):
            if u != v and rank[u] < rank[v] and rng.random() < density:
                edges[(u, v)] = Fraction(rng.randint(1, 12), rng.randint(1, max_den))
    if not edges:
        a, b = order[0], order[1]
        edges[(a, b)] = Fraction(1)
    return WeightedDigraph.from_weights(list(LETTERS[:n]), edges)


def random_flow_values(rng: random.Random, n: int = 6, pieces: int = 3):
    """Nonnegative pair vector built from random paths and cycles.

    Returns (values, source, target, value): a genuine source~>target flow.
    """
    s, t = 0, n - 1
    values: dict[tuple[int, int], Fraction] = {}
    lam = Fraction(0)
    for _ in range(rng.randint(1, pieces)):
        k = rng.randint(2, n)
        mid = rng.sample(range(1, n - 1), min(k - 2, n - 2)) if n > 2 else []
        path = [s] + mid + [t]
        w = Fraction(rng.randint(1, 6), rng.randint(1, 4))
        lam += w
        for u, v in zip(path, path[1:]):
            values[(u, v)] = values.get((u, v), Fraction(0)) + w
    for _ in range(rng.randint(0, pieces)):
        k = rng.randint(2, n)
        body = rng.sample(range(n), k)
        w = Fraction(rng.randint(1, 6), rng.randint(1, 4))
        cyc = body + [body[0]]
        for u, v in zip(cyc, cyc[1:]):
            values[(u, v)] = values.get((u, v), Fraction(0)) + w
    return values, s, t, lam
