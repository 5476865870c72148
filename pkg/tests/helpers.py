"""Shared test utilities: independent exact oracles and tiny builders.

The oracles here deliberately avoid the production solvers: linear systems
are solved by a local Gaussian elimination, polytope uniqueness by basis
enumeration, and shortest paths by exhaustive simple-path enumeration.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations

from pathsys.core import PathSystem, WeightedPathSystem

ZERO = Fraction(0)


def ps(*paths: str) -> PathSystem:
    return PathSystem.from_names([tuple(p) for p in paths])


def wps(mapping: dict[str, Fraction | int]) -> WeightedPathSystem:
    return WeightedPathSystem.from_mapping(
        {tuple(p): Fraction(w) for p, w in mapping.items()})


def gauss_solve(rows: list[list[Fraction]], rhs: list[Fraction]):
    """Solve a square-ish exact system; None if inconsistent/underdetermined."""
    m = [list(r) + [b] for r, b in zip(rows, rhs)]
    n = len(rows[0]) if rows else 0
    piv = []
    rank = 0
    for col in range(n):
        sel = next((i for i in range(rank, len(m)) if m[i][col]), None)
        if sel is None:
            continue
        m[rank], m[sel] = m[sel], m[rank]
        p = m[rank][col]
        m[rank] = [x / p for x in m[rank]]
        for i in range(len(m)):
            if i != rank and m[i][col]:
                f = m[i][col]
                m[i] = [a - f * b for a, b in zip(m[i], m[rank])]
        piv.append(col)
        rank += 1
    for i in range(rank, len(m)):
        if m[i][n]:
            return None  # inconsistent
    if rank < n:
        return None  # underdetermined
    x = [ZERO] * n
    for r, col in enumerate(piv):
        x[col] = m[r][n]
    return x


def polytope_points(rows: list[dict[int, Fraction]], rhs: list[Fraction],
                    dim: int) -> list[tuple[Fraction, ...]]:
    """All vertices of {A x = b, x >= 0} by brute basis enumeration."""
    dense = [[r.get(j, ZERO) for j in range(dim)] for r in rows]
    found = set()
    # rank of A bounds the basis size
    from pathsys.exactlp import kernel_basis
    rank = dim - len(kernel_basis(rows, dim))
    for cols in combinations(range(dim), rank):
        sub = [[row[c] for c in cols] for row in dense]
        x_b = gauss_solve(sub, rhs)
        if x_b is None or any(v < 0 for v in x_b):
            continue
        x = [ZERO] * dim
        for c, v in zip(cols, x_b):
            x[c] = v
        if all(sum((row[j] * x[j] for j in range(dim)), ZERO) == b
               for row, b in zip(dense, rhs)):
            found.add(tuple(x))
    return sorted(found)


def polytope_is_single_point(rows, rhs, dim, x0: dict[int, Fraction]) -> bool:
    """Exhaustive check that {A x = b, x >= 0} = {x0}.

    True iff every vertex equals x0 and the recession cone {A d = 0,
    d >= 0} has no unit-sum point.
    """
    x0_dense = tuple(x0.get(j, ZERO) for j in range(dim))
    verts = polytope_points(rows, rhs, dim)
    if verts != [x0_dense]:
        return False
    cone_rows = [dict(r) for r in rows] + [{j: Fraction(1) for j in range(dim)}]
    cone_rhs = [ZERO] * len(rows) + [Fraction(1)]
    return not polytope_points(cone_rows, cone_rhs, dim)
