"""Exact rational linear programming.

A bounded-variable primal simplex over ``fractions.Fraction`` with Bland's
rule (smallest eligible index enters; smallest blocking variable leaves),
which rules out cycling, so exactness is the only numerical concern.
General problems go through a textbook two-phase scheme with artificial
variables; callers that already know a basic feasible point (the rigidity
test does) can enter directly through :func:`optimize_from_basis`.

Rationals are ``fractions.Fraction``: arbitrary-precision integers,
positive denominators, gcd-reduced after every operation.

Also here: :func:`kernel_basis`, an exact null-space computation using
fraction-free (Bareiss) forward elimination on integer-scaled rows.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping, Sequence

ZERO = Fraction(0)
ONE = Fraction(1)

Bound = Fraction | None  # None = unbounded on that side


@dataclass
class Constraint:
    coeffs: dict[int, Fraction]
    rel: str  # "<=", "=", ">="
    rhs: Fraction

    def __post_init__(self):
        if self.rel not in ("<=", "=", ">="):
            raise ValueError(f"bad relation {self.rel!r}")
        self.coeffs = {j: Fraction(c) for j, c in self.coeffs.items() if c}
        self.rhs = Fraction(self.rhs)


@dataclass
class LinearProgram:
    num_vars: int
    rows: list[Constraint] = field(default_factory=list)
    objective: dict[int, Fraction] = field(default_factory=dict)
    maximize: bool = True
    bounds: list[tuple[Bound, Bound]] = field(default_factory=list)

    def __post_init__(self):
        if not self.bounds:
            self.bounds = [(ZERO, None)] * self.num_vars
        if len(self.bounds) != self.num_vars:
            raise ValueError("one bound pair per variable required")
        for con in self.rows:
            if any(j >= self.num_vars for j in con.coeffs):
                raise ValueError("constraint references unknown variable")


@dataclass
class LpOutcome:
    status: str  # "optimal" | "infeasible" | "unbounded"
    point: list[Fraction] | None = None
    value: Fraction | None = None
    ray: list[Fraction] | None = None
    pivots: int = 0


def _combine(row: dict, pivot_items: list, c: Fraction) -> None:
    """row -= c * pivot_row, dropping zeros; +-1 avoid multiplications."""
    if c == 1:
        for j, v in pivot_items:
            s = row.get(j, ZERO) - v
            if s:
                row[j] = s
            else:
                row.pop(j, None)
    elif c == -1:
        for j, v in pivot_items:
            s = row.get(j, ZERO) + v
            if s:
                row[j] = s
            else:
                row.pop(j, None)
    else:
        for j, v in pivot_items:
            s = row.get(j, ZERO) - c * v
            if s:
                row[j] = s
            else:
                row.pop(j, None)


class _Tableau:
    """Bounded-variable simplex state: rows are A_B^-1 A as sparse dicts."""

    def __init__(self, ncols, lo, up):
        self.ncols = ncols
        self.lo = lo
        self.up = up
        self.rows: list[dict[int, Fraction]] = []
        self.basis: list[int] = []
        self.beta: list[Fraction] = []
        self.status: list[str] = []  # 'B', 'L', 'U', 'F'
        self.zrow: dict[int, Fraction] = {}
        self.pivots = 0

    def val(self, j):
        st = self.status[j]
        if st == "L":
            return self.lo[j]
        if st == "U":
            return self.up[j]
        return ZERO  # free nonbasic sits at 0

    def point(self):
        x = [self.val(j) if self.status[j] != "B" else ZERO
             for j in range(self.ncols)]
        for i, b in enumerate(self.basis):
            x[b] = self.beta[i]
        return x

    def set_objective(self, c: Mapping[int, Fraction]):
        z = {j: Fraction(v) for j, v in c.items() if v}
        for i, b in enumerate(self.basis):
            cb = c.get(b)
            if cb:
                row = self.rows[i]
                for j, v in row.items():
                    s = z.get(j, ZERO) - cb * v
                    if s:
                        z[j] = s
                    else:
                        z.pop(j, None)
        for b in self.basis:
            z.pop(b, None)
        self.zrow = z

    def _entering(self):
        zrow = self.zrow
        for j in range(self.ncols):
            st = self.status[j]
            if st == "B":
                continue
            lo, up = self.lo[j], self.up[j]
            if lo is not None and lo == up:
                continue  # fixed variable can never move
            d = zrow.get(j)
            if not d:
                continue
            if st == "L" and d > 0:
                return j, 1
            if st == "U" and d < 0:
                return j, -1
            if st == "F":
                return j, (1 if d > 0 else -1)
        return None, None

    def _ratio(self, e, sigma):
        """Largest step t >= 0 for entering variable e moving by sigma.

        Returns (t, r) where r is the blocking row, -1 for a bound-to-bound
        flip of e itself, or (None, None) when unbounded.  Ties go to the
        smallest blocking variable index (Bland).
        """
        best_t = None
        best_var = None
        best_r = None
        lo_e, up_e = self.lo[e], self.up[e]
        if lo_e is not None and up_e is not None:
            best_t, best_var, best_r = up_e - lo_e, e, -1
        for i, row in enumerate(self.rows):
            a = row.get(e)
            if not a:
                continue
            delta = -sigma * a  # rate of change of beta[i]
            b = self.basis[i]
            if delta < 0:
                lim = self.lo[b]
                if lim is None:
                    continue
                t = (self.beta[i] - lim) / (-delta)
            else:
                lim = self.up[b]
                if lim is None:
                    continue
                t = (lim - self.beta[i]) / delta
            if best_t is None or t < best_t or (t == best_t and b < best_var):
                best_t, best_var, best_r = t, b, i
        return (best_t, best_r) if best_t is not None else (None, None)

    def _step(self, e, sigma, t, r):
        if t:
            st = sigma * t
            for i, row in enumerate(self.rows):
                a = row.get(e)
                if a:
                    self.beta[i] -= st * a
        if r == -1:
            self.status[e] = "U" if self.status[e] == "L" else "L"
            return
        x_e = self.val(e) + sigma * t
        row_r = self.rows[r]
        a_re = row_r[e]
        leaving = self.basis[r]
        self.status[leaving] = "L" if -sigma * a_re < 0 else "U"
        if a_re == 1:
            pass
        elif a_re == -1:
            row_r = {j: -v for j, v in row_r.items()}
        else:
            inv = ONE / a_re
            row_r = {j: v * inv for j, v in row_r.items()}
        self.rows[r] = row_r
        self.basis[r] = e
        self.beta[r] = x_e
        self.status[e] = "B"
        items = list(row_r.items())
        for i, row in enumerate(self.rows):
            if i == r:
                continue
            c = row.get(e)
            if c:
                _combine(row, items, c)
        zc = self.zrow.get(e)
        if zc:
            _combine(self.zrow, items, zc)
            self.zrow.pop(e, None)

    def optimize(self):
        """Run to optimality; returns 'optimal' or ('unbounded', e, sigma)."""
        while True:
            e, sigma = self._entering()
            if e is None:
                return "optimal"
            t, r = self._ratio(e, sigma)
            if t is None:
                return ("unbounded", e, sigma)
            self.pivots += 1
            self._step(e, sigma, t, r)


def _standardize(lp: LinearProgram):
    """Append slack columns so every row is an equality."""
    lo = [b[0] for b in lp.bounds]
    up = [b[1] for b in lp.bounds]
    rows = []
    rhs = []
    for con in lp.rows:
        coeffs = dict(con.coeffs)
        if con.rel == "<=":
            coeffs[len(lo)] = ONE
            lo.append(ZERO)
            up.append(None)
        elif con.rel == ">=":
            coeffs[len(lo)] = ONE
            lo.append(None)
            up.append(ZERO)
        rows.append(coeffs)
        rhs.append(con.rhs)
    return rows, rhs, lo, up


def _default_status(lo, up):
    if lo is not None:
        return "L"
    if up is not None:
        return "U"
    return "F"


def _objective_value(c, x):
    return sum((cj * x[j] for j, cj in c.items()), ZERO)


def solve(lp: LinearProgram) -> LpOutcome:
    """Two-phase exact simplex; every outcome is a value, never an error."""
    rows, rhs, lo, up = _standardize(lp)
    base_cols = len(lo)
    tab = _Tableau(base_cols + len(rows), lo + [ZERO] * len(rows),
                   up + [None] * len(rows))
    tab.status = [_default_status(lo[j], up[j]) for j in range(base_cols)]
    phase1_obj: dict[int, Fraction] = {}
    for i, coeffs in enumerate(rows):
        resid = rhs[i] - sum((a * tab.val(j) for j, a in coeffs.items()), ZERO)
        sign = ONE if resid >= 0 else -ONE
        art = base_cols + i
        tab.rows.append({j: sign * a for j, a in coeffs.items() if a} | {art: ONE})
        tab.basis.append(art)
        tab.beta.append(abs(resid))
        tab.status.append("B")
        phase1_obj[art] = -ONE
    if rows:
        tab.set_objective(phase1_obj)
        res = tab.optimize()
        assert res == "optimal", "phase 1 objective is bounded"
        if _objective_value(phase1_obj, tab.point()) < 0:
            return LpOutcome("infeasible", pivots=tab.pivots)
        for i in range(len(rows)):
            art = base_cols + i
            tab.lo[art] = tab.up[art] = ZERO
    obj = dict(lp.objective) if lp.maximize else \
        {j: -c for j, c in lp.objective.items()}
    tab.set_objective(obj)
    res = tab.optimize()
    if res != "optimal":
        _, e, sigma = res
        ray = [ZERO] * tab.ncols
        ray[e] = Fraction(sigma)
        for i, row in enumerate(tab.rows):
            a = row.get(e)
            if a:
                ray[tab.basis[i]] = -sigma * a
        return LpOutcome("unbounded", ray=ray[:lp.num_vars], pivots=tab.pivots)
    x = tab.point()[:lp.num_vars]
    _verify_point(lp, x)
    value = _objective_value(lp.objective, x)
    return LpOutcome("optimal", point=x, value=value, pivots=tab.pivots)


def _verify_point(lp: LinearProgram, x: Sequence[Fraction]):
    """Exact re-check of an optimal point; a failure is an internal bug."""
    for j, (lo, up) in enumerate(lp.bounds):
        if (lo is not None and x[j] < lo) or (up is not None and x[j] > up):
            raise RuntimeError(f"solver returned out-of-bounds x[{j}]={x[j]}")
    for con in lp.rows:
        lhs = sum((a * x[j] for j, a in con.coeffs.items()), ZERO)
        ok = (lhs <= con.rhs if con.rel == "<=" else
              lhs >= con.rhs if con.rel == ">=" else lhs == con.rhs)
        if not ok:
            raise RuntimeError(f"solver violated row {con.coeffs} {con.rel} {con.rhs}")


def optimize_from_basis(eq_rows: Sequence[Mapping[int, Fraction]],
                        rhs: Sequence[Fraction],
                        lo: Sequence[Bound], up: Sequence[Bound],
                        objective: Mapping[int, Fraction],
                        basis_cols: Sequence[int]) -> LpOutcome:
    """Maximize over {A x = rhs, lo <= x <= up} starting from a known basis.

    ``basis_cols`` must be independent columns; rows they do not span get a
    fixed zero artificial.  Nonbasic variables start at their finite bound
    (free ones at 0); the implied point must be feasible.
    """
    ncols = len(lo)
    lo = list(lo)
    up = list(up)
    work = [dict(r) for r in eq_rows]
    rhs = list(rhs)
    pivot_of_row: list[int | None] = [None] * len(work)
    for b in basis_cols:
        r = next((i for i, row in enumerate(work)
                  if pivot_of_row[i] is None and row.get(b)), None)
        if r is None:
            raise ValueError(f"basis column {b} is dependent on earlier ones")
        inv = ONE / work[r][b]
        if inv != 1:
            work[r] = {j: v * inv for j, v in work[r].items()}
            rhs[r] *= inv
        items = list(work[r].items())
        for i, row in enumerate(work):
            if i == r:
                continue
            c = row.get(b)
            if c:
                _combine(row, items, c)
                if rhs[r]:
                    rhs[i] -= c * rhs[r]
        pivot_of_row[r] = b
    arts = []
    for i, row in enumerate(work):
        if pivot_of_row[i] is not None:
            continue
        if not row:
            if rhs[i]:
                return LpOutcome("infeasible")
        art = ncols + len(arts)
        arts.append(art)
        row[art] = ONE
        lo.append(ZERO)
        up.append(ZERO)
        pivot_of_row[i] = art
    tab = _Tableau(ncols + len(arts), lo, up)
    tab.rows = work
    tab.basis = [pivot_of_row[i] for i in range(len(work))]
    tab.status = ["B"] * (ncols + len(arts))
    in_basis = set(basis_cols)
    for j in range(ncols):
        if j not in in_basis:
            tab.status[j] = _default_status(lo[j], up[j])
    tab.beta = []
    for i, row in enumerate(work):
        b = rhs[i]
        for j, a in row.items():
            if tab.status[j] != "B":
                b -= a * tab.val(j)
        tab.beta.append(b)
    for i, bvar in enumerate(tab.basis):
        blo, bup = tab.lo[bvar], tab.up[bvar]
        if (blo is not None and tab.beta[i] < blo) or \
           (bup is not None and tab.beta[i] > bup):
            raise ValueError("starting basis is not feasible")
    tab.set_objective(objective)
    res = tab.optimize()
    if res != "optimal":
        raise RuntimeError("warm-started problem must be bounded")
    x = tab.point()[:ncols]
    value = _objective_value(objective, x)
    return LpOutcome("optimal", point=x, value=value, pivots=tab.pivots)


def _int_rows(rows, dim) -> list[list[int]]:
    out = []
    for r in rows:
        if isinstance(r, Mapping):
            vec = [Fraction(r.get(j, ZERO)) for j in range(dim)]
        else:
            vec = [Fraction(x) for x in r]
            vec += [ZERO] * (dim - len(vec))
        scale = math.lcm(*(x.denominator for x in vec)) if vec else 1
        ivec = [int(x * scale) for x in vec]
        if any(ivec):
            out.append(ivec)
    return out


def kernel_basis(rows: Sequence, dim: int) -> list[tuple[Fraction, ...]]:
    """Exact basis of {x : row . x = 0 for all rows}.

    Forward elimination is fraction-free (Bareiss) on integer-scaled rows;
    back-substitution produces one primitive integer vector per free
    column, in column order.
    """
    m = _int_rows(rows, dim)
    pivots: list[tuple[int, int]] = []  # (row, col)
    rank = 0
    prev = 1
    for col in range(dim):
        sel = next((i for i in range(rank, len(m)) if m[i][col]), None)
        if sel is None:
            continue
        m[rank], m[sel] = m[sel], m[rank]
        p = m[rank][col]
        for i in range(rank + 1, len(m)):
            q = m[i][col]
            for j in range(dim):
                m[i][j] = (m[i][j] * p - q * m[rank][j]) // prev
        pivots.append((rank, col))
        prev = p
        rank += 1
        if rank == len(m):
            break
    pivot_cols = [c for _, c in pivots]
    free_cols = [c for c in range(dim) if c not in set(pivot_cols)]
    basis = []
    for f in free_cols:
        x = [ZERO] * dim
        x[f] = ONE
        for r, c in reversed(pivots):
            acc = sum((Fraction(m[r][j]) * x[j]
                       for j in range(c + 1, dim) if m[r][j] and x[j]), ZERO)
            x[c] = -acc / m[r][c]
        scale = math.lcm(*(v.denominator for v in x))
        ints = [int(v * scale) for v in x]
        g = math.gcd(*ints)
        basis.append(tuple(Fraction(v // g) for v in ints))
    return basis
