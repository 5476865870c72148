"""Path systems over named nodes, and the boundary operators on them.

A path system is a finite node set plus a set of node sequences.  Node
names are interned to dense integer ids in sorted-name order, so any two
systems over the same name set index their vectors identically.  Paths are
stored as tuples of ids in canonical lexicographic order.

Boundary vectors are sparse dicts over ordered id pairs (u, v) with u != v;
the diagonal is always dropped.  The pair boundary of a path is the sum of
its consecutive pairs minus its endpoint pair; the node boundary of a pair
(u, v) is -u + v.  Both maps extend linearly, and their composition is
identically zero.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

Path = tuple[int, ...]
Pair = tuple[int, int]
PairVec = dict[Pair, Fraction]
NodeVec = dict[int, Fraction]

ZERO = Fraction(0)
ONE = Fraction(1)


@dataclass(frozen=True)
class PathSystem:
    """A finite node set together with a set of paths over it.

    Invariants: names are sorted and unique; ids are their positions; every
    node occurs in at least one path (no isolated nodes); paths are
    deduplicated and sorted.  An empty system (no paths, no nodes) is legal
    and shows up as the normal form of systems whose boundary is zero.
    """

    names: tuple[str, ...]
    paths: tuple[Path, ...]

    def __post_init__(self):
        if list(self.names) != sorted(set(self.names)):
            raise ValueError("node names must be sorted and unique")
        used = {v for p in self.paths for v in p}
        if used != set(range(len(self.names))):
            raise ValueError("every node must appear in at least one path")
        if list(self.paths) != sorted(set(self.paths)):
            raise ValueError("paths must be deduplicated and sorted")
        for p in self.paths:
            if not p:
                raise ValueError("paths must be nonempty")

    @classmethod
    def from_names(cls, name_paths: Iterable[Sequence[str]],
                   declared_nodes: Iterable[str] | None = None) -> "PathSystem":
        """Build a system from paths given as name sequences.

        ``declared_nodes``, when given, must equal the set of names used by
        the paths; declaring an isolated node is an error.
        """
        name_paths = [tuple(p) for p in name_paths]
        used = sorted({v for p in name_paths for v in p})
        if declared_nodes is not None:
            declared = sorted(set(declared_nodes))
            if declared != used:
                extra = sorted(set(declared) - set(used))
                missing = sorted(set(used) - set(declared))
                if extra:
                    raise ValueError(f"isolated nodes declared: {extra}")
                raise ValueError(f"paths use undeclared nodes: {missing}")
        idx = {v: i for i, v in enumerate(used)}
        paths = tuple(sorted({tuple(idx[v] for v in p) for p in name_paths}))
        return cls(tuple(used), paths)

    def id_of(self, name: str) -> int:
        return self.names.index(name)

    def path_names(self, p: Path) -> tuple[str, ...]:
        return tuple(self.names[v] for v in p)

    def name_paths(self) -> tuple[tuple[str, ...], ...]:
        return tuple(self.path_names(p) for p in self.paths)

    def __str__(self):
        return "{" + ", ".join("".join(p) if all(len(n) == 1 for n in p)
                               else "(" + ",".join(p) + ")"
                               for p in self.name_paths()) + "}"


@dataclass(frozen=True)
class WeightedPathSystem:
    """A path system with one positive rational weight per path.

    ``weights[i]`` belongs to ``system.paths[i]``; the support of the
    weight vector is exactly the path set.
    """

    system: PathSystem
    weights: tuple[Fraction, ...]

    def __post_init__(self):
        if len(self.weights) != len(self.system.paths):
            raise ValueError("one weight per path required")
        if any(w <= 0 for w in self.weights):
            raise ValueError("path weights must be positive")

    @classmethod
    def unit(cls, system: PathSystem) -> "WeightedPathSystem":
        return cls(system, (ONE,) * len(system.paths))

    @classmethod
    def from_mapping(cls, weighted_paths: Mapping[tuple[str, ...], Fraction]) -> "WeightedPathSystem":
        """Build from a map of name-paths to weights; equal paths add."""
        system = PathSystem.from_names(weighted_paths.keys())
        acc: dict[Path, Fraction] = {}
        idx = {v: i for i, v in enumerate(system.names)}
        for p, w in weighted_paths.items():
            key = tuple(idx[v] for v in p)
            acc[key] = acc.get(key, ZERO) + Fraction(w)
        return cls(system, tuple(acc[p] for p in system.paths))

    def weight_of(self, p: Path) -> Fraction:
        return self.weights[self.system.paths.index(p)]

    def name_items(self) -> tuple[tuple[tuple[str, ...], Fraction], ...]:
        return tuple((self.system.path_names(p), w)
                     for p, w in zip(self.system.paths, self.weights))


def endpoints(p: Path) -> Pair:
    return (p[0], p[-1])


def is_simple(p: Sequence) -> bool:
    return len(set(p)) == len(p)


def is_simple_cycle(p: Sequence) -> bool:
    """First node equals last, more than one node, no other repeats."""
    return len(p) > 1 and p[0] == p[-1] and is_simple(p[:-1])


def vec_add_scaled(dst: dict, src: Mapping, coeff: Fraction) -> None:
    """dst += coeff * src, dropping entries that become zero."""
    if not coeff:
        return
    for k, v in src.items():
        s = dst.get(k, ZERO) + coeff * v
        if s:
            dst[k] = s
        else:
            dst.pop(k, None)


def boundary_path(p: Path) -> PairVec:
    """Consecutive pairs of ``p`` minus its endpoint pair, diagonal dropped."""
    out: PairVec = {}
    for u, v in zip(p, p[1:]):
        if u != v:
            out[(u, v)] = out.get((u, v), ZERO) + ONE
    s, t = p[0], p[-1]
    if s != t:
        e = out.get((s, t), ZERO) - ONE
        if e:
            out[(s, t)] = e
        else:
            out.pop((s, t), None)
    return out


def is_trivial_path(p: Path) -> bool:
    return not boundary_path(p)


def boundary_system(ws: WeightedPathSystem) -> PairVec:
    out: PairVec = {}
    for p, w in zip(ws.system.paths, ws.weights):
        vec_add_scaled(out, boundary_path(p), w)
    return out


def boundary_edges(vec: Mapping[Pair, Fraction]) -> NodeVec:
    """Linear extension of (u, v) -> -u + v."""
    out: NodeVec = {}
    for (u, v), c in vec.items():
        for node, sign in ((u, -c), (v, c)):
            s = out.get(node, ZERO) + sign
            if s:
                out[node] = s
            else:
                out.pop(node, None)
    return out


def boundary_by_names(ws: WeightedPathSystem) -> dict[tuple[str, str], Fraction]:
    """System boundary keyed by node names, for cross-system comparison."""
    names = ws.system.names
    return {(names[u], names[v]): c for (u, v), c in boundary_system(ws).items()}


@dataclass(frozen=True)
class SystemFlags:
    consistent: bool
    simple: bool
    semisimple: bool
    nontrivial: bool
    skip_free: bool
    acyclic: bool


def _consistent(paths: Sequence[Path]) -> bool:
    # A repeated node inside one path yields two distinct continuous
    # subpaths between its occurrences, so non-simple paths fail alone.
    if any(not is_simple(p) for p in paths):
        return False
    pos = [{v: i for i, v in enumerate(p)} for p in paths]
    for a in range(len(paths)):
        for b in range(a + 1, len(paths)):
            pa, pb = paths[a], paths[b]
            common = [v for v in pa if v in pos[b]]
            for i, u in enumerate(common):
                for v in common[i + 1:]:
                    ia, ja = pos[a][u], pos[a][v]
                    ib, jb = pos[b][u], pos[b][v]
                    if ia < ja and ib < jb and pa[ia:ja + 1] != pb[ib:jb + 1]:
                        return False
                    if ja < ia and jb < ib and pa[ja:ia + 1] != pb[jb:ib + 1]:
                        return False
    return True


def _skip_free(paths: Sequence[Path]) -> bool:
    consecutive = {(u, v) for p in paths for u, v in zip(p, p[1:])}
    return all(endpoints(p) not in consecutive for p in paths)


def _acyclic(paths: Sequence[Path]) -> bool:
    """True iff some total order of the nodes ascends along every path.

    Only consecutive-pair precedences are needed: within one path they
    generate all in-path precedences transitively.  A self-pair (v, v)
    counts as a cycle, so acyclic systems are automatically simple.
    """
    succ: dict[int, set[int]] = {}
    for p in paths:
        for u, v in zip(p, p[1:]):
            if u == v:
                return False
            succ.setdefault(u, set()).add(v)
    state: dict[int, int] = {}  # 1 = on stack, 2 = done

    def dfs(u: int) -> bool:
        state[u] = 1
        for v in succ.get(u, ()):
            s = state.get(v)
            if s == 1 or (s is None and not dfs(v)):
                return False
        state[u] = 2
        return True

    return all(state.get(u) == 2 or dfs(u) for u in sorted(succ))


def classify(s: PathSystem) -> SystemFlags:
    paths = s.paths
    return SystemFlags(
        consistent=_consistent(paths),
        simple=all(is_simple(p) for p in paths),
        semisimple=all(is_simple(p) or is_simple_cycle(p) for p in paths),
        nontrivial=all(not is_trivial_path(p) for p in paths),
        skip_free=_skip_free(paths),
        acyclic=_acyclic(paths),
    )


def reversal_closure(s: PathSystem) -> PathSystem:
    name_paths = list(s.name_paths())
    name_paths += [tuple(reversed(p)) for p in name_paths]
    return PathSystem.from_names(name_paths)


def circular_shift(p: tuple, j: int) -> tuple:
    """Rotate a simple path left by j positions: (a,c,e), 1 -> (c,e,a)."""
    if not is_simple(p):
        raise ValueError("circular shift is only defined for simple paths")
    j %= len(p)
    return p[j:] + p[:j]


def subsystem(s: PathSystem, drop_nodes: Iterable[str] = (),
              drop_paths: Iterable[Sequence[str]] = ()) -> PathSystem:
    """Delete nodes from every path and delete whole paths.

    Nodes left isolated by the deletions are pruned.  A path that would
    lose all its nodes is an error.
    """
    drop_nodes = set(drop_nodes)
    unknown = drop_nodes - set(s.names)
    if unknown:
        raise ValueError(f"unknown nodes: {sorted(unknown)}")
    dropped = {tuple(p) for p in drop_paths}
    kept = []
    for p in s.name_paths():
        if p in dropped:
            continue
        q = tuple(v for v in p if v not in drop_nodes)
        if not q:
            raise ValueError(f"deleting {sorted(drop_nodes)} empties path {p}")
        kept.append(q)
    return PathSystem.from_names(kept)
