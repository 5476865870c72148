import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from pathsys.core import (
    PathSystem,
    WeightedPathSystem,
    boundary_by_names,
    boundary_edges,
    boundary_path,
    boundary_system,
    circular_shift,
    classify,
    is_trivial_path,
    reversal_closure,
    subsystem,
)
from pathsys.gallery import OCT1, OCT1_PARTNER
from pathsys.randgen import random_system, random_weighted_system

from helpers import ps

F = Fraction


def ids(s, *names):
    return tuple(s.id_of(n) for n in names)


def test_single_node_path_has_zero_boundary():
    assert boundary_path((0,)) == {}


def test_two_node_path_has_zero_boundary():
    assert boundary_path((0, 1)) == {}


def test_three_node_boundary():
    a, c, e = 0, 1, 2
    assert boundary_path((a, c, e)) == {
        (a, c): F(1), (c, e): F(1), (a, e): F(-1)}


def test_adjacent_repeat_is_trivial():
    assert is_trivial_path((0, 1, 1)) is True
    assert is_trivial_path((0, 1, 0)) is False


def test_boundary_system_oct1_has_twelve_unit_entries():
    b = boundary_by_names(WeightedPathSystem.unit(OCT1))
    expect = {
        ("a", "c"): 1, ("c", "e"): 1, ("a", "e"): -1,
        ("a", "d"): 1, ("d", "f"): 1, ("a", "f"): -1,
        ("b", "d"): 1, ("d", "e"): 1, ("b", "e"): -1,
        ("b", "c"): 1, ("c", "f"): 1, ("b", "f"): -1,
    }
    assert b == {k: F(v) for k, v in expect.items()}


def test_empty_weight_system_boundary_zero():
    empty = WeightedPathSystem(PathSystem((), ()), ())
    assert boundary_system(empty) == {}


def test_oct1_boundary_equals_partner_boundary():
    assert boundary_by_names(WeightedPathSystem.unit(OCT1)) == \
        boundary_by_names(WeightedPathSystem.unit(OCT1_PARTNER))


def test_boundary_edges_of_single_pair():
    assert boundary_edges({(0, 1): F(1)}) == {0: F(-1), 1: F(1)}


def test_boundary_edges_antisymmetric_cancellation():
    assert boundary_edges({(0, 1): F(1), (1, 0): F(1)}) == {}


def test_boundary_of_boundary_is_zero_on_paths():
    assert boundary_edges(boundary_path((0, 2, 4, 1))) == {}


def test_classify_oct1():
    flags = classify(OCT1)
    assert flags.consistent and flags.simple and flags.acyclic
    assert flags.nontrivial and flags.skip_free and flags.semisimple


def test_classify_simplest_inconsistent():
    assert classify(ps("abc", "ac")).consistent is False


def test_classify_nonsimple_singleton():
    flags = classify(ps("abcbd"))
    assert not flags.consistent and not flags.simple and not flags.semisimple


def test_classify_cycle_is_semisimple_not_simple():
    flags = classify(ps("aba"))
    assert flags.semisimple and not flags.simple and not flags.consistent


def test_reversal_closure_examples():
    assert reversal_closure(ps("abc")) == ps("abc", "cba")
    assert reversal_closure(ps("ab", "ba")) == ps("ab", "ba")
    assert reversal_closure(ps("abc", "ca")) == ps("abc", "cba", "ca", "ac")


def test_circular_shift_examples():
    assert circular_shift(("a", "c", "e"), 1) == ("c", "e", "a")
    assert circular_shift(("a", "c", "e"), 0) == ("a", "c", "e")
    with pytest.raises(ValueError):
        circular_shift(("a", "b", "a"), 1)


def test_subsystem_drop_path():
    assert subsystem(OCT1, drop_paths={("b", "c", "f")}) == ps("ace", "adf", "bde")


def test_subsystem_drop_node():
    assert subsystem(OCT1, drop_nodes={"d"}) == ps("ace", "af", "be", "bcf")


def test_subsystem_identity():
    assert subsystem(OCT1) == OCT1


def test_subsystem_rejects_emptied_path():
    with pytest.raises(ValueError):
        subsystem(ps("ab", "cd"), drop_nodes={"c", "d"})


def test_isolated_declared_node_rejected():
    with pytest.raises(ValueError):
        PathSystem.from_names([("a", "b")], declared_nodes=["a", "b", "z"])


small_names = st.sampled_from("abcde")
paths_strategy = st.lists(
    st.lists(small_names, min_size=1, max_size=5).map(tuple),
    min_size=1, max_size=5)


@settings(max_examples=60, derandomize=True)
@given(paths_strategy)
def test_boundary_of_boundary_zero_property(name_paths):
    s = PathSystem.from_names(name_paths)
    rng = random.Random(42)
    w = WeightedPathSystem(
        s, tuple(F(rng.randint(1, 9), rng.randint(1, 5)) for _ in s.paths))
    assert boundary_edges(boundary_system(w)) == {}


@settings(max_examples=60, derandomize=True)
@given(paths_strategy)
def test_nonsimple_path_makes_system_inconsistent(name_paths):
    s = PathSystem.from_names(name_paths)
    if any(len(set(p)) != len(p) for p in s.paths):
        assert classify(s).consistent is False


@settings(max_examples=80, derandomize=True)
@given(paths_strategy)
def test_consistent_nontrivial_implies_skip_free(name_paths):
    s = PathSystem.from_names(name_paths)
    flags = classify(s)
    if flags.consistent and flags.nontrivial:
        assert flags.skip_free


@settings(max_examples=60, derandomize=True)
@given(paths_strategy)
def test_reversal_closure_idempotent(name_paths):
    s = PathSystem.from_names(name_paths)
    closed = reversal_closure(s)
    assert reversal_closure(closed) == closed


@settings(max_examples=40, derandomize=True)
@given(st.lists(small_names, min_size=1, max_size=5).map(lambda xs: tuple(dict.fromkeys(xs))))
def test_circular_shift_cycles_back(p):
    q = p
    for _ in range(len(p)):
        q = circular_shift(q, len(p) - 1)
    assert q == p


@settings(max_examples=80, derandomize=True)
@given(paths_strategy)
def test_acyclic_implies_simple(name_paths):
    s = PathSystem.from_names(name_paths)
    flags = classify(s)
    if flags.acyclic:
        assert flags.simple


def test_random_system_generators_are_reproducible():
    a = random_system(random.Random(5))
    b = random_system(random.Random(5))
    assert a == b
    wa = random_weighted_system(random.Random(6))
    wb = random_weighted_system(random.Random(6))
    assert wa == wb
