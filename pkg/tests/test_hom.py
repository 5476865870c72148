import random
from fractions import Fraction

import pytest

from pathsys.core import PathSystem, subsystem
from pathsys.gallery import OCT1
from pathsys.hom import (
    Homomorphism,
    compose,
    search_hom,
    subsystem_hom,
    transfer_weights,
    verify_hom,
)
from pathsys.metrizability import extract_usp_system
from pathsys.randgen import random_positive_graph, random_semisimple_system
from pathsys.witness import verify_witness, witness_weights

from helpers import ps

F = Fraction


def identity_hom(s: PathSystem) -> Homomorphism:
    return Homomorphism(s, s, {v: v for v in s.names},
                        {p: p for p in s.name_paths()})


def test_identity_verifies():
    for s in (OCT1, ps("abc", "ca")):
        assert verify_hom(s, s, identity_hom(s))


def test_branch_destroying_map_fails():
    s1 = ps("abd", "acd")
    s2 = ps("abcd")
    big = ("a", "b", "c", "d")
    h = Homomorphism(s1, s2, {v: v for v in "abcd"},
                     {("a", "b", "d"): big, ("a", "c", "d"): big})
    assert not verify_hom(s1, s2, h)


def test_partial_maps_raise():
    s = ps("abc")
    with pytest.raises(ValueError):
        verify_hom(s, s, Homomorphism(s, s, {"a": "a"}, {}))


def test_subsystem_hom_drop_path():
    sub = subsystem(OCT1, drop_paths={("b", "c", "f")})
    h = subsystem_hom(sub, OCT1, drop_paths={("b", "c", "f")})
    assert verify_hom(sub, OCT1, h)


def test_subsystem_hom_drop_node():
    sub = subsystem(OCT1, drop_nodes={"d"})
    h = subsystem_hom(sub, OCT1, drop_nodes={"d"})
    assert verify_hom(sub, OCT1, h)
    assert h.rho[("a", "f")] == ("a", "d", "f")


def test_subsystem_hom_empty_record_is_identity():
    h = subsystem_hom(OCT1, OCT1)
    assert h.phi == {v: v for v in OCT1.names}
    assert all(p == q for p, q in h.rho.items())


def test_subsystem_hom_rejects_bad_record():
    sub = subsystem(OCT1, drop_nodes={"d"})
    with pytest.raises(ValueError):
        subsystem_hom(sub, OCT1, drop_nodes={"c"})


def test_search_hom_finds_identity():
    h = search_hom(OCT1, OCT1)
    assert h is not None and verify_hom(OCT1, OCT1, h)


def test_search_hom_none_into_small_target():
    assert search_hom(OCT1, ps("ace", "adf")) is None


def test_search_hom_budget_error():
    big = ps("abcdefghijk")
    with pytest.raises(ValueError):
        search_hom(big, big)


def test_search_hom_finds_subsystem_embedding():
    sub = subsystem(OCT1, drop_nodes={"d"})
    h = search_hom(sub, OCT1)
    assert h is not None and verify_hom(sub, OCT1, h)


def test_compose_identity_is_identity():
    h = identity_hom(OCT1)
    assert compose(h, h).phi == h.phi


def test_compose_subsystem_chain():
    s3 = OCT1
    s2 = subsystem(s3, drop_paths={("b", "c", "f")})
    s1 = subsystem(s2, drop_paths={("b", "d", "e")})
    h12 = subsystem_hom(s1, s2, drop_paths={("b", "d", "e")})
    h23 = subsystem_hom(s2, s3, drop_paths={("b", "c", "f")})
    h13 = compose(h12, h23)
    assert verify_hom(s1, s3, h13)


def test_compose_domain_mismatch():
    h = identity_hom(OCT1)
    g = identity_hom(ps("abc"))
    with pytest.raises(ValueError):
        compose(h, g)


def test_compose_random_verified_chains():
    rng = random.Random(12)
    done = 0
    while done < 20:
        sup = random_semisimple_system(rng, max_nodes=6, max_paths=4)
        drop_p = set(rng.sample(sup.name_paths(),
                                rng.randint(0, max(0, len(sup.paths) - 1))))
        try:
            mid = subsystem(sup, drop_paths=drop_p)
            h23 = subsystem_hom(mid, sup, drop_paths=drop_p)
            droppable = [v for v in mid.names
                         if all(len([x for x in p if x != v]) >= 1
                                for p in mid.name_paths())]
            drop_n = set(rng.sample(droppable, min(1, len(droppable)))) \
                if rng.random() < 0.5 and droppable else set()
            low = subsystem(mid, drop_nodes=drop_n)
            h12 = subsystem_hom(low, mid, drop_nodes=drop_n)
        except ValueError:
            continue
        h13 = compose(h12, h23)
        assert verify_hom(low, sup, h13)
        done += 1


def test_transfer_weights_identity():
    s = ps("ace", "adf", "bde")
    g = witness_weights(s).graph
    out = transfer_weights(s, s, identity_hom(s), g)
    assert verify_witness(s, out)


def test_transfer_weights_subsystem():
    s2 = ps("ace", "adf", "bde")
    g2 = witness_weights(s2).graph
    s1 = subsystem(s2, drop_paths={("b", "d", "e")})
    h = subsystem_hom(s1, s2, drop_paths={("b", "d", "e")})
    out = transfer_weights(s1, s2, h, g2)
    assert verify_witness(s1, out)


def test_transfer_weights_rejects_non_witness():
    s = ps("ace", "adf", "bde")
    from pathsys.graphalg import WeightedDigraph
    bad = WeightedDigraph.from_named_edges([(u, v, F(1)) for u, v in
                                            [("a", "c"), ("c", "e"), ("a", "d"),
                                             ("d", "e"), ("d", "f"), ("b", "d")]])
    with pytest.raises(ValueError):
        transfer_weights(s, s, identity_hom(s), bad)


def test_transfer_weights_random_usp_targets():
    rng = random.Random(5)
    done = 0
    while done < 10:
        g = random_positive_graph(rng, rng.randint(4, 6), density=0.5)
        s2 = extract_usp_system(g)
        if len(s2.paths) < 2:
            continue
        if not verify_witness(s2, g):
            continue
        drop = {rng.choice(s2.name_paths())}
        try:
            s1 = subsystem(s2, drop_paths=drop)
        except ValueError:
            continue
        h = subsystem_hom(s1, s2, drop_paths=drop)
        out = transfer_weights(s1, s2, h, g)
        assert verify_witness(s1, out)
        done += 1


def _brute_force_no_hom(s1, s2) -> bool:
    """Independent exhaustive check that no homomorphism exists."""
    from itertools import product
    paths1 = s1.name_paths()
    paths2 = s2.name_paths()
    for phi_vals in product(s2.names, repeat=len(s1.names)):
        phi = dict(zip(s1.names, phi_vals))
        cand_lists = []
        for p in paths1:
            img = tuple(phi[v] for v in p)
            cands = [q for q in paths2
                     if _subseq(img, q)]
            if not cands:
                break
            cand_lists.append(cands)
        else:
            for rho_vals in product(*cand_lists):
                h = Homomorphism(s1, s2, phi, dict(zip(paths1, rho_vals)))
                if verify_hom(s1, s2, h):
                    return False
    return True


def _subseq(small, big):
    it = iter(big)
    return all(v in it for v in small)


def test_search_hom_none_results_cross_checked_by_brute_force():
    pairs = [
        (ps("abd", "acd"), ps("abcd")),   # branching cannot survive
        (ps("ab", "ba"), ps("abc")),      # a two-cycle cannot embed forward
    ]
    for s1, s2 in pairs:
        assert search_hom(s1, s2) is None
        assert _brute_force_no_hom(s1, s2)
