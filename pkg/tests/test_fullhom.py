import random

import pytest

from fullcolour.errors import DomainError
from fullcolour.fullhom import (
    full_hom_brute,
    full_hom_exists,
    full_hom_witness,
    is_blowup_by_forbidden,
    is_blowup_of_linear_forest,
    is_full_homomorphism,
)
from fullcolour.graph_core import (
    complete,
    cycle,
    delete_vertex,
    empty,
    is_isomorphic,
    make_named,
    parse_graph_name,
    path,
)
from fullcolour.pd_core import full_core, is_linear_forest, is_point_determining

from oracles import brute_full_hom, random_graph


def test_examples():
    w = full_hom_witness(cycle(4), path(3))
    assert w is not None and w.is_valid(cycle(4), path(3))
    assert full_hom_witness(parse_graph_name("K_1+P_4"), cycle(5)) is None
    g = make_named("E")
    assert full_hom_witness(g, g).assignment == tuple(range(6))


def test_brute_examples():
    assert full_hom_brute(empty(2), complete(1))
    assert not full_hom_brute(complete(2), complete(1))
    with pytest.raises(DomainError):
        full_hom_brute(path(8), path(3))


def test_witness_is_deterministic():
    g, h = parse_graph_name("2K_2"), cycle(6)
    assert full_hom_witness(g, h) == full_hom_witness(g, h)


def test_is_full_homomorphism_rejects_bad_maps():
    assert not is_full_homomorphism(complete(2), complete(2), (0, 0))
    assert not is_full_homomorphism(empty(2), complete(2), (0, 1))
    assert not is_full_homomorphism(empty(2), complete(2), (0, 2))
    assert is_full_homomorphism(empty(2), complete(2), (1, 1))


def test_agrees_with_independent_brute_force(graphs_upto_7):
    small = [g for g in graphs_upto_7 if g.n <= 4]
    hosts = [h for h in graphs_upto_7 if h.n <= 4]
    for g in small:
        for h in hosts:
            ref = brute_full_hom(g, h)
            assert full_hom_exists(g, h) == ref
            assert full_hom_brute(g, h) == ref


def test_witnesses_valid_and_injective_on_pd_sources(graphs_upto_7):
    rng = random.Random(9)
    hosts = [h for h in graphs_upto_7 if h.n >= 4]
    for g in rng.sample(graphs_upto_7, 300):
        h = rng.choice(hosts)
        w = full_hom_witness(g, h)
        assert (w is not None) == full_hom_exists(g, h)
        if w is None:
            continue
        assert w.is_valid(g, h)
        if is_point_determining(g):
            assert len(set(w.assignment)) == g.n


def test_hereditary_on_random_pairs():
    rng = random.Random(13)
    checked = 0
    while checked < 1000:
        g = random_graph(rng, rng.randint(2, 8), rng.choice([0.2, 0.4, 0.6]))
        h = random_graph(rng, rng.randint(2, 8), rng.choice([0.3, 0.5]))
        if not full_hom_exists(g, h):
            continue
        checked += 1
        for v in range(g.n):
            assert full_hom_exists(delete_vertex(g, v), h)


def test_blowup_examples():
    assert is_blowup_of_linear_forest(cycle(4))
    res = is_blowup_of_linear_forest(cycle(5))
    assert not res and is_isomorphic(res.obstruction, cycle(5))
    res = is_blowup_of_linear_forest(make_named("B"))
    assert not res and is_isomorphic(res.obstruction, make_named("B"))
    assert is_blowup_of_linear_forest(parse_graph_name("K_1+2K_2"))


def test_blowup_recognizers_agree(graphs_upto_7):
    for g in graphs_upto_7:
        a = is_blowup_of_linear_forest(g)
        assert bool(a) == is_blowup_by_forbidden(g)
        assert bool(a) == is_linear_forest(full_core(g)[0])
        if not a:
            assert a.obstruction is not None
