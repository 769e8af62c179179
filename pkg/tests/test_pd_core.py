import random

import pytest

from fullcolour.errors import DomainError, NotALinearForest
from fullcolour.graph_core import (
    Graph,
    complete,
    cycle,
    delete_vertex,
    empty,
    is_connected,
    is_isomorphic,
    make_named,
    parse_graph_name,
    path,
)
from fullcolour.pd_core import (
    LinearForestSpec,
    false_twins,
    full_core,
    is_linear_forest,
    is_point_determining,
    linear_forest_spec,
    mu,
    removable_vertices,
    true_twins,
)

from oracles import brute_injective_full_hom, is_full_hom, path_edges


def test_twin_examples():
    assert false_twins(cycle(4)) == [(0, 2), (1, 3)]
    assert true_twins(complete(3)) == [(0, 1), (0, 2), (1, 2)]
    assert false_twins(path(4)) == [] and true_twins(path(4)) == []


def test_point_determining_examples():
    assert not is_point_determining(path(3))
    assert not is_point_determining(empty(2))
    assert is_point_determining(make_named("A"))
    assert is_point_determining(complete(1))


def test_core_examples():
    core, cmap = full_core(cycle(4))
    assert is_isomorphic(core, complete(2))
    assert cmap.assignment == (0, 1, 0, 1)
    k23 = Graph.from_edges(5, [(u, v) for u in range(2) for v in range(2, 5)])
    assert is_isomorphic(full_core(k23)[0], complete(2))
    a = make_named("A")
    core, cmap = full_core(a)
    assert core == a and cmap.is_identity()
    assert full_core(complete(1))[0] == complete(1)
    assert full_core(empty(5))[0] == complete(1)


def test_core_is_point_determining_and_map_is_full_hom(graphs_upto_7):
    for g in graphs_upto_7:
        core, cmap = full_core(g)
        assert is_point_determining(core)
        assert cmap.source_order == g.n
        assert set(cmap.assignment) == set(range(core.n))
        assert is_full_hom(g, core, cmap.assignment)


def test_core_idempotent(graphs_upto_8):
    for g in graphs_upto_8:
        core, _ = full_core(g)
        again, cmap = full_core(core)
        assert again == core and cmap.is_identity()


def _random_collapse(g: Graph, rng: random.Random) -> Graph:
    while True:
        pairs = [(u, v) for u in range(g.n) for v in range(g.n)
                 if u != v and g.rows[u] == g.rows[v]]
        if not pairs:
            return g
        _, v = rng.choice(pairs)
        g = delete_vertex(g, v)


def test_core_invariant_under_merge_order(graphs_upto_7):
    rng = random.Random(5)
    for g in graphs_upto_7:
        if is_point_determining(g):
            continue
        ref = full_core(g)[0]
        for _ in range(2):
            assert is_isomorphic(_random_collapse(g, rng), ref)


def test_removable_examples():
    assert sorted(removable_vertices(cycle(5))) == list(range(5))
    assert removable_vertices(complete(1)) == []
    with pytest.raises(DomainError):
        removable_vertices(path(3))
    # P_4 minus an end is P_3; minus a middle vertex it is K_1+K_2
    assert sorted(removable_vertices(path(4))) == [1, 2]


def test_removable_vertices_exist(pd_upto_8):
    for g in pd_upto_8:
        if g.n < 2:
            continue
        rem = removable_vertices(g)
        assert rem
        assert len(rem) >= 2 or not is_connected(g)
        for v in range(g.n):
            assert (v in rem) == is_point_determining(delete_vertex(g, v))


def test_regular_pd_graphs_all_removable(pd_upto_8):
    for g in pd_upto_8:
        if g.n >= 2 and g.is_regular():
            assert sorted(removable_vertices(g)) == list(range(g.n))


def test_linear_forest_examples():
    assert linear_forest_spec(parse_graph_name("K_1+2K_2")) == LinearForestSpec.from_counts({1: 1, 2: 2})
    assert linear_forest_spec(parse_graph_name("3K_2")).multiplicities == ((2, 3),)
    with pytest.raises(NotALinearForest) as info:
        linear_forest_spec(cycle(4))
    assert info.value.component == (0, 1, 2, 3)
    claw = Graph.from_edges(4, [(0, 1), (0, 2), (0, 3)])
    assert not is_linear_forest(claw)
    assert str(LinearForestSpec.from_sizes([4, 1, 2])) == "K_1+K_2+P_4"


def test_spec_round_trip():
    spec = LinearForestSpec.from_sizes([1, 2, 2, 4, 6])
    assert spec.order == 15 and spec.components == 5 and spec.m(2) == 2
    assert linear_forest_spec(spec.to_graph()) == spec


def test_mu_examples():
    assert mu(linear_forest_spec(path(6))) == 6
    assert mu(LinearForestSpec.from_counts({1: 1, 2: 2})) == 7
    assert mu(LinearForestSpec.from_counts({2: 3})) == 8


def _partitions(n, largest=None):
    largest = largest or n
    if n == 0:
        yield []
        return
    for k in range(min(n, largest), 0, -1):
        for rest in _partitions(n - k, k):
            yield [k] + rest


@pytest.mark.parametrize("order", range(1, 7))
def test_mu_matches_brute_force(order):
    for sizes in _partitions(order):
        n, edges = path_edges(sizes)
        g = Graph.from_edges(n, edges)
        m = mu(linear_forest_spec(g))
        assert brute_injective_full_hom(g, path(m))
        if m > g.n:
            assert not brute_injective_full_hom(g, path(m - 1))
