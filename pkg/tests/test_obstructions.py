import itertools

import pytest

from fullcolour.errors import PreconditionError, UnsupportedOrder
from fullcolour.fullhom import full_hom_exists
from fullcolour.graph_core import (
    canonical_form,
    complete,
    cycle,
    delete_vertex,
    disjoint_union,
    is_connected,
    is_isomorphic,
    is_vertex_transitive,
    make_named,
    parse_graph_name,
    path,
)
from fullcolour.obstructions import (
    ObstructionSet,
    check_obs_transfer,
    construct_witness_host,
    is_minimal_obstruction,
    obs_oracle,
    obs_star_existence_regular,
    obs_star_hosts,
    obs_star_oracle,
)
from fullcolour.pd_core import full_core, is_point_determining, true_twins

from oracles import brute_minimal_obstruction, induced


def keys(graphs):
    return {canonical_form(g) for g in graphs}


def named(*names):
    return keys(parse_graph_name(x) for x in names)


@pytest.fixture(scope="module")
def hosts_upto_5(graphs_upto_7):
    return [g for g in graphs_upto_7 if g.n <= 5]


def test_minimality_examples():
    a, e = make_named("A"), make_named("E")
    assert is_minimal_obstruction(a, path(6)) and not is_minimal_obstruction(a, path(5))
    assert is_minimal_obstruction(e, path(7)) and not is_minimal_obstruction(e, path(6))
    for n in range(3, 11):
        assert not is_minimal_obstruction(cycle(4), path(n))


def test_single_deletions_suffice(graphs_upto_7):
    cands = [g for g in graphs_upto_7 if g.n <= 5]
    hosts = [h for h in graphs_upto_7 if h.n <= 4]
    for g in cands:
        for h in hosts:
            every_subset = not full_hom_exists(g, h) and all(
                full_hom_exists(induced(g, keep), h)
                for k in range(1, g.n) for keep in itertools.combinations(range(g.n), k))
            assert is_minimal_obstruction(g, h) == every_subset


def test_oracle_against_independent_brute_force(graphs_upto_7):
    for h in (g for g in graphs_upto_7 if g.n <= 3):
        ref = [g for g in graphs_upto_7 if g.n <= h.n + 1 and brute_minimal_obstruction(g, h)]
        assert obs_oracle(h).keys() == keys(ref)


def test_oracle_examples():
    assert obs_oracle(complete(2)).keys() == named("K_1+K_2", "K_3")
    assert len(obs_star_oracle(cycle(5))) == 0
    assert obs_oracle(cycle(5)).keys() == named("C_3", "2K_2", "K_1+P_4")
    assert obs_oracle(path(1)).keys() == named("K_2")


def test_obstruction_set_invariants(hosts_upto_5):
    for h in hosts_upto_5:
        res = obs_oracle(h)
        ks = [k for k, _ in res.members]
        assert ks == sorted(set(ks))
        for k, g in res.members:
            assert canonical_form(g) == k
            assert g.n <= h.n + 1 and is_point_determining(g)
            assert g in res


def test_strategies_agree(hosts_upto_5, graphs_upto_7):
    for h in hosts_upto_5 + [g for g in graphs_upto_7 if g.n == 6][::9]:
        pruned = obs_oracle(h)
        assert pruned.same_members(obs_oracle(h, strategy="exhaustive"))
        star = obs_star_oracle(h)
        assert star.keys() == {k for k, g in pruned.members if g.n == h.n + 1}


def test_catalog_and_workers_give_same_result(graphs_upto_7):
    h = cycle(5)
    ref = obs_oracle(h)
    catalog = [g for g in graphs_upto_7 if g.n <= 6]
    assert obs_oracle(h, catalog=catalog).same_members(ref)
    assert obs_oracle(h, strategy="exhaustive", workers=2).same_members(ref)


def test_oracle_rejects_large_hosts():
    with pytest.raises(UnsupportedOrder):
        obs_oracle(path(10))
    with pytest.raises(ValueError):
        obs_oracle(path(3), strategy="magic")


def test_from_graphs_dedupes():
    s = ObstructionSet.from_graphs(path(3), [cycle(3), complete(3), path(2)])
    assert len(s) == 2


# structure of obs* -----------------------------------------------------------

def test_star_members_extend_the_host(hosts_upto_5):
    for h in hosts_upto_5:
        star = obs_star_oracle(h)
        assert len(star) <= 2
        for g in star:
            assert any(is_isomorphic(delete_vertex(g, v), h) for v in range(g.n))


def test_host_is_determined_small(graphs_upto_7):
    # full cross product, independent of the deletion shortcut
    for g in (x for x in graphs_upto_7 if 2 <= x.n <= 6 and is_point_determining(x)):
        hosts = [h for h in graphs_upto_7 if h.n == g.n - 1 and is_minimal_obstruction(g, h)]
        assert len(hosts) <= 1
        assert keys(hosts) == keys(obs_star_hosts(g))


def test_host_is_determined_up_to_8(pd_upto_8):
    for g in pd_upto_8:
        if g.n >= 2:
            assert len(obs_star_hosts(g)) <= 1


def test_complete_hosts():
    assert obs_star_oracle(complete(2)).keys() == named("K_1+K_2", "K_3")
    for n in range(3, 7):
        assert obs_star_oracle(complete(n)).keys() == keys([complete(n + 1)])


def test_true_twins_in_star_of_regular_hosts(graphs_upto_7):
    for h in graphs_upto_7:
        if h.n < 3 or not h.is_regular() or not is_connected(h):
            continue
        for g in obs_star_oracle(h):
            assert any(is_isomorphic(delete_vertex(g, u), h) and is_isomorphic(delete_vertex(g, v), h)
                       for u, v in true_twins(g))


def test_vertex_transitive_hosts(graphs_upto_8):
    for h in graphs_upto_8:
        if h.n < 3 or not is_connected(h) or h.edge_count == h.n * (h.n - 1) // 2:
            continue
        if not is_vertex_transitive(h):
            continue
        for x in (0, h.n - 1):
            lower = obs_oracle(delete_vertex(h, x)).keys()
            assert obs_oracle(h).keys() == lower - {canonical_form(h)}


# transfer --------------------------------------------------------------------

def test_transfer_examples():
    rep = check_obs_transfer(path(4), cycle(5))
    assert rep.holds
    rep = check_obs_transfer(complete(2), complete(3))
    assert rep.holds
    assert set(rep.lhs) == named("K_1+K_2", "K_4")
    with pytest.raises(PreconditionError):
        check_obs_transfer(cycle(5), cycle(6))


def test_transfer_holds_for_small_hosts(graphs_upto_7):
    for h in (x for x in graphs_upto_7 if x.n <= 5):
        for g in obs_star_oracle(h):
            assert check_obs_transfer(h, g).holds


# witness hosts ---------------------------------------------------------------

def test_witness_host_examples():
    host = construct_witness_host(path(4))
    assert host.n == 10 and is_isomorphic(host, parse_graph_name("2K_1+4K_2"))
    assert is_isomorphic(construct_witness_host(complete(2)), parse_graph_name("2K_1"))
    assert is_isomorphic(construct_witness_host(cycle(5)), parse_graph_name("5P_4"))
    with pytest.raises(PreconditionError):
        construct_witness_host(path(3))
    with pytest.raises(PreconditionError):
        construct_witness_host(parse_graph_name("2K_2"))


def test_witness_host_property(pd_upto_8):
    for g in pd_upto_8:
        if 2 <= g.n <= 6 and is_connected(g):
            host = construct_witness_host(g)
            expected = disjoint_union([full_core(delete_vertex(g, x))[0] for x in range(g.n)])
            assert host == expected
            assert is_minimal_obstruction(g, host)


def test_existence_examples():
    assert obs_star_existence_regular(cycle(6))
    assert obs_star_existence_regular(parse_graph_name("2K_2"))
    assert is_minimal_obstruction(parse_graph_name("2K_2"), parse_graph_name("K_1+K_2"))
    with pytest.raises(PreconditionError):
        obs_star_existence_regular(path(4))


def test_existence_matches_vertex_transitivity(graphs_upto_8):
    seen = 0
    for g in graphs_upto_8:
        if g.n >= 2 and g.is_regular() and is_point_determining(g):
            seen += 1
            assert obs_star_existence_regular(g) == is_vertex_transitive(g)
    assert seen > 20
