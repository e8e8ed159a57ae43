import pytest
from math import factorial

import networkx as nx

from hyperstar import autsearch, graphs, perms
from hyperstar.groups import CapExceeded, closure, equal_groups, identify_small, verify_semidirect
from oracles import count_automorphisms, scan_count


def to_nx(g):
    h = nx.Graph()
    h.add_nodes_from(range(len(g)))
    h.add_edges_from(g.edges())
    return h


@pytest.fixture(scope="module")
def auts():
    out = {}
    for k in (2, 3, 4):
        for folded in (False, True):
            g = graphs.build(2 * k, k, folded)
            out[k, folded] = (g, autsearch.automorphism_group(g))
    return out


@pytest.mark.parametrize("k,folded", [(2, False), (2, True), (3, False), (3, True)])
def test_order_matches_networkx_count(auts, k, folded):
    g, a = auts[k, folded]
    assert a.order == count_automorphisms(to_nx(g))


@pytest.mark.parametrize("n,k", [(5, 2), (6, 2), (7, 3), (5, 1), (7, 2)])
def test_non_regular_orders_match_networkx(n, k):
    g = graphs.build(n, k)
    assert autsearch.automorphism_group(g).order == count_automorphisms(to_nx(g))


def test_scan_oracle_on_hs42():
    g = graphs.build(4, 2)
    assert autsearch.scan_automorphisms(g.adjacency) == scan_count(g.adjacency) == 12


def test_scan_refuses_large_graphs():
    with pytest.raises(CapExceeded):
        autsearch.scan_automorphisms(graphs.build(6, 3).adjacency)


@pytest.mark.parametrize("k", [2, 3, 4])
def test_order_formula_and_structure(auts, k):
    g, a = auts[k, False]
    assert a.order == 2 * factorial(2 * k - 1)
    st = autsearch.structured_group(k)
    assert equal_groups(a, st)
    n_grp = autsearch.induced_subgroup(k)
    q_grp = autsearch.complement_subgroup(k)
    assert n_grp.order == factorial(2 * k - 1) and q_grp.order == 2
    assert verify_semidirect(a, n_grp, q_grp)
    # every generator produced by the search is an automorphism
    assert all(perms.is_automorphism(x, g.adjacency) for x in a.generators)


@pytest.mark.parametrize("k", [2, 3])
def test_each_element_decomposes(auts, k):
    _, a = auts[k, False]
    for x in a.elements():
        d = perms.decompose(x, k)
        assert d is not None and perms.realize(d, k) == x


def test_folded_equality_and_k2_exception(auts):
    for k in (3, 4):
        assert equal_groups(auts[k, False][1], auts[k, True][1])
    assert auts[2, False][1].order == 12
    assert auts[2, True][1].order == 72
    assert not equal_groups(auts[2, False][1], auts[2, True][1])
    rep = autsearch.certify_equality(3, auts[3, False][1], auts[3, True][1])
    assert rep.hs_equals_fhs and rep.hs_equals_structured


def test_hs42_is_dihedral(auts):
    kind = identify_small(auts[2, False][1])
    assert (kind.kind, kind.order) == ("dihedral", 12)


@pytest.mark.parametrize("k", [2, 3, 4])
def test_transitivity(auts, k):
    g, a = auts[k, False]
    assert autsearch.is_vertex_transitive(g, a)
    assert autsearch.is_edge_transitive(g, a)
    assert autsearch.is_arc_transitive(g, a)
    f, b = auts[k, True]
    assert autsearch.is_vertex_transitive(f, b)
    if k >= 3:
        assert not autsearch.is_arc_transitive(f, b)
        orbits = autsearch.neighbor_orbits(f, b, 0)
        assert orbits[0] == {f.complement_of(0)}
        assert len(orbits) == 2 and len(orbits[1]) == k


@pytest.mark.parametrize("k", [3, 4])
def test_rigidity(auts, k):
    for folded in (False, True):
        g, a = auts[k, folded]
        for u, w in g.edges():
            if folded and w == g.complement_of(u):
                continue
            assert autsearch.L(g, a, u, w).order == 1


def test_stabilizer_bound_k3(auts):
    g, a = auts[3, False]
    for v in range(len(g)):
        for b in autsearch.stabilizer_bounds(g, a, v):
            assert b.holds
            assert b.stabilizer_order == 12


def test_stabilizer_chain_matches_closure(auts):
    for key in [(2, False), (2, True), (3, False), (3, True), (4, False)]:
        _, a = auts[key]
        assert a.order == len(closure(a.generators, a.degree))


def test_disconnected_graph_is_rejected():
    adj = [(1,), (0,), (3,), (2,)]
    with pytest.raises(ValueError):
        autsearch.automorphism_group_of(adj)


def test_vertex_cap():
    with pytest.raises(CapExceeded):
        autsearch.automorphism_group(graphs.build(12, 6))


def test_aut_report_is_deterministic(auts):
    g, a = auts[3, False]
    first = autsearch.aut_report_json(g, a)
    assert first == autsearch.aut_report_json(graphs.build(6, 3))
    rep = autsearch.aut_report(g, a)
    assert rep["aut_order"] == 240 and rep["groups_equal"] and rep["L_vw_trivial"]
