import math
from math import comb

import networkx as nx
import pytest
from hypothesis import given, settings, strategies as st

from hyperstar import graphs, subsets
from oracles import as_labels, brute_graph, cycles_through

NK = [(n, k) for n in range(3, 9) for k in range(1, n)]


def to_nx(g):
    h = nx.Graph()
    h.add_nodes_from(range(len(g)))
    h.add_edges_from(g.edges())
    return h


def label_edges(g):
    return {frozenset((subsets.elements(g.masks[u]), subsets.elements(g.masks[v])))
            for u, v in g.edges()}


@pytest.mark.parametrize("n,k", NK)
def test_edges_match_set_definition(n, k):
    g = graphs.build(n, k)
    assert label_edges(g) == as_labels(brute_graph(n, k))
    assert g.num_edges == graphs.expected_edge_count(n, k)


@pytest.mark.parametrize("k", [2, 3, 4])
def test_folded_edges_match_set_definition(k):
    f = graphs.build(2 * k, k, folded=True)
    assert label_edges(f) == as_labels(brute_graph(2 * k, k, folded=True))


@pytest.mark.parametrize("k", [2, 3, 4])
def test_bitstring_rule_agrees(k):
    n = 2 * k
    g = graphs.build(n, k)
    for v in range(len(g)):
        bits = subsets.to_bitstring(g.masks[v], n)
        want = sorted(g.rank_of(subsets.from_bitstring(b)[0])
                      for b in subsets.bitstring_neighbors(bits))
        assert list(g.neighbors(v)) == want


@pytest.mark.parametrize("k", [2, 3, 4])
def test_regular_degrees_and_bipartition(k):
    g = graphs.build(2 * k, k)
    f = graphs.build(2 * k, k, folded=True)
    assert {g.degree(v) for v in range(len(g))} == {k}
    assert {f.degree(v) for v in range(len(f))} == {k + 1}
    p1, p2 = graphs.bipartition(f)
    assert len(p1) == len(p2) == comb(2 * k - 1, k - 1)
    assert all((u in p1) != (v in p1) for u, v in f.edges())


def test_hs42_is_c6_and_fhs42_is_k33():
    g = graphs.build(4, 2)
    f = graphs.build(4, 2, folded=True)
    assert nx.is_isomorphic(to_nx(g), nx.cycle_graph(6))
    assert nx.is_isomorphic(to_nx(f), nx.complete_bipartite_graph(3, 3))


@pytest.mark.parametrize("n,k", NK)
def test_metrics_match_networkx(n, k):
    g = graphs.build(n, k)
    h = to_nx(g)
    connected = nx.is_connected(h)
    assert graphs.is_connected(g) == connected
    if connected:
        assert graphs.diameter(g) == nx.diameter(h)
    else:
        assert graphs.diameter(g) == math.inf
    want_girth = nx.girth(h)
    assert graphs.girth(g) == (None if want_girth == math.inf else want_girth)
    assert graphs.edge_connectivity(g) == (nx.edge_connectivity(h) if connected else 0)


@pytest.mark.parametrize("k", [2, 3, 4])
def test_folded_metrics_match_networkx(k):
    f = graphs.build(2 * k, k, folded=True)
    h = to_nx(f)
    assert graphs.girth(f) == nx.girth(h) == 4
    assert graphs.diameter(f) == nx.diameter(h) == k
    if k <= 3:
        assert graphs.edge_connectivity(f) == nx.edge_connectivity(h) == k + 1


def test_degenerate_cases_are_values():
    # k=1 gives a star: a tree, so no girth
    g = graphs.build(5, 1)
    assert graphs.girth(g) is None
    assert graphs.is_connected(g)
    # k = n-1 is also a star centred at {2..n}
    assert graphs.girth(graphs.build(5, 4)) is None


def test_build_errors():
    for args in [(2, 1), (6, 0), (6, 6), (63, 3)]:
        with pytest.raises(ValueError):
            graphs.build(*args)
    with pytest.raises(ValueError):
        graphs.build(7, 3, folded=True)


def test_cycles_through_path_matches_brute_count():
    g = graphs.build(6, 3)
    f = graphs.build(6, 3, folded=True)
    for gr, folded in ((g, False), (f, True)):
        h = brute_graph(6, 3, folded)
        node = {v: frozenset(subsets.elements(gr.masks[v])) for v in range(len(gr))}
        for path in graphs.simple_paths(gr, 3)[:40]:
            mine = graphs.cycles_through_path(gr, path, 6)
            assert mine == cycles_through(h, [node[v] for v in path], 6)
        for e in gr.edges()[:20]:
            assert graphs.cycles_through_path(gr, e, 4) == cycles_through(h, [node[v] for v in e], 4)


def test_cycles_through_path_edge_cases():
    g = graphs.build(4, 2)
    with pytest.raises(ValueError):
        graphs.cycles_through_path(g, (0,), 6)
    assert graphs.cycles_through_path(g, (0, g.neighbors(0)[0]), 2) == 0
    path = graphs.simple_paths(g, 2)[0]
    assert graphs.cycles_through_path(g, path, 6) == 1
    with pytest.raises(ValueError):
        graphs.check_path(g, (0, 0))


def test_simple_paths_count():
    # girth > L in a d-regular graph: n*d*(d-1)^(L-1) directed paths of length L
    g = graphs.build(6, 3)
    paths = graphs.simple_paths(g, 3)
    assert len(paths) == 20 * 3 * 2 * 2
    assert len({min(p, p[::-1]) for p in paths}) == len(paths) // 2


def test_exports_are_stable():
    g = graphs.build(6, 3)
    text = graphs.to_edgelist(g)
    assert text == graphs.to_edgelist(graphs.build(6, 3))
    assert len(text.splitlines()) == 30
    dot = graphs.to_dot(graphs.build(4, 2))
    assert dot.count(" -- ") == 6
    assert dot.count(";") == 12


@settings(max_examples=25, deadline=None)
@given(st.integers(3, 9).flatmap(lambda n: st.tuples(st.just(n), st.integers(1, n - 1))))
def test_edge_count_formula(nk):
    n, k = nk
    g = graphs.build(n, k)
    assert g.num_edges == comb(n - 1, k - 1) * (n - k)
    # every edge crosses the bipartition
    assert all(g.in_first_part(u) != g.in_first_part(v) for u, v in g.edges())


def test_folded_three_path_counterexample():
    # 123-234-124-356 lies in three 6-cycles of FHS(6,3), e.g. via 135-235
    # and via 156-456; brute enumeration agrees.
    f = graphs.build(6, 3, folded=True)
    path = [f.vertex(map(int, s)) for s in ("123", "234", "124", "356")]
    h = brute_graph(6, 3, folded=True)
    nodes = [frozenset(map(int, s)) for s in ("123", "234", "124", "356")]
    assert graphs.cycles_through_path(f, path, 6) == cycles_through(h, nodes, 6) == 3
    # the same shape at k=4 has a unique 6-cycle
    f4 = graphs.build(8, 4, folded=True)
    p4 = [f4.vertex(map(int, s)) for s in ("1234", "2345", "1245", "3678")]
    assert graphs.cycles_through_path(f4, p4, 6) == 1
