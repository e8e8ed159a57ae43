import random
from math import factorial

import pytest
from hypothesis import given, settings, strategies as st

from hyperstar.groups import (
    CapExceeded,
    PermGroup,
    closure,
    equal_groups,
    identify_small,
    ident,
    inv,
    is_normal,
    mul,
    perm_order,
    verify_semidirect,
)
from oracles import brute_closure


def cyc(n, shift=1):
    return tuple((i + shift) % n for i in range(n))


def swap(n, a, b):
    p = list(range(n))
    p[a], p[b] = b, a
    return tuple(p)


@st.composite
def random_group(draw, max_degree=7, max_gens=3):
    n = draw(st.integers(1, max_degree))
    gens = draw(st.lists(st.permutations(list(range(n))).map(tuple), min_size=0, max_size=max_gens))
    return n, gens


@settings(max_examples=60, deadline=None)
@given(random_group())
def test_chain_order_equals_closure(case):
    n, gens = case
    g = PermGroup(n, gens)
    elems = brute_closure(gens, n)
    assert g.order == len(elems) == len(closure(gens, n))
    assert set(g.elements()) == elems


@settings(max_examples=60, deadline=None)
@given(random_group(), st.data())
def test_membership(case, data):
    n, gens = case
    g = PermGroup(n, gens)
    elems = brute_closure(gens, n)
    x = data.draw(st.permutations(list(range(n))).map(tuple))
    assert g.contains(x) == (x in elems)


@settings(max_examples=40, deadline=None)
@given(random_group(), st.data())
def test_orbit_stabilizer(case, data):
    n, gens = case
    g = PermGroup(n, gens)
    p = data.draw(st.integers(0, n - 1))
    stab = g.stabilizer(p)
    assert len(g.orbit(p)) * stab.order == g.order
    assert all(x[p] == p for x in stab.elements())


@settings(max_examples=30, deadline=None)
@given(random_group(max_degree=6), st.data())
def test_pointwise_stabilizer_brute(case, data):
    n, gens = case
    g = PermGroup(n, gens)
    pts = data.draw(st.lists(st.integers(0, n - 1), max_size=3, unique=True))
    want = {x for x in brute_closure(gens, n) if all(x[i] == i for i in pts)}
    assert set(g.pointwise_stabilizer(pts).elements()) == want


def test_symmetric_and_alternating_orders():
    for n in range(2, 8):
        assert PermGroup(n, [cyc(n), swap(n, 0, 1)]).order == factorial(n)
    three_cycles = [tuple([1, 2, 0] + list(range(3, 6))), tuple([0, 2, 3, 1, 4, 5]),
                    tuple([0, 1, 3, 4, 2, 5]), tuple([0, 1, 2, 4, 5, 3])]
    assert PermGroup(6, three_cycles).order == factorial(6) // 2


def test_mul_convention():
    g, h = cyc(4), swap(4, 0, 1)
    assert mul(g, h) == tuple(g[h[i]] for i in range(4))
    assert mul(g, inv(g)) == ident(4)
    assert perm_order(cyc(6)) == 6


def test_regularity_and_orbits():
    c6 = PermGroup(6, [cyc(6)])
    assert c6.is_regular() and c6.is_transitive() and c6.is_semiregular()
    two = PermGroup(6, [(1, 0, 3, 2, 5, 4)])
    assert two.is_semiregular() and not two.is_transitive()
    assert sorted(map(sorted, two.orbits())) == [[0, 1], [2, 3], [4, 5]]


def test_identify_small():
    assert str(identify_small(PermGroup(6, [cyc(6)]))) == "Z6"
    refl = tuple((-i) % 6 for i in range(6))
    d12 = identify_small(PermGroup(6, [cyc(6), refl]))
    assert (d12.kind, d12.order) == ("dihedral", 12)
    s3 = identify_small(PermGroup(3, [cyc(3), swap(3, 0, 1)]))
    assert s3.kind == "symmetric3" and not s3.abelian
    assert identify_small(PermGroup(4, [cyc(4), swap(4, 0, 1)])).kind == "other"
    klein = PermGroup(4, [(1, 0, 3, 2), (2, 3, 0, 1)])
    assert identify_small(klein).kind == "dihedral"  # D4 = Z2 x Z2


def test_normality_and_semidirect():
    s4 = PermGroup(4, [cyc(4), swap(4, 0, 1)])
    v4 = PermGroup(4, [(1, 0, 3, 2), (2, 3, 0, 1)])
    s3 = PermGroup(4, [(1, 2, 0, 3), swap(4, 0, 1)])
    assert is_normal(v4, s4)
    assert not is_normal(s3, s4)
    assert verify_semidirect(s4, v4, s3)
    with pytest.raises(ValueError):
        verify_semidirect(s3, v4, s3)


def test_equal_groups():
    a = PermGroup(5, [cyc(5), swap(5, 0, 1)])
    b = PermGroup(5, [swap(5, i, i + 1) for i in range(4)])
    assert equal_groups(a, b)
    assert not equal_groups(a, PermGroup(5, [cyc(5)]))


def test_element_cap():
    s8 = PermGroup(8, [cyc(8), swap(8, 0, 1)])
    with pytest.raises(CapExceeded):
        s8.elements(cap=1000)
    with pytest.raises(CapExceeded):
        closure(s8.generators, 8, cap=1000)


def test_bad_generators():
    with pytest.raises(ValueError):
        PermGroup(3, [(0, 1)])
    with pytest.raises(ValueError):
        PermGroup(3, [(0, 0, 1)])


def test_deterministic_elements():
    rng = random.Random(5)
    gens = [tuple(rng.sample(range(7), 7)) for _ in range(2)]
    assert PermGroup(7, gens).elements() == PermGroup(7, gens).elements()
