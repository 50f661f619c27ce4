from math import factorial

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from rowvac import roots as rs
from rowvac.weyl import (
    CapacityError,
    WeylElement,
    WeylGroup,
    abs_leq,
    fixed_space_dim_numeric,
    format_cycles,
    p_sequence,
    parse_cycles,
    q_sequence,
    simple_reflection,
)

SMALL = [("A", 2), ("A", 3), ("A", 4), ("B", 2), ("B", 3), ("C", 3), ("D", 4)]


@st.composite
def signed_permutations(draw, n=5):
    perm = draw(st.permutations(range(1, n + 1)))
    signs = draw(st.lists(st.sampled_from((1, -1)), min_size=n, max_size=n))
    return WeylElement("S", tuple(s * p for s, p in zip(signs, perm)))


@settings(max_examples=100)
@given(signed_permutations(), signed_permutations(), signed_permutations())
def test_group_laws(u, v, w):
    assert (u * v) * w == u * (v * w)
    assert (u * u.inverse()).is_identity
    assert (u * v).inverse() == v.inverse() * u.inverse()
    assert u(-3) == -u(3)


@settings(max_examples=100)
@given(signed_permutations(n=6))
def test_fixed_space_matches_linear_algebra(w):
    assert w.fixed_space_dim() == fixed_space_dim_numeric(w)


@given(st.permutations(range(1, 7)))
def test_type_a_fixed_space_matches_linear_algebra(perm):
    w = WeylElement("A", tuple(perm))
    assert w.fixed_space_dim() == fixed_space_dim_numeric(w)


@settings(max_examples=50)
@given(signed_permutations())
def test_cycle_text_round_trip(w):
    assert parse_cycles(format_cycles(w), 5, signed=True) == w


@pytest.mark.parametrize("family,rank", SMALL)
def test_orders_and_reflections(family, rank):
    W = WeylGroup(family, rank)
    elems = list(W.elements())
    assert len(elems) == len(set(elems)) == W.order
    assert len(W.reflections) == rs.build(family, rank).size
    assert all(W.contains(w) for w in elems)


def test_group_order_formulas():
    assert WeylGroup("A", 4).order == factorial(5)
    assert WeylGroup("C", 3).order == 2**3 * factorial(3)
    assert WeylGroup("D", 5).order == 2**4 * factorial(5)


@pytest.mark.parametrize("family,rank", [("A", 3), ("B", 3), ("D", 4)])
def test_absolute_length_is_reflection_distance(family, rank):
    W = WeylGroup(family, rank)
    for w, d in W.reflection_length_bfs().items():
        assert w.absolute_length() == d


def test_bipartite_coxeter_cycles():
    assert format_cycles(WeylGroup("A", 2).c) == "(1,2,3)"
    W9 = WeylGroup("A", 9)
    assert format_cycles(W9.c) == "(1,2,4,6,8,10,9,7,5,3)"
    assert p_sequence(9) == [2, 4, 6, 8, 10, 9, 7, 5, 3, 1]
    W6 = WeylGroup("D", 6)
    q = q_sequence(6)
    assert q == [2, 4, -5, -3, -1, -2, -4, 5, 3, 1]
    assert all(W6.c(q[k]) == q[(k + 1) % 10] for k in range(10))
    assert W6.c(6) == -6
    assert W6.L == (1, 3, 5, 6)


def test_example_permutation_length():
    w = parse_cycles("(1,10)(2,4,8)(3,9,7)", 10)
    assert w.absolute_length() == 5


def test_simple_reflections():
    assert format_cycles(simple_reflection("D", 6, 6)) == "(5,-6)(-5,6)"
    assert format_cycles(simple_reflection("C", 3, 3)) == "(3,-3)"
    assert format_cycles(simple_reflection("A", 3, 2)) == "(2,3)"


@pytest.mark.parametrize("family,rank", SMALL + [("A", 5), ("D", 5)])
def test_nc_lattice_counts(family, rank):
    NC = WeylGroup(family, rank).nc_lattice()
    P = rs.build(family, rank)
    assert len(NC) == rs.catalan(P)
    assert NC.rank_counts() == rs.narayana(P)
    assert NC.kreweras_order in (P.coxeter_h, 2 * P.coxeter_h)


@pytest.mark.parametrize("family,rank", [("A", 3), ("B", 3), ("D", 4)])
def test_kreweras_and_flip(family, rank):
    NC = WeylGroup(family, rank).nc_lattice()
    E = NC.elements
    for w in E:
        assert NC.flip(NC.flip(w)) == w
        assert NC.flip(NC.kreweras(w)) == NC.kreweras_inverse(NC.flip(w))
        assert NC.kreweras_inverse(NC.kreweras(w)) == w
    for u, w in NC.covers():
        assert NC.leq(NC.kreweras(w), NC.kreweras(u))
        assert NC.leq(NC.flip(u), NC.flip(w))
    assert NC.flip(NC.c) == NC.c


def test_abs_leq():
    W = WeylGroup("A", 3)
    assert abs_leq(W.e, W.c)
    assert not abs_leq(W.c, W.e)


def test_capacity_and_errors():
    with pytest.raises(CapacityError):
        list(WeylGroup("D", 6, capacity=1000).elements())
    with pytest.raises(ValueError):
        WeylGroup("E", 6)
    with pytest.raises(ValueError):
        WeylElement("A", (1, 2))(-1)
    with pytest.raises(ValueError):
        parse_cycles("(1,1)", 3)
    W = WeylGroup("A", 2)
    with pytest.raises(ValueError):
        W.nc_lattice().kreweras(W.c.inverse())
