from math import comb

import pytest

from rowvac import roots as rs
from rowvac.poset import rowvacuation

# closed forms used as oracles, independent of the enumeration code
N_POSITIVE = {"A": lambda n: n * (n + 1) // 2, "B": lambda n: n * n, "C": lambda n: n * n, "D": lambda n: n * (n - 1)}
CATALAN = {
    "A": lambda n: comb(2 * n + 2, n + 1) // (n + 2),
    "B": lambda n: comb(2 * n, n),
    "C": lambda n: comb(2 * n, n),
    "D": lambda n: (3 * n - 2) * comb(2 * n - 2, n - 1) // n,
}
EXCEPTIONAL = {
    "G2": (6, 6, [2, 6], 8),
    "F4": (24, 12, [2, 6, 8, 12], 105),
    "E6": (36, 12, [2, 5, 6, 8, 9, 12], 833),
    "E7": (63, 18, [2, 6, 8, 10, 12, 14, 18], 4160),
    "E8": (120, 30, [2, 8, 12, 14, 18, 20, 24, 30], 25080),
}
CLASSICAL = [("A", n) for n in range(1, 8)] + [("B", n) for n in range(2, 7)] \
    + [("C", n) for n in range(2, 7)] + [("D", n) for n in range(4, 7)]


def classical_degrees(family, n):
    if family == "A":
        return list(range(2, n + 2))
    if family in "BC":
        return list(range(2, 2 * n + 1, 2))
    return sorted(list(range(2, 2 * n - 1, 2)) + [n])


@pytest.mark.parametrize("family,n", CLASSICAL)
def test_classical_counts(family, n):
    P = rs.build(family, n)
    assert P.size == N_POSITIVE[family](n)
    assert rs.degrees(P) == classical_degrees(family, n)
    assert rs.catalan(P) == CATALAN[family](n) == len(P.base.antichains())
    nar = rs.narayana(P)
    assert nar == nar[::-1]
    assert nar[0] == nar[-1] == 1


@pytest.mark.parametrize("label", sorted(EXCEPTIONAL))
def test_exceptional_counts(label):
    size, h, degs, cat = EXCEPTIONAL[label]
    P = rs.build(label)
    assert (P.size, P.coxeter_h, rs.degrees(P), rs.catalan(P)) == (size, h, degs, cat)
    if label != "E8":
        assert sum(rs.narayana(P)) == cat


@pytest.mark.parametrize("n", range(2, 8))
def test_narayana_closed_forms(n):
    # A_{n-1}: classical Narayana numbers; B_n: squared binomials
    assert rs.narayana(rs.build("A", n - 1)) == [comb(n, k) * comb(n, k + 1) // n for k in range(n)]
    assert rs.narayana(rs.build("B", n)) == [comb(n, k) ** 2 for k in range(n + 1)]


def test_narayana_small_cases():
    assert rs.narayana(rs.build("A2")) == [1, 3, 1]
    assert rs.narayana(rs.build("D4")) == [1, 12, 24, 12, 1]


def test_reducible_products():
    A2, B2 = rs.build("A2"), rs.build("B2")
    assert rs.catalan_reducible([A2, B2]) == 5 * 6
    assert rs.narayana_reducible([A2, A2]) == [1, 6, 11, 6, 1]


def test_build_label_forms():
    assert rs.build("D6") is rs.build("D", 6) is rs.build("d_6")
    for bad in ("Q3", "D3", "A0", "E5"):
        with pytest.raises(ValueError):
            rs.build(bad)


def test_simple_roots_are_minimal():
    for label in ("A5", "C4", "D5", "F4"):
        P = rs.build(label)
        assert sorted(P.simple) == list(P.base.minimal)
        assert len(P.base.maximal) == 1


def test_distinguished_subset_sizes():
    # A9: 5 in L, 9 in S; C5: 5 and 5; D6: 6 and 10
    assert (len(rs.build("A9").subset_L), len(rs.build("A9").subset_S)) == (5, 9)
    assert (len(rs.build("C5").subset_L), len(rs.build("C5").subset_S)) == (5, 5)
    assert (len(rs.build("D6").subset_L), len(rs.build("D6").subset_S)) == (6, 10)
    assert rs.build("A8").subset_S is None


def test_short_roots_of_b_are_s_of_c():
    for n in range(2, 6):
        assert rs.build("B", n).subset_S == rs.build("C", n).subset_S


def test_s_of_c_is_a_chain():
    for n in range(2, 6):
        P = rs.build("C", n)
        S = sorted(P.subset_S)
        assert all(P.base.leq(a, b) for a, b in zip(S, S[1:]))


def test_neg_w0_is_an_involutive_automorphism():
    for label in ("A5", "D5", "D6", "E6", "F4"):
        P = rs.build(label)
        f = P.neg_w0
        assert all(f[f[e]] == e for e in range(P.size))
        assert all(P.base.leq(f[x], f[y]) for x, y in P.base.covers)
    assert rs.build("D6").neg_w0 == tuple(range(rs.build("D6").size))


def test_unfolding_a_to_c():
    for n in range(2, 6):
        C, PA = rs.build("C", n), rs.build("A", 2 * n - 1)
        for A in C.base.antichains():
            B = rs.iota(C, A)
            assert PA.base.is_antichain(B)
            assert rs.eta_set(PA, B) == B
            assert rs.iota_inverse(PA, B) == A
            assert rs.iota(C, rowvacuation(C.base, A)) == rowvacuation(PA.base, B)


def test_gamma_preimages():
    for n in range(4, 7):
        D, C = rs.build("D", n), rs.build("C", n - 1)
        for b in range(C.size):
            pre = rs.gamma_preimage(D, (b,))
            assert len(pre) == (2 if b in C.subset_S else 1)
        assert all(rs.delta(D, rs.delta(D, x)) == x for x in range(D.size))


def test_lalanne_kreweras_example():
    assert rs.lalanne_kreweras(4, [(1, 3)]) == [(1, 3), (3, 4)]


@pytest.mark.parametrize("n", range(2, 9))
def test_lalanne_kreweras_matches_toggles(n):
    P = rs.build("A", n - 1)
    for A in P.base.antichains():
        assert P.from_intervals(rs.lalanne_kreweras(n, P.intervals(A))) == rowvacuation(P.base, A)


def test_interval_round_trip_and_errors():
    P = rs.build("A3")
    assert P.intervals(P.from_intervals([(1, 3), (2, 4)])) == [(1, 3), (2, 4)]
    with pytest.raises(ValueError):
        P.from_interval(3, 2)
    with pytest.raises(ValueError):
        rs.build("D4").interval(0)
