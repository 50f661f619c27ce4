import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from rowvac import bijection as bj
from rowvac import roots as rs
from rowvac.export import parse_antichain
from rowvac.weyl import WeylGroup, format_cycles

A9_EXAMPLE = [(1, 3), (2, 6), (3, 7), (4, 8), (5, 9), (8, 10)]
D6_EXAMPLE = "e1-e3, e2-e6, e3+e6, e4+e5"


@pytest.fixture(scope="module")
def a9():
    P = rs.build("A9")
    return P, P.from_intervals(A9_EXAMPLE)


@pytest.fixture(scope="module")
def d6():
    P = rs.build("D6")
    return P, parse_antichain(P, D6_EXAMPLE)


def test_psi_markings(a9):
    P, A = a9
    D = bj.psi_diagram(P, A)
    # [1,3] puts marking 1 on 3^(0), at position 2; 10 is no left end so 10^(1) is marked
    assert D.markings[2] == 1
    assert D.markings[10] == 10
    assert D.vertices[2] == (3, 0) and D.vertices[10] == (10, 1)


def test_theta_a_example(a9):
    P, A = a9
    w = bj.theta_A(P, A)
    assert format_cycles(w, fixed_points=True) == "(1,10)(2,4,8)(3,9,7)(5)(6)"
    assert w == bj.theta_uniform(P, A)


def test_reflection_through_m_example(a9):
    P, A = a9
    B = P.base.row_mask(P.base.rvac_mask(P.base.mask_of(A)))
    other = bj.phi_diagram_A(P, [e for e in range(P.size) if B >> e & 1])
    assert bj.reflect_through_M(bj.phi_diagram_A(P, A)) == other


@pytest.mark.parametrize("rank", range(1, 6))
def test_theta_a_agrees_with_uniform(rank):
    P = rs.build("A", rank)
    NC = WeylGroup("A", rank).nc_lattice()
    seen = set()
    for A in P.base.antichains():
        D = bj.phi_diagram_A(P, A)
        assert D.is_noncrossing()
        assert len(D.chords) == rank + 1
        w = bj.theta_A(P, A)
        assert w == bj.theta_uniform(P, A)
        assert w in NC
        seen.add(w)
    assert len(seen) == len(NC)


def test_hat_example(d6, a9):
    P, A = d6
    h = bj.hat(P, A)
    assert h.poset.intervals(h.unfolded) == [(1, 3), (2, 6), (3, 6), (4, 7), (5, 8), (5, 9), (8, 10)]
    assert h.q_intersection == ((2, 6), (3, 6), (4, 7), (5, 8), (5, 9))
    assert h.result == a9[1]


def test_removed_transverse_chords(d6):
    P, A = d6
    h = bj.hat(P, A)
    full = bj.phi_diagram_A(h.poset, h.result)
    xi = bj.xi_and_phi_D(P, A)
    dropped = sorted(full.chords - xi.chords)
    labels = {tuple(sorted((full.vertices[a], full.vertices[b]))) for a, b in dropped}
    assert labels == {((1, 1), (10, 0)), ((1, 0), (10, 1))}


def test_theta_d_partial_example(d6):
    P, A = d6
    part = bj.theta_D_partial(P, A)
    assert part.values[-3] == 2
    assert (part.x, part.y) == (1, 1)
    w = bj.theta_uniform(P, A)
    assert {w(1), w(-1)} == {6, -6}
    assert {w(6), w(-6)} == {1, -1}
    assert all(w(i) == j for i, j in part.values.items())
    assert all(part.values[-i] == -j for i, j in part.values.items())


def test_hat_commutes_on_example(d6):
    P, A = d6
    B, BA = P.base, rs.build("A9").base
    m = B.mask_of(A)
    hat_mask = lambda x: BA.mask_of(bj.hat_set(P, [e for e in range(P.size) if x >> e & 1]))
    assert BA.row_mask(BA.rvac_mask(hat_mask(m))) == hat_mask(B.row_mask(B.rvac_mask(m)))
    assert BA.rvac_mask(hat_mask(m)) == hat_mask(B.rvac_mask(m))


@pytest.mark.parametrize("n", [5, 6])
def test_alpha_n_breaks_hat_commutation(n):
    P = rs.build("D", n)
    PA = rs.build("A", 2 * n - 3)
    a = P.simple[n - 1]
    assert bj.hat_set(P, (a,)) == ()
    lhs = PA.base.rvac_mask(0)
    rhs = PA.base.mask_of(bj.hat_set(P, [e for e in range(P.size) if P.base.rvac_mask(1 << a) >> e & 1]))
    assert lhs == PA.base.min_mask
    assert rhs == PA.base.min_mask & ~(1 << PA.from_interval(n - 1, n))


def test_hat_rejects_symmetric():
    P = rs.build("D4")
    with pytest.raises(ValueError):
        bj.hat(P, ())
    with pytest.raises(ValueError):
        bj.hat(rs.build("A3"), ())


@pytest.mark.parametrize("family,rank", [("B", 3), ("C", 3), ("B", 4)])
def test_uniform_theta_is_bijective_for_bc(family, rank):
    P = rs.build(family, rank)
    NC = WeylGroup(family, rank).nc_lattice()
    values = {bj.theta_uniform(P, A) for A in P.base.antichains()}
    assert values == set(NC.elements)


def test_theta_uniform_base_case():
    for label in ("A5", "B3", "D5"):
        P = rs.build(label)
        L = bj.ThetaUniform(P).W.L
        assert bj.theta_uniform(P, [P.simple[i - 1] for i in L]).is_identity


def test_theta_uniform_rejects_exceptional():
    with pytest.raises(ValueError):
        bj.theta_uniform(rs.build("G2"), ())


def test_diagram_text(a9):
    P, A = a9
    lines = bj.phi_diagram_A(P, A).to_text().splitlines()
    assert "1^(1)-10^(0)" in lines and "10^(1)-1^(0)" in lines
    assert len(lines) == 10


def _geometric_cross(x, y, total):
    pt = lambda p: (math.cos(2 * math.pi * p / total), math.sin(2 * math.pi * p / total))
    (a, b), (c, d) = map(lambda ch: (pt(ch[0]), pt(ch[1])), (x, y))

    def orient(p, q, r):
        return (q[0] - p[0]) * (r[1] - p[1]) - (q[1] - p[1]) * (r[0] - p[0])
    return orient(a, b, c) * orient(a, b, d) < 0 and orient(c, d, a) * orient(c, d, b) < 0


@given(st.lists(st.integers(0, 11), min_size=4, max_size=4, unique=True))
def test_crossing_matches_geometry(pts):
    x = tuple(sorted(pts[:2]))
    y = tuple(sorted(pts[2:]))
    assert bj.crosses(x, y) == _geometric_cross(x, y, 12)
