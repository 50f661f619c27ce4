"""Acceptance criteria 1 to 9, each printing a single PASS or FAIL line.

Set ROWVAC_LARGE_EXCEPTIONAL=1 to add E7 and E8 to the rowmotion criterion.
"""
import os
import time
from contextlib import contextmanager

from rowvac import bijection as bj
from rowvac import roots as rs
from rowvac import verify as vf
from rowvac.poset import rowvacuation
from rowvac.weyl import WeylGroup, format_cycles

CLASSICAL = [f"A{n}" for n in range(1, 8)] + [f"{f}{n}" for f in "BC" for n in range(2, 8)] \
    + [f"D{n}" for n in range(4, 8)]
EXCEPTIONAL = ["G2", "F4", "E6"]
LARGE = ["E7", "E8"] if os.environ.get("ROWVAC_LARGE_EXCEPTIONAL") == "1" else []
ALL_TYPES = CLASSICAL + ["G2", "F4", "E6", "E7", "E8"]
F4_WITNESS = (["1110", "0121"], ["1222"])


@contextmanager
def criterion(capsys, number, title, limit=None):
    t0 = time.perf_counter()
    ok = False
    try:
        yield
        ok = True
    finally:
        elapsed = time.perf_counter() - t0
        if limit is not None and elapsed >= limit:
            ok = False
        with capsys.disabled():
            bound = f" (limit {limit}s)" if limit else ""
            print(f"\ncriterion {number}: {'PASS' if ok else 'FAIL'} {title} [{elapsed:.2f}s{bound}]")
    if limit is not None:
        assert elapsed < limit, f"criterion {number} took {elapsed:.1f}s"


def _failures(reports):
    return [(r.type_label, r.failures[0]) for r in reports if not r.passed]


def test_criterion_1_panyushev(capsys):
    with criterion(capsys, 1, "#A + #Rvac(A) = r on classical types", limit=60):
        reports = [vf.verify_panyushev(rs.build(label)) for label in CLASSICAL]
        assert _failures(reports) == []
        assert sum(r.checked_count for r in reports) == sum(rs.catalan(rs.build(x)) for x in CLASSICAL)


def test_criterion_2_counterexamples(capsys):
    with criterion(capsys, 2, "violations exist in F4 and E6, none in G2"):
        F4 = rs.build("F4")
        witness = vf.counterexample(F4)
        assert tuple([F4.label(e) for e in part] for part in witness) == F4_WITNESS
        assert len(F4.base.antichain_masks()) == 105
        assert vf.cardinality_violations(rs.build("E6"))
        assert vf.cardinality_violations(rs.build("G2")) == []


def test_criterion_3_rowmotion(capsys):
    with criterion(capsys, 3, "row^h = -w0 and orbit averages r/2", limit=120):
        reports = [vf.verify_rowmotion(rs.build(label)) for label in CLASSICAL + EXCEPTIONAL + LARGE]
        assert _failures(reports) == []
        for r in reports:
            P = rs.build(r.type_label)
            assert all((2 * P.coxeter_h) % int(k) == 0 for k in r.extra["orbit_sizes"])


def test_criterion_4_theta_axioms(capsys):
    with criterion(capsys, 4, "Theta axioms and Flip equivariance for A1..A5, D4, D5"):
        labels = [f"A{n}" for n in range(1, 6)] + ["D4", "D5"]
        assert _failures([vf.verify_ast(rs.build(label)) for label in labels]) == []


def test_criterion_5_type_a_explicit(capsys):
    with criterion(capsys, 5, "theta_A equals the uniform map for A1..A5"):
        for n in range(1, 6):
            P = rs.build("A", n)
            for A in P.base.antichains():
                assert bj.theta_A(P, A) == bj.theta_uniform(P, A)
        P = rs.build("A9")
        A = P.from_intervals([(1, 3), (2, 6), (3, 7), (4, 8), (5, 9), (8, 10)])
        assert format_cycles(bj.theta_A(P, A), fixed_points=True) == "(1,10)(2,4,8)(3,9,7)(5)(6)"


def test_criterion_6_lalanne_kreweras(capsys):
    with criterion(capsys, 6, "closed form equals toggled Rvac for A1..A7"):
        for n in range(2, 9):
            P = rs.build("A", n - 1)
            for A in P.base.antichains():
                assert P.from_intervals(rs.lalanne_kreweras(n, P.intervals(A))) == rowvacuation(P.base, A)
        assert rs.lalanne_kreweras(4, [(1, 3)]) == [(1, 3), (3, 4)]


def test_criterion_7_hat_identities(capsys):
    with criterion(capsys, 7, "hat identities on D5 and D6 with the alpha_n witness"):
        for label in ("D5", "D6"):
            P = rs.build(label)
            rep = vf.verify_hat(P)
            assert rep.passed, rep.failures[:3]
            n = P.rank_r
            PA = rs.build("A", 2 * n - 3)
            lhs = PA.base.rvac_mask(PA.base.mask_of(bj.hat_set(P, (P.simple[n - 1],))))
            rv = rowvacuation(P.base, (P.simple[n - 1],))
            assert lhs != PA.base.mask_of(bj.hat_set(P, rv))


def test_criterion_8_structure(capsys):
    with criterion(capsys, 8, "structural identities on every root poset with at most 30 elements"):
        small = [label for label in ALL_TYPES if rs.build(label).size <= 30]
        assert {"A7", "B5", "C5", "D6", "G2", "F4"} <= set(small)
        reports = [vf.verify_structure(rs.build(label).base, label, extensions=5) for label in small]
        assert _failures(reports) == []


def test_criterion_9_counting(capsys):
    with criterion(capsys, 9, "antichain counts, Narayana symmetry and NC rank counts"):
        for label in ALL_TYPES:
            P = rs.build(label)
            assert len(P.base.antichain_masks()) == rs.catalan(P)
            nar = rs.narayana(P)
            assert nar == nar[::-1] and sum(nar) == rs.catalan(P)
        for family, rank in [("A", n) for n in range(1, 6)] + [("B", 3), ("C", 4), ("D", 4), ("D", 5)]:
            NC = WeylGroup(family, rank).nc_lattice()
            assert NC.rank_counts() == rs.narayana(rs.build(family, rank))
