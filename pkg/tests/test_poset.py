import random
from fractions import Fraction

import pytest
from hypothesis import given, settings

from conftest import brute_antichains, brute_rowmotion, ranked_posets
from rowvac.poset import (
    RankedPoset,
    cycles_of,
    inverse_rowmotion,
    orbit,
    permutation_of,
    rank_toggle,
    restrict_to_support,
    rowmotion,
    rowmotion_via_toggles,
    rowvacuation,
    support,
    toggle,
)
from rowvac.verify import is_graded, verify_structure

# a 3-element "V": 0 and 1 below 2, the root poset of A2
V = RankedPoset(3, [(0, 2), (1, 2)])


def test_toggle_cases():
    assert toggle(V, 0, (0,)) == ()
    assert toggle(V, 0, (1,)) == (0, 1)
    assert toggle(V, 0, (2,)) == (2,)


def test_rank_toggle_hits_whole_level():
    assert rank_toggle(V, 0, ()) == (0, 1)
    assert rank_toggle(V, 1, (0, 1)) == (0, 1)


def test_rowmotion_orbits_on_v():
    assert orbit(V, (), "row").orbit == ((), (0, 1), (2,))
    sizes = sorted(len(c) for c in cycles_of(permutation_of(V, "row")[1]))
    assert sizes == [2, 3]
    assert orbit(V, (0,), "row").average_cardinality == Fraction(1)


def test_inverse_rowmotion_undoes_rowmotion():
    for A in V.antichains():
        assert inverse_rowmotion(V, rowmotion(V, A)) == A


def test_rejects_non_antichain():
    with pytest.raises(ValueError):
        rowmotion(V, (0, 2))
    with pytest.raises(ValueError):
        orbit(V, (0,), "sideways")


def test_rejects_unranked_and_cyclic():
    # 0 < 1 < 2 and 0 < 2 directly is fine, but 3 < 2 with 3 minimal is not ranked
    with pytest.raises(ValueError):
        RankedPoset(4, [(0, 1), (1, 2), (3, 2)])
    with pytest.raises(ValueError):
        RankedPoset(2, [(0, 1), (1, 0)])


def test_support_and_restriction():
    P = RankedPoset(5, [(0, 3), (1, 3), (1, 4), (2, 4)])
    assert support(P, (3,)) == (0, 1)
    sub, emb = restrict_to_support(P, (0, 1))
    assert emb == (0, 1, 3)
    with pytest.raises(ValueError):
        restrict_to_support(P, (3,))


def test_chain_rowvacuation():
    chain = RankedPoset(3, [(0, 1), (1, 2)])
    assert [rowvacuation(chain, A) for A in [(), (0,), (1,), (2,)]] == [(0,), (), (2,), (1,)]


@settings(max_examples=60, deadline=None)
@given(ranked_posets())
def test_antichains_match_brute_force(P):
    assert set(P.antichains()) == brute_antichains(P)


@settings(max_examples=60, deadline=None)
@given(ranked_posets())
def test_rowmotion_matches_ideal_definition(P):
    ext = P.random_linear_extension(random.Random(P.size))
    assert P.is_linear_extension(ext)
    for A in P.antichains():
        assert rowmotion(P, A) == brute_rowmotion(P, A)
        assert rowmotion_via_toggles(P, A, ext) == rowmotion(P, A)


@settings(max_examples=40, deadline=None)
@given(ranked_posets(max_levels=3, max_width=3))
def test_structure_suite_on_random_posets(P):
    rep = verify_structure(P, seed=1)
    assert rep.passed, rep.failures[:3]
    assert rep.checked_count == len(brute_antichains(P))


def test_rowmotion_via_toggles_rejects_bad_extension():
    with pytest.raises(ValueError):
        rowmotion_via_toggles(V, (), [2, 0, 1])


def test_rank_reversal_only_for_graded_posets():
    # 1 is maximal on rank 0, so the poset is ranked but not graded
    P = RankedPoset(3, [(0, 2)])
    assert not is_graded(P)
    assert rowvacuation(P, (2,)) == (1, 2)
    G = RankedPoset(4, [(0, 2), (1, 3)])
    assert is_graded(G)
    assert rowvacuation(G, (2, 3)) == (2, 3)
    assert rowvacuation(G, ()) == (0, 1)
    assert rowvacuation(G, (0, 1)) == ()
