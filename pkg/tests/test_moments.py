import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from efl.moments import (MAX_SIZE, StripMultiset, compare, discrimination_trials, greedy_bijection,
                         random_distinct_pair)

point = st.builds(complex, st.floats(0, 1), st.floats(-3, 3))


def test_merging_and_validation():
    A = StripMultiset(((0.5 + 1j, 1), (0.5 + 1j, 2), (0.2 + 0j, 1)))
    assert A.size == 4 and len(A.points) == 2
    with pytest.raises(ValueError):
        StripMultiset(((1.2 + 0j, 1),))
    with pytest.raises(ValueError):
        StripMultiset(((0.5 + 0j, 0),))


def test_zeta_zero_pair_is_separated():
    A = StripMultiset.of([0.5 + 14.134725141734694j])
    B = StripMultiset.of([0.5 + 21.022039638771555j])
    rep = compare(A, B)
    assert not rep["equal"] and rep["first_differing_moment"] == 0
    assert rep["max_moment_difference"] > 1e-3


def test_multiplicity_matters():
    A = StripMultiset(((0.5 + 1j, 2),))
    B = StripMultiset(((0.5 + 1j, 1), (0.5 + 1.0000001j, 1)))
    assert not compare(A, StripMultiset(((0.5 + 1j, 1),)))["equal"]
    assert compare(A, A)["equal"]
    assert compare(A, B, tol=1e-3)["equal"]


@settings(max_examples=50, deadline=None)
@given(st.lists(point, min_size=1, max_size=6))
def test_permutation_invariance_and_bijection(pts):
    A = StripMultiset.of(pts)
    B = StripMultiset.of(list(reversed(pts)))
    rep = compare(A, B)
    assert rep["equal"] and not rep["inconsistent"]
    assert rep["bijection_max_distance"] <= 1e-12


def test_greedy_bijection():
    A = StripMultiset.of([0.1 + 0j, 0.9 + 1j])
    B = StripMultiset.of([0.9 + 1.01j, 0.1 + 0.01j])
    pairs, worst = greedy_bijection(A, B)
    assert worst == pytest.approx(0.01)
    assert greedy_bijection(A, StripMultiset.of([0.5 + 0j]))[0] is None


def test_size_limit():
    big = StripMultiset.of([complex(0.5, k) for k in range(MAX_SIZE + 1)])
    with pytest.raises(ValueError):
        compare(big, big)


def test_random_pairs_are_distinct():
    rng = np.random.default_rng(0)
    for _ in range(20):
        A, B = random_distinct_pair(rng)
        assert A.points != B.points and A.size <= 6 and B.size <= 6


def test_discrimination():
    stats = discrimination_trials(200, seed=5)
    assert stats["missed"] == 0 and stats["false_alarms"] == 0
