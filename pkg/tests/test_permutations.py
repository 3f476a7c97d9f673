import itertools
import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from peakpoly.permutations import (
    LimitExceeded,
    NotAPermutation,
    NotASignedPermutation,
    count_alternating,
    distribution,
    has_internal_zeros,
    perm_stats,
    signed_distribution,
    signed_stats,
)


def test_perm_stats_worked_example():
    s = perm_stats((2, 1, 4, 3, 5))
    assert (s.pk, s.lpk, s.des) == (1, 2, 2)


def test_perm_stats_increasing():
    s = perm_stats((1, 2, 3, 4, 5))
    assert (s.pk, s.lpk, s.des) == (0, 0, 0)


def test_perm_stats_alternating_2143():
    s = perm_stats((2, 1, 4, 3))
    assert (s.pk, s.lpk, s.des) == (1, 2, 2)


def test_perm_stats_rejects_non_permutation():
    with pytest.raises(NotAPermutation):
        perm_stats((1, 1, 2))
    with pytest.raises(NotAPermutation):
        perm_stats((0, 1, 2))


def test_signed_stats_worked_example():
    s = signed_stats((-2, -4, 6, -8, 1, 3, 7, 5))
    assert (s.des_b, s.ades) == (4, 5)


def test_signed_stats_identity_window():
    for n in range(1, 6):
        s = signed_stats(tuple(range(1, n + 1)))
        assert (s.des_b, s.ades) == (0, 1)


def test_signed_stats_single_negative():
    s = signed_stats((-1,))
    assert (s.des_b, s.ades) == (1, 1)


def test_signed_stats_rejects_bad_window():
    with pytest.raises(NotASignedPermutation):
        signed_stats((1, -1))
    with pytest.raises(NotASignedPermutation):
        signed_stats((2, 3))


def test_distribution_small_rows():
    assert distribution(3, "pk").counts == (4, 2)
    assert distribution(3, "lpk").counts == (1, 5)
    assert distribution(3, "des").counts == (1, 4, 1)


def test_signed_distribution_small_rows():
    assert signed_distribution(1, "ades").counts == (0, 2)
    assert signed_distribution(1, "des_b").counts == (1, 1)
    assert signed_distribution(2, "des_b").counts == (1, 6, 1)
    assert signed_distribution(2, "ades").counts == (0, 4, 4)


def test_row_sums():
    for n in range(1, 8):
        for stat in ("pk", "lpk", "des"):
            assert distribution(n, stat).total() == math.factorial(n)
    for n in range(1, 6):
        for stat in ("des_b", "ades"):
            assert signed_distribution(n, stat).total() == 2**n * math.factorial(n)


def test_count_alternating_values():
    assert count_alternating(1) == 1
    assert count_alternating(4) == 5
    assert count_alternating(5) == 16


def test_reverse_alternating_matches_by_complement():
    for n in range(1, 8):
        assert count_alternating(n) == count_alternating(n, reverse=True)


def test_limits_enforced():
    with pytest.raises(LimitExceeded):
        distribution(11, "pk")
    with pytest.raises(LimitExceeded):
        signed_distribution(8, "ades")
    with pytest.raises(LimitExceeded):
        count_alternating(0)
    assert distribution(5, "des", limit=5).counts  # configurable cap


def test_unknown_stat_rejected():
    with pytest.raises(ValueError):
        distribution(3, "maj")
    with pytest.raises(ValueError):
        signed_distribution(3, "des")


def test_left_peaks_exceed_interior_peaks_by_at_most_one():
    for n in range(1, 7):
        for pi in itertools.permutations(range(1, n + 1)):
            s = perm_stats(pi)
            assert s.lpk - s.pk in (0, 1)
            assert 0 <= s.pk <= (n - 1) // 2
            assert 0 <= s.lpk <= n // 2
            assert 0 <= s.des <= n - 1


def test_ades_is_des_b_or_one_more():
    for n in range(1, 5):
        for pi in itertools.permutations(range(1, n + 1)):
            for signs in itertools.product((1, -1), repeat=n):
                window = tuple(s * v for s, v in zip(signs, pi))
                st_ = signed_stats(window)
                assert st_.ades - st_.des_b in (0, 1)
                assert st_.ades >= 1


def test_sharded_enumeration_is_deterministic():
    for n in (5, 6):
        for stat in ("pk", "lpk", "des"):
            assert distribution(n, stat, jobs=1) == distribution(n, stat, jobs=3)
    assert signed_distribution(4, "ades", jobs=1) == signed_distribution(4, "ades", jobs=4)
    assert count_alternating(7, jobs=1) == count_alternating(7, jobs=2)


def test_no_internal_zeros_in_distributions():
    for n in range(1, 8):
        for stat in ("pk", "lpk", "des"):
            assert not has_internal_zeros(distribution(n, stat).counts)
    for n in range(1, 6):
        for stat in ("des_b", "ades"):
            assert not has_internal_zeros(signed_distribution(n, stat).counts)


def test_has_internal_zeros_helper():
    assert has_internal_zeros((1, 0, 1))
    assert not has_internal_zeros((0, 1, 2))
    assert not has_internal_zeros((1, 2, 0))
    assert not has_internal_zeros(())


@given(st.permutations(list(range(1, 8))))
def test_stats_against_direct_definitions(pi):
    pi = tuple(pi)
    n = len(pi)
    padded = (0,) + pi
    s = perm_stats(pi)
    assert s.pk == sum(
        1 for i in range(2, n) if pi[i - 2] < pi[i - 1] > pi[i]
    )
    assert s.lpk == sum(
        1 for i in range(1, n) if padded[i - 1] < padded[i] > padded[i + 1]
    )
    assert s.des == sum(1 for i in range(n - 1) if pi[i] > pi[i + 1])
