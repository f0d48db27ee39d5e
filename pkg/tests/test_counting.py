"""Tests for the enumeration and DP counting layer.

The brute-force enumerators are the package's ground truth, so the key
assertions here are (a) brute force against hand-checked and frozen
values, and (b) the DP and generating-function routes against brute force.
"""

import pytest

from overcubic.counting import (
    BRUTE_FORCE_CAP,
    ColoredOverPartition,
    ColoredPart,
    chi_distinct,
    count_gen_cubic,
    count_gen_cubic_brute,
    count_gen_overcubic_brute,
    count_gen_overcubic_dp,
    count_overpartitions,
    count_partitions,
    count_partitions_brute,
    decompose,
    iter_overcubic_partitions,
    tau_even,
    tau_odd,
)
from overcubic.eta import gen_cubic_gf, gen_overcubic_gf
from overcubic.verify import expected_mod4_residue

# Values computed by count_gen_overcubic_brute itself and frozen as
# regression constants; abar_2(2) = 6 and abar_2(4) = 26 were additionally
# checked by listing the partitions by hand.
ABAR_2 = [1, 2, 6, 12, 26, 48, 92, 160, 282, 470, 784]
ABAR_3 = [1, 2, 8, 16, 42, 80, 176, 320, 632]


# -- plain partitions -----------------------------------------------------------


def test_partition_small_values():
    assert count_partitions(0) == 1
    assert count_partitions(4) == 5  # 4, 3+1, 2+2, 2+1+1, 1+1+1+1
    assert [count_partitions(n) for n in range(10)] == [1, 1, 2, 3, 5, 7, 11, 15, 22, 30]


def test_partition_dp_matches_brute():
    for n in range(21):
        assert count_partitions(n) == count_partitions_brute(n)


@pytest.mark.parametrize("step,modulus", [(5, 5), (7, 7), (11, 11)])
def test_ramanujan_congruences_by_counting(step, modulus):
    offset = {5: 4, 7: 5, 11: 6}[modulus]
    for n in range(21):
        assert count_partitions(step * n + offset) % modulus == 0


# -- overpartitions --------------------------------------------------------------


def test_overpartition_small_values():
    assert [count_overpartitions(n) for n in range(6)] == [1, 2, 4, 8, 14, 24]


def test_overpartition_three_lists_eight():
    got = list(iter_overcubic_partitions(1, 3))
    assert len(got) == 8 == count_overpartitions(3)
    # the eight overpartitions of 3, in (size, overlined-multiset) form
    shapes = sorted(
        tuple((p.size, p.overlined) for p in op.parts) for op in got
    )
    assert shapes == sorted(
        [
            ((3, False),),
            ((3, True),),
            ((2, False), (1, False)),
            ((2, True), (1, False)),
            ((2, False), (1, True)),
            ((2, True), (1, True)),
            ((1, False), (1, False), (1, False)),
            ((1, True), (1, False), (1, False)),
        ]
    )


def test_overpartition_matches_series():
    series = gen_overcubic_gf(1, 60)
    for n in range(61):
        assert count_overpartitions(n) == series[n]


# -- colored partitions ------------------------------------------------------------


def test_gen_cubic_known_list():
    # the nine 2-colored partitions of 4
    assert count_gen_cubic(2, 4) == 9
    assert count_gen_cubic_brute(2, 4) == 9


def test_gen_cubic_c1_reduces_to_partitions():
    for n in range(31):
        assert count_gen_cubic(1, n) == count_partitions(n)


def test_gen_cubic_matches_series():
    series = gen_cubic_gf(3, 20)
    for n in range(21):
        assert count_gen_cubic(3, n) == series[n]
        if n <= 18:
            assert count_gen_cubic_brute(3, n) == series[n]


def test_chan_congruence_small():
    for n in range(9):
        assert count_gen_cubic(2, 3 * n + 2) % 3 == 0


# -- overlined colored partitions -----------------------------------------------------


def test_overcubic_frozen_values():
    for n, expected in enumerate(ABAR_2):
        assert count_gen_overcubic_brute(2, n) == expected
        assert count_gen_overcubic_dp(2, n) == expected
    for n, expected in enumerate(ABAR_3):
        assert count_gen_overcubic_brute(3, n) == expected
        assert count_gen_overcubic_dp(3, n) == expected
    assert count_gen_overcubic_brute(2, 4) == 26


def test_overcubic_trivial_cases():
    for c in (1, 2, 3, 7):
        assert count_gen_overcubic_brute(c, 0) == 1
        assert count_gen_overcubic_dp(c, 1) == 2  # (1) and (1 overlined)
    assert count_gen_overcubic_brute(1, 3) == 8


def test_overcubic_dp_c1_is_overpartition():
    for n in range(101):
        assert count_gen_overcubic_dp(1, n) == count_overpartitions(n)


def test_overcubic_brute_cap():
    with pytest.raises(ValueError, match="capped"):
        count_gen_overcubic_brute(2, BRUTE_FORCE_CAP + 1)


def test_overcubic_generator_matches_counts():
    for c in (1, 2, 3):
        for n in range(11):
            listed = list(iter_overcubic_partitions(c, n))
            assert len(listed) == count_gen_overcubic_dp(c, n)
            assert len(set(listed)) == len(listed)


def test_generator_respects_invariants():
    for op in iter_overcubic_partitions(3, 8):
        op.validate_colors(3)
        assert op.weight == 8
        keys = [p.sort_key() for p in op.parts]
        assert keys == sorted(keys)


def test_colored_part_validation():
    with pytest.raises(ValueError):
        ColoredPart(3, color=2)  # odd sizes are single-colored
    with pytest.raises(ValueError):
        ColoredPart(0)
    with pytest.raises(ValueError):
        ColoredOverPartition(
            parts=(ColoredPart(2, 1, True), ColoredPart(2, 1, True)), weight=4
        )
    with pytest.raises(ValueError):
        ColoredOverPartition(parts=(ColoredPart(2),), weight=3)
    op = ColoredOverPartition(parts=(ColoredPart(2, 2),), weight=2)
    with pytest.raises(ValueError):
        op.validate_colors(1)


# -- decomposition by distinct sizes ----------------------------------------------------


def test_decompose_weight_one():
    for c in (1, 2, 5):
        dec = decompose(c, 1)
        assert dec.p1 == 2
        assert dec.p_geq2 == 0


def test_decompose_hand_checked_case():
    # weight 4 with two colors: kappa sets listed by hand
    dec = decompose(2, 4)
    assert (dec.p1, dec.p_geq2) == (14, 12)
    assert (dec.kappa1, dec.kappa21, dec.kappa22) == (1, 4, 4)


def test_decompose_invariants_sweep():
    for c in (1, 2, 3):
        for n in range(1, 19):
            dec = decompose(c, n)
            assert dec.total == count_gen_overcubic_dp(c, n)
            assert dec.kappa1 == tau_odd(n)
            assert dec.kappa21 == tau_even(n) * c
            assert dec.p1 == 2 * (dec.kappa1 + dec.kappa21) + dec.kappa22
            assert dec.p_geq2 % 4 == 0
            assert dec.kappa22 % 4 == 0
            assert dec.p1 % 4 == expected_mod4_residue(c, n)


def test_decompose_range_check():
    with pytest.raises(ValueError):
        decompose(2, 0)
    with pytest.raises(ValueError):
        decompose(2, BRUTE_FORCE_CAP + 1)


# -- distinct-class counts ----------------------------------------------------------------


def test_chi_distinct_hand_cases():
    assert chi_distinct(3, 2) == 1  # 2+1
    assert chi_distinct(3, 1) == 2  # 3 and 1+1+1
    for n in range(1, 10):
        assert chi_distinct(n, 0) == 0


def test_chi_distinct_reconstruction():
    # summing 2^r over partitions with r distinct classes counts every
    # overline choice once, recovering the overlined totals
    for c in (1, 2, 3):
        for n in range(1, 21):
            total = sum((1 << r) * chi_distinct(n, r, c) for r in range(n + 2))
            assert total == count_gen_overcubic_dp(c, n)


def test_chi_distinct_validation():
    with pytest.raises(ValueError):
        chi_distinct(0, 1)
    with pytest.raises(ValueError):
        chi_distinct(3, -1)


# -- divisor counts ----------------------------------------------------------------------


def test_tau_twelve():
    assert tau_odd(12) == 2  # 1, 3
    assert tau_even(12) == 4  # 2, 4, 6, 12


def test_tau_against_direct_scan():
    for n in range(1, 201):
        odd = sum(1 for d in range(1, n + 1) if n % d == 0 and d % 2)
        even = sum(1 for d in range(1, n + 1) if n % d == 0 and d % 2 == 0)
        assert tau_odd(n) == odd
        assert tau_even(n) == even


def test_tau_even_of_odd_is_zero():
    for n in range(1, 100, 2):
        assert tau_even(n) == 0


def test_tau_odd_of_squares_is_odd():
    for k in range(1, 51):
        assert tau_odd(k * k) % 2 == 1


def test_tau_validation():
    with pytest.raises(ValueError):
        tau_odd(0)
