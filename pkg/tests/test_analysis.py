"""Exact rational swap-count formulas checked against enumeration."""

from fractions import Fraction
from itertools import permutations

import pytest

from partsel import (
    BinarySchemeId,
    SamplePlan,
    bm_spurious_expectation,
    expected_swaps_distribution,
    expected_swaps_given_rank,
    expected_swaps_sampled,
    exhaustive_loop_swaps,
    exhaustive_spurious,
    max_expected_swaps,
    mean_over_ranks,
    ninther_distribution,
    rank_moments,
    swap_rate_bound,
    swap_rate_sampled,
)
from partsel.analysis import avg_high_in_prefix

F = Fraction
ALL = list(BinarySchemeId)


def test_hypergeometric_mean():
    assert avg_high_in_prefix(4, 2) == F(2 * 2, 4)
    assert avg_high_in_prefix(5, 0) == 0
    with pytest.raises(ValueError):
        avg_high_in_prefix(3, 4)


@pytest.mark.parametrize("scheme", ALL)
def test_rank_conditional_formula_vs_enumeration(scheme):
    """Exhaustive over all (n-1)! orders for n <= 6, every pivot rank."""
    for n in range(2, 7):
        for j in range(n):
            got = exhaustive_loop_swaps(scheme, n, j)
            assert got == expected_swaps_given_rank(scheme, n, j), (n, j)


def test_safeguarded_vs_index_identity():
    """Difference of the rank-conditional averages is j(j-1)/((n-1)(n-2))."""
    for n in range(3, 60):
        for j in range(n):
            lhs = expected_swaps_given_rank(BinarySchemeId.SBS, n, j)
            rhs = expected_swaps_given_rank(BinarySchemeId.SBIND1, n, j)
            assert lhs - rhs == F(j * (j - 1), (n - 1) * (n - 2))


@pytest.mark.parametrize("scheme", ALL)
def test_maxima_match_brute_force(scheme):
    for n in range(2, 201):
        brute = max(expected_swaps_given_rank(scheme, n, j) for j in range(n))
        assert max_expected_swaps(scheme, n) == brute, n


def test_index_schemes_share_formula():
    for n in range(2, 30):
        for j in range(n):
            assert expected_swaps_given_rank(
                BinarySchemeId.SBIND1, n, j
            ) == expected_swaps_given_rank(BinarySchemeId.SBIND2, n, j)


def _rank_of_sample_pivot(perm, s, p):
    """j = low-key count when the pivot is the (p+1)-th smallest of the
    first s keys of the permutation."""
    v = sorted(perm[:s])[p]
    return sum(1 for k in perm if k < v)


def test_rank_moments_vs_enumeration():
    """E and T summed over all n! orders with the sample in front."""
    n = 6
    for plan in (SamplePlan(1, 0), SamplePlan(3, 1), SamplePlan(3, 0), SamplePlan(5, 2)):
        s, p, q = plan.s, plan.p, plan.q
        te = tt = F(0)
        cnt = 0
        for perm in permutations(range(1, n + 1)):
            j = _rank_of_sample_pivot(perm, s, p)
            te += j
            tt += F(j * (n - 1 - j), n - 1)
            cnt += 1
        e, t = rank_moments(n, plan)
        assert e == te / cnt, plan
        assert t == tt / cnt, plan


def test_sampled_swap_formulas_vs_enumeration():
    """Full enumeration: sample in front, pivot swapped to x[1], remaining
    order uniform; compare against the closed sampled-rank forms."""
    n = 6
    for plan in (SamplePlan(1, 0), SamplePlan(3, 1), SamplePlan(3, 0)):
        for scheme in ALL:
            total = F(0)
            cnt = 0
            for perm in permutations(range(1, n + 1)):
                j = _rank_of_sample_pivot(perm, plan.s, plan.p)
                total += expected_swaps_given_rank(scheme, n, j)
                cnt += 1
            assert expected_swaps_sampled(scheme, n, plan) == total / cnt, (
                scheme,
                plan,
            )


def test_single_random_pivot_special_case():
    """s=1, p=0: the safeguarded scheme averages n/6 loop swaps, the
    index-controlled ones (n-2)/6."""
    plan = SamplePlan(1, 0)
    for n in range(3, 120):
        assert expected_swaps_sampled(BinarySchemeId.SBS, n, plan) == F(n, 6)
        assert expected_swaps_sampled(BinarySchemeId.SBIND2, n, plan) == F(n - 2, 6)


def test_tuned_moments_and_bound_tightness():
    """Tuned T equals kappa(s)(n-s-1) exactly when p = (s-1)/2."""
    for n in (50, 200, 10**6):
        for s in (1, 3, 5, 7, 9):
            for p in range(s):
                plan = SamplePlan(s, p)
                _, t = rank_moments(n, plan, tuned=True)
                bound = swap_rate_bound(s) * (n - s - 1)
                assert t <= bound
                if 2 * p == s - 1:
                    assert t == bound
                else:
                    assert t < bound


def test_centered_plan_maximizes_swap_functional():
    """T is symmetric in p and largest for the median plan."""
    for n in (50, 200, 10**6):
        for s in (3, 5, 9):
            values = [rank_moments(n, SamplePlan(s, p))[1] for p in range(s)]
            assert values == values[::-1]
            assert max(values) == values[(s - 1) // 2]


def test_swap_rate_constants():
    assert swap_rate_bound(3) == F(1, 5)
    assert swap_rate_bound(9) == F(5, 22)
    assert swap_rate_sampled(ninther_distribution()) == F(86, 385)


def test_ninther_mean_rank():
    """E(n, 9) = (n-1)/2 under the ninther distribution."""
    dist = ninther_distribution()
    for n in range(10, 201):
        e = sum(
            w * rank_moments(n, SamplePlan(9, p))[0]
            for p, w in enumerate(dist.weights)
            if w
        )
        assert e == F(n - 1, 2)


def test_distribution_average_matches_weighted_sum():
    dist = ninther_distribution()
    n = 40
    for scheme in ALL:
        want = sum(
            w * expected_swaps_sampled(scheme, n, SamplePlan(9, p))
            for p, w in enumerate(dist.weights)
            if w
        )
        assert expected_swaps_distribution(scheme, n, dist) == want


def test_spurious_expectation_vs_enumeration():
    for n in range(2, 7):
        for j in range(n):
            assert exhaustive_spurious(n, j) == bm_spurious_expectation(n, j)
    assert bm_spurious_expectation(100) == F(1, 2)
    for n in range(2, 50):
        assert mean_over_ranks(
            bm_spurious_expectation(n, j) for j in range(n)
        ) == F(1, 2)


def test_rank_validation():
    with pytest.raises(ValueError):
        expected_swaps_given_rank(BinarySchemeId.SBS, 5, 5)
    with pytest.raises(ValueError):
        expected_swaps_given_rank(BinarySchemeId.SBS, 1, 0)
    with pytest.raises(ValueError):
        expected_swaps_given_rank(
            BinarySchemeId.SBS, 10, 0, tuned=SamplePlan(3, 1)
        )
