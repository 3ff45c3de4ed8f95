"""Exact average-case swap counts for the binary schemes, as rational
numbers.

"Loop swaps" below are the swaps a scheme makes before its final
block-moving (cleanup) swaps.  Conditional expectations are taken over the
(n-1)! equally likely orders of the non-pivot keys, given the pivot rank;
``j`` counts the keys below the pivot, so the pivot is the (j+1)-th
smallest of the n keys.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable

from .bipartition import BinarySchemeId, SamplePlan
from .pivot import RankDistribution

__all__ = [
    "avg_high_in_prefix",
    "expected_swaps_given_rank",
    "max_expected_swaps",
    "rank_moments",
    "expected_swaps_sampled",
    "expected_swaps_distribution",
    "swap_rate_bound",
    "swap_rate_sampled",
    "bm_spurious_expectation",
]

F = Fraction


def avg_high_in_prefix(nhat: int, jhat: int) -> Fraction:
    """jhat(nhat-jhat)/nhat: the expected number of high keys among the
    first nhat-jhat slots of a random arrangement of jhat high and
    nhat-jhat low keys (the hypergeometric mean driving every loop-swap
    count below)."""
    if not 0 <= jhat <= nhat or nhat <= 0:
        raise ValueError(f"need 0 <= jhat <= nhat, nhat > 0; got {jhat}, {nhat}")
    return F(jhat * (nhat - jhat), nhat)


def _check_rank(n: int, j: int) -> None:
    if n < 2:
        raise ValueError("need n >= 2")
    if not 0 <= j <= n - 1:
        raise ValueError(f"pivot rank j={j} outside 0..{n - 1}")


def expected_swaps_given_rank(
    scheme: BinarySchemeId, n: int, j: int, *, tuned: SamplePlan | None = None
) -> Fraction:
    """Average loop swaps of a binary scheme given the pivot rank.

    Untuned (pivot at x[1], remaining keys random):

    * SBS:     j(n-1-j)/(n-1) * (n-3)/(n-2) + j/(n-1)   (n >= 3)
    * SBIND1/2: j(n-1-j)/(n-1)
    * SBL:     j

    Tuned over a sample plan (s, p): valid for p <= j <= n-1-q,

    * SBS/SBIND1/SBIND2: (j-p)(n-1-q-j)/(n-s)
    * SBL:               j-p
    """
    _check_rank(n, j)
    if tuned is None:
        if scheme is BinarySchemeId.SBL:
            return F(j)
        t = F(j * (n - 1 - j), n - 1)
        if scheme is BinarySchemeId.SBS:
            if n == 2:
                return F(j, n - 1)
            return t * F(n - 3, n - 2) + F(j, n - 1)
        return t
    s, p, q = tuned.s, tuned.p, tuned.q
    if not p <= j <= n - 1 - q:
        raise ValueError(f"rank j={j} incompatible with plan (s={s}, p={p})")
    if n - s <= 0:
        raise ValueError("sample exhausts the array")
    if scheme is BinarySchemeId.SBL:
        return F(j - p)
    return F((j - p) * (n - 1 - q - j), n - s)


def max_expected_swaps(scheme: BinarySchemeId, n: int) -> Fraction:
    """Maximum over pivot ranks of the untuned loop-swap averages."""
    if n < 2:
        raise ValueError("need n >= 2")
    if scheme is BinarySchemeId.SBL:
        return F(n - 1)
    if scheme is BinarySchemeId.SBS:
        if n <= 4:
            return F(1)
        return F(n, 4) - F((n - 5) * (n % 2), 4 * (n - 1) * (n - 2))
    return F(n - 1, 4) - F((n + 1) % 2, 4 * (n - 1))


def rank_moments(
    n: int, plan: SamplePlan, *, tuned: bool = False
) -> tuple[Fraction, Fraction]:
    """First two pivot-rank functionals for order-statistic sampling.

    Returns (E, T) where E is the mean pivot rank E[j] and T the mean of
    j(n-1-j)/(n-1) (untuned) or of (j-p)(n-1-q-j)/(n-s) (tuned), when the
    pivot is the (p+1)-th smallest of a random s-sample.
    """
    s, p, q = plan.s, plan.p, plan.q
    if n < 2 or s > n:
        raise ValueError("need n >= 2 and s <= n")
    if not tuned:
        e = F((p + 1) * (n + 1), s + 1) - 1
        t = (
            F((p + 1) * (q + 1), (s + 1) * (s + 2)) * F((n + 1) * (n + 2), n - 1)
            - F(n, n - 1)
        )
        return e, t
    e = F((p + 1) * (n - s), s + 1)
    t = F((p + 1) * (q + 1) * (n - s - 1), (s + 1) * (s + 2))
    return e, t


def expected_swaps_sampled(
    scheme: BinarySchemeId, n: int, plan: SamplePlan, *, tuned: bool = False
) -> Fraction:
    """Average loop swaps under order-statistic pivot sampling.

    Untuned: SBS mixes the two functionals, the index-controlled schemes
    take T directly, and Lomuto's scheme takes E.  Tuned variants use the
    tuned (E, T) with the same mapping (SBS joins the index-controlled
    ones because its initial probe has nothing left to safeguard).
    """
    e, t = rank_moments(n, plan, tuned=tuned)
    if scheme is BinarySchemeId.SBL:
        return e
    if tuned or scheme is not BinarySchemeId.SBS:
        return t
    return F(max(n - 3, 0), max(n - 2, 1)) * t + e / (n - 1)


def expected_swaps_distribution(
    scheme: BinarySchemeId, n: int, dist: RankDistribution, *, tuned: bool = False
) -> Fraction:
    """Average loop swaps when the sample rank p itself is random
    (e.g. the pseudo-median-of-9)."""
    total = F(0)
    for p, w in enumerate(dist.weights):
        if w:
            total += w * expected_swaps_sampled(
                scheme, n, SamplePlan(dist.s, p), tuned=tuned
            )
    return total


def swap_rate_bound(s: int) -> Fraction:
    """kappa(s) = (s+1)/(4(s+2)): the median-of-s tuned swap rate; the
    tuned average T is at most kappa(s)(n-s-1), with equality exactly for
    the median plan p = (s-1)/2."""
    if s < 1:
        raise ValueError("need s >= 1")
    return F(s + 1, 4 * (s + 2))


def swap_rate_sampled(dist: RankDistribution) -> Fraction:
    """Asymptotic tuned swap rate sum_p pi_p (p+1)(s-p)/((s+1)(s+2)).

    For the pseudo-median-of-9 this is 86/385, below the median-of-9 rate
    kappa(9) = 5/22."""
    s = dist.s
    return sum(
        w * F((p + 1) * (s - p), (s + 1) * (s + 2))
        for p, w in enumerate(dist.weights)
    )


def bm_spurious_expectation(n: int, j: int | None = None) -> Fraction:
    """Expected spurious comparisons of the primed double-index ternary
    scheme on distinct keys: 1 - j/(n-1) given the pivot rank j, hence
    exactly 1/2 for any symmetric pivot (median of a sample, ninther)."""
    if n < 2:
        raise ValueError("need n >= 2")
    if j is None:
        return F(1, 2)
    _check_rank(n, j)
    return 1 - F(j, n - 1)


def mean_over_ranks(values: Iterable[Fraction]) -> Fraction:
    vals = list(values)
    return sum(vals, F(0)) / len(vals)
