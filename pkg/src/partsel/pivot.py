"""Pivot selection: random placement, in-place median-of-3 arrangement
(binary and ternary decision trees), and pivot-rank distributions.

The median-of-3 helpers arrange the sample (x[l], x[l+1], x[r]) in place so
that the median sits at x[l+1] with a key <= v at x[l] and a key >= v at
x[r]; the tuned partitioning entry points can then skip the sample keys.
Comparisons and swaps spent here are charged to the caller's counters.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .kernel import Counters, KeyArray
from .tripartition import TunedLayout

__all__ = [
    "PivotRule",
    "RankDistribution",
    "place_random_pivot",
    "median3_binary",
    "median3_ternary",
    "ninther_distribution",
]


class PivotRule(enum.Enum):
    RANDOM = "random"
    MEDIAN3 = "median3"


@dataclass(frozen=True)
class RankDistribution:
    """Distribution of p = number of sample keys below the pivot."""

    s: int
    weights: tuple[Fraction, ...]  # index p in 0..s-1

    def __post_init__(self) -> None:
        if len(self.weights) != self.s:
            raise ValueError("need one weight per rank 0..s-1")
        if sum(self.weights) != 1:
            raise ValueError("weights must sum to 1")

    def mean_p(self) -> Fraction:
        return sum(Fraction(p) * w for p, w in enumerate(self.weights))


def ninther_distribution() -> RankDistribution:
    """Rank distribution of the median of three triple medians (s = 9).

    Only p in {3, 4, 5} has mass: 3/14, 4/7, 3/14.  The mean is 4, so the
    ninther is an exactly centered pivot.
    """
    w = [Fraction(0)] * 9
    w[3] = Fraction(3, 14)
    w[4] = Fraction(4, 7)
    w[5] = Fraction(3, 14)
    return RankDistribution(9, tuple(w))


def _swap(x: KeyArray, i: int, j: int, counters: Counters) -> None:
    x[i], x[j] = x[j], x[i]
    counters.swaps += 1
    if i == j:
        counters.vacuous_swaps += 1


def place_random_pivot(
    x: KeyArray, l: int, r: int, rng: np.random.Generator, counters: Counters
) -> int:
    """Swap a uniformly chosen key from x[l:r] to x[l]; returns the pivot.

    Exactly one swap is counted, vacuous when index l itself is drawn.
    """
    if not (1 <= l <= r <= x.n):
        raise ValueError(f"need 1 <= l <= r <= {x.n}")
    i = int(rng.integers(l, r + 1))
    _swap(x, l, i, counters)
    counters.index_cmps += 0  # placement involves no index tests
    return x[l]


def _randomize_sample(
    x: KeyArray, l: int, r: int, rng: np.random.Generator, counters: Counters
) -> None:
    """Replace x[l+1] and x[r] by random keys of x[l+1:r] and x[l+2:r].

    A draw that lands on the target position itself exchanges nothing, so
    pivot selection never performs a vacuous swap.
    """
    i = int(rng.integers(l + 1, r + 1))
    if i != l + 1:
        _swap(x, l + 1, i, counters)
    i = int(rng.integers(l + 2, r + 1))
    if i != r:
        _swap(x, r, i, counters)


def median3_binary(
    x: KeyArray,
    l: int,
    r: int,
    counters: Counters,
    rng: np.random.Generator | None = None,
) -> tuple[int, int, int]:
    """Arrange a median-of-3 sample for the tuned binary schemes.

    With ``rng`` given, x[l+1] and x[r] are first replaced by random keys.
    Afterwards x[l] <= v <= x[r] with the median v at x[l+1].  Over the six
    orderings of a distinct triple this costs 16 comparisons and 7 swaps
    in total.  Returns (v, lbar, rbar) = (v, l+1, r-1).
    """
    if not (1 <= l and l + 2 <= r <= x.n):
        raise ValueError("median-of-3 needs at least three keys")
    if rng is not None:
        _randomize_sample(x, l, r, rng, counters)
    counters.key_cmps += 1
    if x[l] > x[r]:
        _swap(x, l, r, counters)
    counters.key_cmps += 1
    if x[l] > x[l + 1]:
        _swap(x, l, l + 1, counters)
    else:
        counters.key_cmps += 1
        if x[l + 1] > x[r]:
            _swap(x, l + 1, r, counters)
    return x[l + 1], l + 1, r - 1


def median3_ternary(
    x: KeyArray,
    l: int,
    r: int,
    counters: Counters,
    rng: np.random.Generator | None = None,
) -> tuple[int, TunedLayout]:
    """Arrange a median-of-3 sample for the tuned ternary schemes.

    Three-way probes classify the triple into one of 13 ordered outcomes
    (ties included); the sample ends arranged as x[l:lbar-1] < v,
    x[lbar:l+1] = v with the median at x[l+1], and x[r] either = v
    (rbar = r) or > v (rbar = r-1).  Returns (v, layout) with p = l+2 and
    q = r-1.
    """
    if not (1 <= l and l + 2 <= r <= x.n):
        raise ValueError("median-of-3 needs at least three keys")
    if rng is not None:
        _randomize_sample(x, l, r, rng, counters)
    counters.key_cmps += 1
    lbar, rbar = l + 1, r - 1
    if x[l] != x[r]:
        if x[l] > x[r]:
            _swap(x, l, r, counters)
        counters.key_cmps += 1
        if x[l + 1] < x[l]:  # b < a < c
            _swap(x, l, l + 1, counters)
        elif x[l + 1] == x[l]:  # a = b < c
            lbar = l
        else:
            counters.key_cmps += 1
            if x[l + 1] < x[r]:  # a < b < c
                pass
            elif x[l + 1] == x[r]:  # a < b = c
                rbar = r
            else:  # a < c < b
                _swap(x, l + 1, r, counters)
    else:
        counters.key_cmps += 1
        if x[l] < x[l + 1]:  # a = c < b
            _swap(x, l + 1, r, counters)
            lbar = l
        elif x[l] == x[l + 1]:  # a = b = c
            lbar = l
            rbar = r
        else:  # b < a = c
            _swap(x, l, l + 1, counters)
            rbar = r
    v = x[l + 1]
    return v, TunedLayout(l=l, lbar=lbar, p=l + 2, q=r - 1, rbar=rbar, r=r)
