"""Shared oracles for the partitioning tests."""

from collections import Counter

import numpy as np

from partsel import KeyArray


def assert_binary_postcondition(before, x: KeyArray, a: int, b: int):
    """x[1:a-1] <= v <= x[b+1:n], pivot block x[a:b] all equal to v."""
    v = before[0]
    out = x.to_list()
    n = len(before)
    assert Counter(out) == Counter(before)
    assert 1 <= a <= b + 1 and a <= b and b <= n
    assert all(out[i] <= v for i in range(a - 1))
    assert all(out[i] == v for i in range(a - 1, b))
    assert all(out[i] >= v for i in range(b, n))


def assert_ternary_postcondition(before, x: KeyArray, a: int, b: int):
    """Strict three-way split: x[1:a-1] < v, x[a:b] = v, x[b+1:n] > v."""
    v = before[0]
    out = x.to_list()
    n = len(before)
    assert Counter(out) == Counter(before)
    assert 1 <= a <= b <= n
    assert all(out[i] < v for i in range(a - 1))
    assert all(out[i] == v for i in range(a - 1, b))
    assert all(out[i] > v for i in range(b, n))


def random_cases(seed, count, nmax, low=0, high=8):
    """Deterministic stream of small integer arrays (duplicates likely)."""
    rng = np.random.default_rng(seed)
    for _ in range(count):
        n = int(rng.integers(2, nmax + 1))
        yield rng.integers(low, high, n).tolist()


def distinct_cases(seed, count, nmax):
    """Deterministic stream of distinct-key permutations."""
    rng = np.random.default_rng(seed)
    for _ in range(count):
        n = int(rng.integers(2, nmax + 1))
        yield (rng.permutation(n) + 1).tolist()
