"""Adversarial and random input sequences for selection experiments.

All generators return a 0-based numpy int64 array of length n; wrap with
``KeyArray`` for the partition/selection entry points.  Randomized kinds
are driven by numpy's seeded PCG64 generator, so equal (kind, n, seed,
m) calls return identical arrays on every platform.
"""

from __future__ import annotations

import enum

import numpy as np

__all__ = ["SequenceKind", "generate"]


class SequenceKind(enum.Enum):
    RANDOM = "random"  # random permutation of 1..n
    MOD_M = "modm"  # random permutation of (i mod m, i = 1..n)
    SORTED = "sorted"  # 1..n
    ROTATED = "rotated"  # 2..n followed by 1
    ORGANPIPE = "organpipe"  # rises to the middle, then falls
    M3KILLER = "m3killer"  # classic median-of-3 adversary, n = 4j
    TWOFACED = "twofaced"  # m3killer with two windows randomly permuted


def _m3killer(n: int) -> np.ndarray:
    if n % 4 != 0 or n < 8:
        raise ValueError("m3killer needs n = 4j with j >= 2")
    k = n // 2
    x = np.zeros(n + 1, dtype=np.int64)  # slot 0 scratch, 1-based fill
    i = np.arange(1, k, 2)
    x[i] = i  # odd positions below k keep their index
    i = np.arange(2, k - 1, 2)
    x[i] = k + i - 1  # even positions hold large odd keys
    i = np.arange(k, 2 * k - 1)
    x[i] = 2 * (i - k) + 2  # middle run of even keys, starting at 2
    x[2 * k - 1] = 2 * k - 1
    x[2 * k] = 2 * k
    return x[1:]


def generate(
    kind: SequenceKind, n: int, seed: int = 0, m: int = 2
) -> np.ndarray:
    """Build one input sequence (deterministic in all arguments)."""
    if n < 1:
        raise ValueError("need n >= 1")
    if kind is SequenceKind.SORTED:
        return np.arange(1, n + 1, dtype=np.int64)
    if kind is SequenceKind.ROTATED:
        out = np.empty(n, dtype=np.int64)
        out[: n - 1] = np.arange(2, n + 1)
        out[n - 1] = 1
        return out
    if kind is SequenceKind.ORGANPIPE:
        half = (n + 1) // 2
        up = np.arange(1, half + 1, dtype=np.int64)
        return np.concatenate([up, up[: n - half][::-1]])
    if kind is SequenceKind.M3KILLER:
        return _m3killer(n)
    rng = np.random.default_rng(seed)
    if kind is SequenceKind.RANDOM:
        return rng.permutation(np.arange(1, n + 1, dtype=np.int64))
    if kind is SequenceKind.MOD_M:
        if m < 1:
            raise ValueError("need m >= 1")
        return rng.permutation(np.arange(1, n + 1, dtype=np.int64) % m)
    if kind is SequenceKind.TWOFACED:
        x = _m3killer(n)
        w = 4 * (n.bit_length() - 1)
        half = n // 2
        for lo1, hi1 in ((w, half - 1), (half + w - 1, n - 2)):  # 1-based incl.
            if lo1 < hi1:
                window = slice(lo1 - 1, hi1)
                x[window] = rng.permutation(x[window])
        return x
    raise ValueError(f"unknown sequence kind {kind!r}")
