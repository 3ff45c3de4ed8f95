"""Nonrecursive quickselect over the instrumented partitioning schemes.

The loop keeps the invariant l <= k <= r (until the small-file exits) and
narrows [l, r] after each partition: l := b+1 when a <= k, r := a-1 when
k <= b.  On return x[k] is the k-th smallest key.  Ternary schemes also
report the maximal index range [k_minus, k_plus] of keys equal to x[k];
binary schemes report k_minus = k_plus = k, since their equal keys may be
spread over both sides.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import _kernels as K
from .bipartition import BinarySchemeId
from .kernel import Counters, KeyArray, as_key_array
from .pivot import PivotRule
from .tripartition import TernarySchemeId

__all__ = ["SelectResult", "quickselect"]

_NO_TRACE = np.zeros((0, 3), dtype=np.int64)


@dataclass
class SelectResult:
    """k_minus/k_plus bound the block of keys equal to the selected one;
    pivot_cmps/pivot_swaps isolate the cost of pivot selection (already
    included in the counters)."""

    k_minus: int
    k_plus: int
    counters: Counters
    pivot_cmps: int = 0
    pivot_swaps: int = 0


def _swap(buf: np.ndarray, i: int, j: int, cnt: np.ndarray) -> None:
    buf[i], buf[j] = buf[j], buf[i]
    cnt[K.C_SWAP] += 1
    if i == j:
        cnt[K.C_VAC] += 1


def _random_partition(buf, l, r, scheme, cnt, rng):
    """Move a uniformly drawn key to x[l], then run an untuned scheme."""
    i = int(rng.integers(l, r + 1))
    _swap(buf, l, i, cnt)
    if isinstance(scheme, BinarySchemeId):
        if scheme is BinarySchemeId.SBS:
            a, b, _ = K._sbs(buf, l, r, cnt, _NO_TRACE)
        elif scheme is BinarySchemeId.SBIND1:
            a, b, _ = K._sbind1(buf, l, r, cnt, _NO_TRACE)
        elif scheme is BinarySchemeId.SBIND2:
            a, b, _ = K._sbind2(buf, l, r, cnt, _NO_TRACE)
        else:
            a, b, _ = K._sbl(buf, l, r, cnt, _NO_TRACE)
        return a, b
    if scheme is TernarySchemeId.STS:
        a, b, _ = K._sts(buf, l, r, cnt, _NO_TRACE)
    elif scheme is TernarySchemeId.STIND1:
        a, b, _ = K._stind1(buf, l, r, cnt, _NO_TRACE)
    elif scheme is TernarySchemeId.STIND2:
        a, b, _ = K._stind2(buf, l, r, False, cnt, _NO_TRACE)
    elif scheme is TernarySchemeId.STIND2_PRIME:
        a, b, _ = K._stind2(buf, l, r, True, cnt, _NO_TRACE)
    elif scheme is TernarySchemeId.STL:
        a, b, _ = K._stl(buf, l, r, cnt, _NO_TRACE)
    else:
        alt, ind2 = _HYBRID_FLAGS[scheme]
        a, b, _ = K._sth(buf, l, r, alt, ind2, cnt, _NO_TRACE)
    return a, b


_HYBRID_FLAGS = {
    TernarySchemeId.STH: (False, False),
    TernarySchemeId.STIND2H: (False, True),
    TernarySchemeId.STHALT: (True, False),
    TernarySchemeId.STIND2HALT: (True, True),
}


def _median3_binary_inplace(buf, l, r, cnt, rng) -> tuple[int, int]:
    """In-place median-of-3 arrangement (binary tree); returns lbar, rbar."""
    i = int(rng.integers(l + 1, r + 1))
    if i != l + 1:
        _swap(buf, l + 1, i, cnt)
    i = int(rng.integers(l + 2, r + 1))
    if i != r:
        _swap(buf, r, i, cnt)
    cnt[K.C_KEY] += 1
    if buf[l] > buf[r]:
        _swap(buf, l, r, cnt)
    cnt[K.C_KEY] += 1
    if buf[l] > buf[l + 1]:
        _swap(buf, l, l + 1, cnt)
    else:
        cnt[K.C_KEY] += 1
        if buf[l + 1] > buf[r]:
            _swap(buf, l + 1, r, cnt)
    return l + 1, r - 1


def _median3_ternary_inplace(buf, l, r, cnt, rng) -> tuple[int, int]:
    """In-place median-of-3 arrangement (ternary tree); returns lbar, rbar."""
    i = int(rng.integers(l + 1, r + 1))
    if i != l + 1:
        _swap(buf, l + 1, i, cnt)
    i = int(rng.integers(l + 2, r + 1))
    if i != r:
        _swap(buf, r, i, cnt)
    lbar, rbar = l + 1, r - 1
    cnt[K.C_KEY] += 1
    if buf[l] != buf[r]:
        if buf[l] > buf[r]:
            _swap(buf, l, r, cnt)
        cnt[K.C_KEY] += 1
        if buf[l + 1] < buf[l]:
            _swap(buf, l, l + 1, cnt)
        elif buf[l + 1] == buf[l]:
            lbar = l
        else:
            cnt[K.C_KEY] += 1
            if buf[l + 1] == buf[r]:
                rbar = r
            elif buf[l + 1] > buf[r]:
                _swap(buf, l + 1, r, cnt)
    else:
        cnt[K.C_KEY] += 1
        if buf[l] < buf[l + 1]:
            _swap(buf, l + 1, r, cnt)
            lbar = l
        elif buf[l] == buf[l + 1]:
            lbar = l
            rbar = r
        else:
            _swap(buf, l, l + 1, cnt)
            rbar = r
    return lbar, rbar


def quickselect(
    keys,
    k: int,
    scheme: BinarySchemeId | TernarySchemeId = TernarySchemeId.STIND2,
    rule: PivotRule = PivotRule.RANDOM,
    *,
    rng: np.random.Generator | int | None = None,
) -> SelectResult:
    """Select the k-th smallest key of x[1:n] in place.

    ``rng`` may be a numpy Generator or a seed (None seeds from entropy).
    """
    x = as_key_array(keys)
    n = x.n
    if not 1 <= k <= n:
        raise ValueError(f"need 1 <= k <= {n}, got k={k}")
    if not isinstance(rng, np.random.Generator):
        rng = np.random.default_rng(rng)
    buf = x._buf
    cnt = np.zeros(6, dtype=np.int64)
    ternary = isinstance(scheme, TernarySchemeId)
    pivot_cmps = 0
    pivot_swaps = 0
    l, r = 1, n
    k_minus = k_plus = k
    while True:
        if l > r:
            k_minus, k_plus = r + 1, l - 1
            break
        if l == r:
            k_minus = k_plus = k
            break
        if rule is PivotRule.MEDIAN3 and l == r - 1:
            cnt[K.C_KEY] += 1
            pivot_cmps += 1
            if buf[l] > buf[r]:
                _swap(buf, l, r, cnt)
                pivot_swaps += 1
                k_minus = k_plus = k
            elif buf[l] == buf[r]:
                k_minus, k_plus = l, r
            else:
                k_minus = k_plus = k
            break
        if rule is PivotRule.MEDIAN3:
            # everything up to the tuned partition call is pivot overhead
            c0, s0 = int(cnt[K.C_KEY]), int(cnt[K.C_SWAP])
            if ternary:
                lbar, rbar = _median3_ternary_inplace(buf, l, r, cnt, rng)
                pivot_cmps += int(cnt[K.C_KEY]) - c0
                pivot_swaps += int(cnt[K.C_SWAP]) - s0
                a, b = _tuned_ternary(buf, l, r, lbar, rbar, scheme, cnt)
            else:
                lbar, rbar = _median3_binary_inplace(buf, l, r, cnt, rng)
                pivot_cmps += int(cnt[K.C_KEY]) - c0
                pivot_swaps += int(cnt[K.C_SWAP]) - s0
                a, b = _tuned_binary(buf, lbar, rbar, scheme, cnt)
        else:
            pivot_swaps += 1  # the placement swap inside _random_partition
            a, b = _random_partition(buf, l, r, scheme, cnt, rng)
        if a <= k:
            l = b + 1
        if k <= b:
            r = a - 1
    if not ternary:
        k_minus = k_plus = k
    return SelectResult(
        k_minus=int(k_minus),
        k_plus=int(k_plus),
        counters=Counters.from_array(cnt),
        pivot_cmps=pivot_cmps,
        pivot_swaps=pivot_swaps,
    )


def _tuned_binary(buf, lbar, rbar, scheme, cnt):
    if scheme in (BinarySchemeId.SBS, BinarySchemeId.SBIND1):
        a, b, _ = K._sbs_tuned(buf, lbar, rbar, cnt, _NO_TRACE)
    elif scheme is BinarySchemeId.SBIND2:
        a, b, _ = K._sbind2(buf, lbar, rbar, cnt, _NO_TRACE)
    else:
        a, b, _ = K._sbl(buf, lbar, rbar, cnt, _NO_TRACE)
    return a, b


def _tuned_ternary(buf, l, r, lbar, rbar, scheme, cnt):
    p, q = l + 2, r - 1
    if scheme in (TernarySchemeId.STS, TernarySchemeId.STIND1):
        a, b, _ = K._sts_tuned(buf, lbar, p, q, rbar, cnt, _NO_TRACE)
    elif scheme is TernarySchemeId.STIND2:
        a, b, _ = K._stind2_tuned(buf, lbar, p, q, rbar, False, cnt, _NO_TRACE)
    elif scheme is TernarySchemeId.STIND2_PRIME:
        a, b, _ = K._stind2_tuned(buf, lbar, p, q, rbar, True, cnt, _NO_TRACE)
    elif scheme is TernarySchemeId.STL:
        a, b, _ = K._stl_tuned(buf, lbar, p, q, rbar, cnt, _NO_TRACE)
    else:
        alt, ind2 = _HYBRID_FLAGS[scheme]
        a, b, _ = K._sth_tuned(buf, lbar, p, q, rbar, alt, ind2, cnt, _NO_TRACE)
    return a, b
