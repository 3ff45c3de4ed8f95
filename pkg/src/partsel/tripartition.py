"""Ternary (three-block) partitioning schemes: keys equal to the pivot end
up in a contiguous middle block x[a:b], with x[l:a-1] < v < x[b+1:r].

Scheme families:

* STS / STIND1 -- safeguarded and single-index-controlled scans that park
  equal keys at both ends and re-center them with two vector swaps;
* STIND2 -- double-index-controlled (Bentley-McIlroy style), exactly n-1
  key comparisons; STIND2_PRIME is the variant whose downward scan may
  make one spurious comparison when the scans meet;
* STL -- Lomuto-style single scan;
* STH / STIND2H / STHALT / STIND2HALT -- two-stage hybrids that avoid
  vacuous swaps; the *ALT stage one also terminates when no key exceeds
  the pivot, and the *IND2 stage two trades stoppers for index tests.

The tuned entry point accepts a prearranged layout (arrangement produced
by the pivot module): x[l:lbar-1] < v, x[lbar:p-1] = v with the pivot at
x[p-1], x[q+1:rbar] = v, x[rbar+1:r] > v, so only x[p:q] is scanned.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from . import _kernels as K
from .kernel import Counters, KeyArray, PartitionResult, SwapTrace, as_key_array

__all__ = [
    "TernarySchemeId",
    "TunedLayout",
    "tripartition",
    "tripartition_tuned",
]


class TernarySchemeId(enum.Enum):
    STS = "sts"
    STIND1 = "stind1"
    STIND2 = "stind2"
    STIND2_PRIME = "stind2'"
    STL = "stl"
    STH = "sth"
    STIND2H = "stind2h"
    STHALT = "sthalt"
    STIND2HALT = "stind2halt"


@dataclass(frozen=True)
class TunedLayout:
    """Prearranged sample blocks around the pivot (see module docstring)."""

    l: int
    lbar: int
    p: int
    q: int
    rbar: int
    r: int

    def __post_init__(self) -> None:
        ok = (
            self.l <= self.lbar < self.p <= self.q + 1
            and self.q <= self.rbar <= self.r
            and self.q < self.r
        )
        if not ok:
            raise ValueError(f"invalid tuned layout {self}")


def _trace_cap(n: int) -> int:
    return 3 * n + 16


def _run(fn, x: KeyArray, want_trace: bool, cap: int, args=()) -> tuple:
    cnt = np.zeros(6, dtype=np.int64)
    trace = np.zeros((cap if want_trace else 0, 3), dtype=np.int64)
    a, b, t = fn(x._buf, *args, cnt, trace)
    return a, b, cnt, (SwapTrace.from_array(trace, t) if want_trace else None)


def _check_range(x: KeyArray, l: int, r: int) -> None:
    if not (1 <= l < r <= x.n):
        raise ValueError(f"need 1 <= l < r <= {x.n}, got l={l}, r={r}")


_HYBRIDS = {
    TernarySchemeId.STH: (False, False),
    TernarySchemeId.STIND2H: (False, True),
    TernarySchemeId.STHALT: (True, False),
    TernarySchemeId.STIND2HALT: (True, True),
}


def tripartition(
    scheme: TernarySchemeId,
    keys,
    l: int | None = None,
    r: int | None = None,
    *,
    trace: bool = False,
) -> PartitionResult:
    """Three-way partition x[l:r] around the pivot v = x[l] (in place)."""
    x = as_key_array(keys)
    if l is None:
        l = 1
    if r is None:
        r = x.n
    _check_range(x, l, r)
    cap = _trace_cap(r - l + 1)
    if scheme is TernarySchemeId.STS:
        a, b, cnt, tr = _run(K._sts, x, trace, cap, (l, r))
    elif scheme is TernarySchemeId.STIND1:
        a, b, cnt, tr = _run(K._stind1, x, trace, cap, (l, r))
    elif scheme is TernarySchemeId.STIND2:
        a, b, cnt, tr = _run(K._stind2, x, trace, cap, (l, r, False))
    elif scheme is TernarySchemeId.STIND2_PRIME:
        a, b, cnt, tr = _run(K._stind2, x, trace, cap, (l, r, True))
    elif scheme is TernarySchemeId.STL:
        a, b, cnt, tr = _run(K._stl, x, trace, cap, (l, r))
    else:
        alt, ind2 = _HYBRIDS[scheme]
        a, b, cnt, tr = _run(K._sth, x, trace, cap, (l, r, alt, ind2))
    return PartitionResult(int(a), int(b), Counters.from_array(cnt), tr)


def tripartition_tuned(
    scheme: TernarySchemeId,
    keys,
    layout: TunedLayout,
    *,
    trace: bool = False,
) -> PartitionResult:
    """Three-way partition with prearranged sample blocks (in place)."""
    x = as_key_array(keys)
    lo = layout
    _check_range(x, lo.l, lo.r)
    if lo.r > x.n:
        raise ValueError("layout exceeds array")
    cap = _trace_cap(lo.r - lo.l + 1)
    args = (lo.lbar, lo.p, lo.q, lo.rbar)
    if scheme in (TernarySchemeId.STS, TernarySchemeId.STIND1):
        a, b, cnt, tr = _run(K._sts_tuned, x, trace, cap, args)
    elif scheme is TernarySchemeId.STIND2:
        a, b, cnt, tr = _run(K._stind2_tuned, x, trace, cap, args + (False,))
    elif scheme is TernarySchemeId.STIND2_PRIME:
        a, b, cnt, tr = _run(K._stind2_tuned, x, trace, cap, args + (True,))
    elif scheme is TernarySchemeId.STL:
        a, b, cnt, tr = _run(K._stl_tuned, x, trace, cap, args)
    else:
        alt, ind2 = _HYBRIDS[scheme]
        a, b, cnt, tr = _run(K._sth_tuned, x, trace, cap, args + (alt, ind2))
    return PartitionResult(int(a), int(b), Counters.from_array(cnt), tr)
