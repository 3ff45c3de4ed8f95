"""Binary (two-block) partitioning schemes around a pivot at x[l].

Each scheme rearranges x[l:r] into x[l:a-1] <= v, x[a:b] = v, x[b+1:r] >= v
and reports the pivot block [a, b].  The tuned entry point additionally
exploits a prearranged sample: p keys <= v at x[l:l+p-1], the pivot at
x[l+p], and q = s-1-p keys >= v at x[r-q+1:r], so only the n-s+1 interior
keys are scanned.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from . import _kernels as K
from .kernel import Counters, KeyArray, PartitionResult, SwapTrace, as_key_array

__all__ = [
    "BinarySchemeId",
    "SamplePlan",
    "bipartition",
    "bipartition_tuned",
]


class BinarySchemeId(enum.Enum):
    SBS = "sbs"  # safeguarded, both scans stopper-protected
    SBIND1 = "sbind1"  # upward scan index-controlled
    SBIND2 = "sbind2"  # both scans index-controlled, exactly n-1 comparisons
    SBL = "sbl"  # Lomuto single-scan


@dataclass(frozen=True)
class SamplePlan:
    """Pivot sample layout: s sample keys, p of them below the pivot."""

    s: int
    p: int

    @property
    def q(self) -> int:
        return self.s - 1 - self.p

    def __post_init__(self) -> None:
        if not (self.s >= 1 and 0 <= self.p <= self.s - 1):
            raise ValueError(f"invalid sample plan s={self.s}, p={self.p}")


def _trace_cap(n: int) -> int:
    return 3 * n + 16


def _run(fn, x: KeyArray, want_trace: bool, cap: int, args=()) -> tuple:
    cnt = np.zeros(6, dtype=np.int64)
    trace = np.zeros((cap if want_trace else 0, 3), dtype=np.int64)
    a, b, t = fn(x._buf, *args, cnt, trace)
    return a, b, cnt, (SwapTrace.from_array(trace, t) if want_trace else None)


_BINARY_KERNELS = {
    BinarySchemeId.SBS: K._sbs,
    BinarySchemeId.SBIND1: K._sbind1,
    BinarySchemeId.SBIND2: K._sbind2,
    BinarySchemeId.SBL: K._sbl,
}


def _check_range(x: KeyArray, l: int, r: int) -> None:
    if not (1 <= l < r <= x.n):
        raise ValueError(f"need 1 <= l < r <= {x.n}, got l={l}, r={r}")


def bipartition(
    scheme: BinarySchemeId,
    keys,
    l: int | None = None,
    r: int | None = None,
    *,
    trace: bool = False,
) -> PartitionResult:
    """Partition x[l:r] around the pivot v = x[l] (in place)."""
    x = as_key_array(keys)
    if l is None:
        l = 1
    if r is None:
        r = x.n
    _check_range(x, l, r)
    fn = _BINARY_KERNELS[scheme]
    a, b, cnt, tr = _run(fn, x, trace, _trace_cap(r - l + 1), (l, r))
    return PartitionResult(int(a), int(b), Counters.from_array(cnt), tr)


def bipartition_tuned(
    scheme: BinarySchemeId,
    keys,
    l: int,
    r: int,
    plan: SamplePlan,
    *,
    trace: bool = False,
) -> PartitionResult:
    """Partition with a prearranged pivot sample.

    For the degenerate plan s=1 (pivot only, no sentinels) the safeguarded
    schemes additionally require at least one key >= v right of l; this is
    checked because the scans would otherwise run off the range.
    """
    x = as_key_array(keys)
    _check_range(x, l, r)
    n = r - l + 1
    if plan.s > n:
        raise ValueError(f"sample size s={plan.s} exceeds n={n}")
    lbar = l + plan.p
    rbar = r - plan.q
    if not (lbar < rbar):
        raise ValueError(f"tuned range [{lbar},{rbar}] too small")
    v = x[lbar]
    safeguarded = scheme in (BinarySchemeId.SBS, BinarySchemeId.SBIND1)
    if safeguarded and plan.q == 0:
        if plan.s > 1:
            raise ValueError("no right sample sentinel (q = 0) for s > 1")
        if not np.any(x._buf[lbar + 1 : r + 1] >= v):
            raise ValueError("pivot-only plan needs a key >= pivot on the right")
    cap = _trace_cap(n)
    if safeguarded:
        a, b, cnt, tr = _run(K._sbs_tuned, x, trace, cap, (lbar, rbar))
    elif scheme is BinarySchemeId.SBIND2:
        a, b, cnt, tr = _run(K._sbind2, x, trace, cap, (lbar, rbar))
    else:
        a, b, cnt, tr = _run(K._sbl, x, trace, cap, (lbar, rbar))
    return PartitionResult(int(a), int(b), Counters.from_array(cnt), tr)
