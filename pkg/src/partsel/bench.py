"""Trial runner, verification harnesses, and CSV emission.

Reproducibility: every trial owns the PCG64 substream seeded by
``[master_seed, trial_index]``, so a (config, seed) pair yields identical
counter columns on any platform; only the wall-clock columns vary.
"""

from __future__ import annotations

import csv
import math
import time
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import permutations
from typing import Iterable, Sequence, TextIO

import numpy as np

from . import _kernels as K
from .analysis import (
    bm_spurious_expectation,
    expected_swaps_given_rank,
    expected_swaps_sampled,
)
from .bipartition import BinarySchemeId, SamplePlan
from .kernel import KeyArray
from .pivot import PivotRule
from .selection import quickselect
from .seqgen import SequenceKind, generate
from .tripartition import TernarySchemeId

__all__ = [
    "TrialConfig",
    "StatsRow",
    "CSV_HEADER",
    "run_trials",
    "emit_csv",
    "verify_exhaustive",
    "verify_montecarlo",
    "mc_loop_swaps",
    "mc_spurious",
    "exhaustive_loop_swaps",
    "exhaustive_spurious",
]

CSV_HEADER = (
    "scheme,pivot,sequence,n,k,trials,seed,"
    "time_avg_ms,time_max_ms,time_min_ms,"
    "cmp_avg_n,cmp_max_n,cmp_min_n,part_avg_lnn,"
    "swap_avg_n,vswap_avg_n,swap_per_cmp"
)

_SCHEMES = {s.value: s for s in BinarySchemeId} | {
    s.value: s for s in TernarySchemeId
}


def scheme_by_name(name: str) -> BinarySchemeId | TernarySchemeId:
    try:
        return _SCHEMES[name]
    except KeyError:
        raise ValueError(
            f"unknown scheme {name!r}; pick one of {sorted(_SCHEMES)}"
        ) from None


@dataclass(frozen=True)
class TrialConfig:
    scheme: BinarySchemeId | TernarySchemeId
    pivot: PivotRule
    sequence: SequenceKind
    n: int
    trials: int
    seed: int
    k: int | None = None  # default: median position ceil(n/2)
    m: int = 2  # modulus for the modm sequence

    @property
    def rank(self) -> int:
        return self.k if self.k is not None else (self.n + 1) // 2


@dataclass
class StatsRow:
    """Per-trial samples plus the derived CSV aggregates."""

    config: TrialConfig
    times_ms: list[float] = field(default_factory=list)
    key_cmps: list[int] = field(default_factory=list)
    swaps: list[int] = field(default_factory=list)
    vacuous_swaps: list[int] = field(default_factory=list)
    partitions: list[int] = field(default_factory=list)

    def cmp_per_n(self) -> list[float]:
        return [c / self.config.n for c in self.key_cmps]

    def aggregates(self) -> dict[str, float]:
        cfg = self.config
        n = cfg.n
        per = self.cmp_per_n()
        lnn = math.log(n)
        total_cmps = sum(self.key_cmps)
        total_swaps = sum(self.swaps)
        t = cfg.trials
        return {
            "time_avg_ms": sum(self.times_ms) / t,
            "time_max_ms": max(self.times_ms),
            "time_min_ms": min(self.times_ms),
            "cmp_avg_n": sum(per) / t,
            "cmp_max_n": max(per),
            "cmp_min_n": min(per),
            "part_avg_lnn": sum(self.partitions) / t / lnn,
            "swap_avg_n": sum(self.swaps) / t / n,
            "vswap_avg_n": sum(self.vacuous_swaps) / t / n,
            "swap_per_cmp": (total_swaps / total_cmps) if total_cmps else 0.0,
        }


def _g(v: float) -> str:
    return f"{v:.6g}"


def run_trials(cfg: TrialConfig) -> StatsRow:
    """Run ``cfg.trials`` independent selections and collect statistics."""
    if cfg.trials < 1:
        raise ValueError("need at least one trial")
    row = StatsRow(cfg)
    k = cfg.rank
    for trial in range(cfg.trials):
        rng = np.random.default_rng([cfg.seed, trial])
        seq_seed = int(rng.integers(0, 2**63 - 1))
        seq = generate(cfg.sequence, cfg.n, seq_seed, cfg.m)
        buf = np.zeros(cfg.n + 1, dtype=np.int64)
        buf[1:] = seq
        x = KeyArray._from_buffer(buf)
        t0 = time.perf_counter()
        res = quickselect(x, k, cfg.scheme, cfg.pivot, rng=rng)
        dt = (time.perf_counter() - t0) * 1e3
        c = res.counters
        row.times_ms.append(dt)
        row.key_cmps.append(c.key_cmps)
        row.swaps.append(c.swaps)
        row.vacuous_swaps.append(c.vacuous_swaps)
        row.partitions.append(c.partitions)
    return row


def emit_csv(rows: Iterable[StatsRow], out: TextIO) -> None:
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(CSV_HEADER.split(","))
    for row in rows:
        cfg = row.config
        agg = row.aggregates()
        writer.writerow(
            [
                cfg.scheme.value,
                cfg.pivot.value,
                cfg.sequence.value,
                str(cfg.n),
                str(cfg.rank),
                str(cfg.trials),
                str(cfg.seed),
            ]
            + [_g(agg[k]) for k in CSV_HEADER.split(",")[7:]]
        )


# ---------------------------------------------------------------------------
# exhaustive (exact) verification of the rank-conditional swap averages
# ---------------------------------------------------------------------------

_BIN_KERNEL = {
    BinarySchemeId.SBS: K._sbs,
    BinarySchemeId.SBIND1: K._sbind1,
    BinarySchemeId.SBIND2: K._sbind2,
    BinarySchemeId.SBL: K._sbl,
}


def _loop_swaps_in(trace: np.ndarray, t: int) -> int:
    return t - int(np.count_nonzero(trace[:t, 2] == K.PH_CLEAN))


def exhaustive_loop_swaps(scheme: BinarySchemeId, n: int, j: int) -> Fraction:
    """Exact average loop swaps over all (n-1)! orders of the non-pivot
    keys, pivot of rank j+1 at the front."""
    if not (2 <= n <= 10):
        raise ValueError("exhaustive check supports 2 <= n <= 10")
    if not 0 <= j <= n - 1:
        raise ValueError("bad pivot rank")
    fn = _BIN_KERNEL[scheme]
    rest = [v for v in range(1, n + 1) if v != j + 1]
    buf = np.zeros(n + 1, dtype=np.int64)
    trace = np.zeros((3 * n + 16, 3), dtype=np.int64)
    cnt = np.zeros(6, dtype=np.int64)
    total = 0
    count = 0
    for perm in permutations(rest):
        buf[1] = j + 1
        buf[2:] = perm
        _, _, t = fn(buf, 1, n, cnt, trace)
        total += _loop_swaps_in(trace, t)
        count += 1
    return Fraction(total, count)


def exhaustive_spurious(n: int, j: int) -> Fraction:
    """Exact average spurious comparisons of the primed double-index
    ternary scheme, distinct keys, pivot of rank j+1 at the front."""
    if not (2 <= n <= 10):
        raise ValueError("exhaustive check supports 2 <= n <= 10")
    rest = [v for v in range(1, n + 1) if v != j + 1]
    buf = np.zeros(n + 1, dtype=np.int64)
    trace = np.zeros((0, 3), dtype=np.int64)
    total = 0
    count = 0
    for perm in permutations(rest):
        buf[1] = j + 1
        buf[2:] = perm
        cnt = np.zeros(6, dtype=np.int64)
        K._stind2(buf, 1, n, True, cnt, trace)
        total += int(cnt[K.C_SPUR])
        count += 1
    return Fraction(total, count)


def verify_exhaustive(
    scheme: BinarySchemeId, n_values: Sequence[int] = range(2, 9)
) -> list[tuple[int, int, Fraction, Fraction, bool]]:
    """Compare enumeration against the closed forms for every pivot rank.

    Returns (n, j, measured, expected, ok) tuples.
    """
    report = []
    for n in n_values:
        for j in range(n):
            got = exhaustive_loop_swaps(scheme, n, j)
            want = expected_swaps_given_rank(scheme, n, j)
            report.append((n, j, got, want, got == want))
    return report


# ---------------------------------------------------------------------------
# Monte Carlo verification under order-statistic pivot sampling
# ---------------------------------------------------------------------------


@dataclass
class MCReport:
    mean: float
    std: float
    expected: float
    z: float
    trials: int

    @property
    def ok(self) -> bool:
        return abs(self.z) <= 4.0


def _tuned_kernel_call(scheme, buf, lbar, rbar, cnt, trace):
    if scheme in (BinarySchemeId.SBS, BinarySchemeId.SBIND1):
        return K._sbs_tuned(buf, lbar, rbar, cnt, trace)
    if scheme is BinarySchemeId.SBIND2:
        return K._sbind2(buf, lbar, rbar, cnt, trace)
    return K._sbl(buf, lbar, rbar, cnt, trace)


def mc_loop_swaps(
    scheme: BinarySchemeId,
    n: int,
    plan: SamplePlan,
    trials: int,
    seed: int,
    *,
    tuned: bool = False,
) -> MCReport:
    """Sample pivots as true order statistics of random s-samples and
    compare the mean loop-swap count against the sampled-rank formulas."""
    rng = np.random.default_rng(seed)
    s, p, q = plan.s, plan.p, plan.q
    fn = _BIN_KERNEL[scheme]
    buf = np.zeros(n + 1, dtype=np.int64)
    trace = np.zeros((3 * n + 16, 3), dtype=np.int64)
    cnt = np.zeros(6, dtype=np.int64)
    samples = np.empty(trials, dtype=np.int64)
    values = np.arange(1, n + 1, dtype=np.int64)
    for trial in range(trials):
        perm = rng.permutation(values)
        pos = rng.choice(n, size=s, replace=False)
        vals = perm[pos]
        order = np.argsort(vals)
        v = int(vals[order[p]])
        if tuned:
            svals = vals[order]
            middle = perm[~np.isin(perm, vals)]
            buf[1 : 1 + p] = svals[:p]
            buf[1 + p] = v
            buf[2 + p : 2 + p + middle.size] = middle
            if q:
                buf[n - q + 1 :] = svals[p + 1 :]
            lbar, rbar = 1 + p, n - q
            _, _, t = _tuned_kernel_call(scheme, buf, lbar, rbar, cnt, trace)
        else:
            buf[1:] = perm
            vpos = 1 + int(pos[order[p]])
            buf[1], buf[vpos] = buf[vpos], buf[1]
            _, _, t = fn(buf, 1, n, cnt, trace)
        samples[trial] = _loop_swaps_in(trace, t)
    expected = float(expected_swaps_sampled(scheme, n, plan, tuned=tuned))
    return _mc_report(samples, expected)


def mc_spurious(n: int, trials: int, seed: int) -> MCReport:
    """Spurious-comparison average of the primed double-index ternary
    scheme under median-of-3 pivots (expected 1/2)."""
    rng = np.random.default_rng(seed)
    buf = np.zeros(n + 1, dtype=np.int64)
    trace = np.zeros((0, 3), dtype=np.int64)
    values = np.arange(1, n + 1, dtype=np.int64)
    samples = np.empty(trials, dtype=np.int64)
    for trial in range(trials):
        perm = rng.permutation(values)
        pos = rng.choice(n, size=3, replace=False)
        vals = perm[pos]
        vpos = 1 + int(pos[np.argsort(vals)[1]])
        buf[1:] = perm
        buf[1], buf[vpos] = buf[vpos], buf[1]
        cnt = np.zeros(6, dtype=np.int64)
        K._stind2(buf, 1, n, True, cnt, trace)
        samples[trial] = cnt[K.C_SPUR]
    return _mc_report(samples, float(bm_spurious_expectation(n)))


def _mc_report(samples: np.ndarray, expected: float) -> MCReport:
    mean = float(samples.mean())
    std = float(samples.std(ddof=1)) if samples.size > 1 else 0.0
    se = std / math.sqrt(samples.size) if std else float("inf")
    z = (mean - expected) / se if se else 0.0
    if std == 0.0:
        z = 0.0 if mean == expected else float("inf")
    return MCReport(mean, std, expected, z, int(samples.size))


def verify_montecarlo(
    scheme: BinarySchemeId,
    n: int,
    plan: SamplePlan,
    trials: int,
    seed: int,
    *,
    tuned: bool = False,
) -> MCReport:
    return mc_loop_swaps(scheme, n, plan, trials, seed, tuned=tuned)
