"""Instrumented in-place partitioning schemes and quickselect.

Binary schemes split around a pivot value v into keys < v and keys
>= v; ternary schemes additionally gather the keys equal to v into a
middle block.  Every scheme reports exact operation counts (key
comparisons, index comparisons, swaps, vacuous swaps) and can record
its full swap trace.  On top of the partitioning kernels the package
provides sampled pivot rules, a nonrecursive quickselect, exact
average-case swap-count formulas, adversarial input generators, and a
benchmarking/verification harness.
"""

from .analysis import (
    bm_spurious_expectation,
    expected_swaps_distribution,
    expected_swaps_given_rank,
    expected_swaps_sampled,
    max_expected_swaps,
    mean_over_ranks,
    rank_moments,
    swap_rate_bound,
    swap_rate_sampled,
)
from .bench import (
    CSV_HEADER,
    MCReport,
    StatsRow,
    TrialConfig,
    emit_csv,
    exhaustive_loop_swaps,
    exhaustive_spurious,
    mc_loop_swaps,
    mc_spurious,
    run_trials,
    scheme_by_name,
    verify_exhaustive,
    verify_montecarlo,
)
from .bipartition import BinarySchemeId, SamplePlan, bipartition, bipartition_tuned
from .kernel import (
    Counters,
    KeyArray,
    Ordering,
    PartitionResult,
    SwapEntry,
    SwapPhase,
    SwapTrace,
    as_key_array,
    three_way_compare,
    vector_swap,
)
from .pivot import (
    PivotRule,
    RankDistribution,
    median3_binary,
    median3_ternary,
    ninther_distribution,
    place_random_pivot,
)
from .selection import SelectResult, quickselect
from .seqgen import SequenceKind, generate
from .tripartition import TernarySchemeId, TunedLayout, tripartition, tripartition_tuned

__version__ = "0.1.0"

__all__ = [
    "BinarySchemeId",
    "CSV_HEADER",
    "Counters",
    "KeyArray",
    "MCReport",
    "Ordering",
    "PartitionResult",
    "PivotRule",
    "RankDistribution",
    "SamplePlan",
    "SelectResult",
    "SequenceKind",
    "StatsRow",
    "SwapEntry",
    "SwapPhase",
    "SwapTrace",
    "TernarySchemeId",
    "TrialConfig",
    "TunedLayout",
    "as_key_array",
    "bipartition",
    "bipartition_tuned",
    "bm_spurious_expectation",
    "emit_csv",
    "exhaustive_loop_swaps",
    "exhaustive_spurious",
    "expected_swaps_distribution",
    "expected_swaps_given_rank",
    "expected_swaps_sampled",
    "generate",
    "max_expected_swaps",
    "mc_loop_swaps",
    "mc_spurious",
    "mean_over_ranks",
    "median3_binary",
    "median3_ternary",
    "ninther_distribution",
    "place_random_pivot",
    "quickselect",
    "rank_moments",
    "run_trials",
    "scheme_by_name",
    "swap_rate_bound",
    "swap_rate_sampled",
    "three_way_compare",
    "tripartition",
    "tripartition_tuned",
    "verify_exhaustive",
    "verify_montecarlo",
    "vector_swap",
]
