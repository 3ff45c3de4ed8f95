"""Cross-scheme equivalences.

On distinct keys each binary scheme and its ternary counterpart make the
same moves (compared on non-vacuous swaps, since a conditional cleanup
swap on one side can be a width-zero block move on the other).  The two
hybrid pairs coincide on every input; the index-controlled hybrids match
the plain double-index scheme except on the degenerate inputs where no
key exceeds the pivot.
"""

import numpy as np
import pytest
from itertools import product

from partsel import (
    BinarySchemeId,
    SamplePlan,
    TernarySchemeId,
    TunedLayout,
    as_key_array,
    bipartition,
    bipartition_tuned,
    tripartition,
    tripartition_tuned,
)

from conftest import distinct_cases, random_cases

PAIRS = [
    (BinarySchemeId.SBS, TernarySchemeId.STS),
    (BinarySchemeId.SBIND1, TernarySchemeId.STIND1),
    (BinarySchemeId.SBIND2, TernarySchemeId.STIND2),
    (BinarySchemeId.SBL, TernarySchemeId.STL),
]


@pytest.mark.parametrize("binary,ternary", PAIRS)
def test_binary_ternary_pairs_on_distinct_keys(binary, ternary):
    for case in distinct_cases(61, 800, 128):
        x1 = as_key_array(list(case))
        r1 = bipartition(binary, x1, trace=True)
        x2 = as_key_array(list(case))
        r2 = tripartition(ternary, x2, trace=True)
        assert (r1.a, r1.b) == (r2.a, r2.b), case
        assert r1.counters.key_cmps == r2.counters.key_cmps, case
        assert r1.trace.nonvacuous() == r2.trace.nonvacuous(), case
        assert x1.to_list() == x2.to_list(), case


def test_single_vs_double_index_traces_on_distinct_keys():
    for case in distinct_cases(67, 800, 128):
        x1 = as_key_array(list(case))
        r1 = bipartition(BinarySchemeId.SBIND1, x1, trace=True)
        x2 = as_key_array(list(case))
        r2 = bipartition(BinarySchemeId.SBIND2, x2, trace=True)
        assert r1.trace.pairs() == r2.trace.pairs(), case
        assert x1.to_list() == x2.to_list(), case


def test_hybrid_pair_identical_on_all_inputs():
    """The stopper-guarded and index-controlled stage-two variants make
    exactly the same swaps, duplicates included."""
    for n in range(2, 7):
        for pat in product(range(3), repeat=n):
            _assert_same_hybrid(list(pat))
    for case in random_cases(71, 500, 64):
        _assert_same_hybrid(case)


def _assert_same_hybrid(case):
    x1 = as_key_array(list(case))
    r1 = tripartition(TernarySchemeId.STH, x1, trace=True)
    x2 = as_key_array(list(case))
    r2 = tripartition(TernarySchemeId.STIND2H, x2, trace=True)
    assert (r1.a, r1.b) == (r2.a, r2.b), case
    assert r1.trace.pairs() == r2.trace.pairs(), case
    assert x1.to_list() == x2.to_list(), case


def test_alt_hybrid_pair_identical_on_all_inputs():
    for n in range(2, 7):
        for pat in product(range(3), repeat=n):
            x1 = as_key_array(list(pat))
            r1 = tripartition(TernarySchemeId.STHALT, x1, trace=True)
            x2 = as_key_array(list(pat))
            r2 = tripartition(TernarySchemeId.STIND2HALT, x2, trace=True)
            assert (r1.a, r1.b) == (r2.a, r2.b), pat
            assert r1.trace.pairs() == r2.trace.pairs(), pat
            assert x1.to_list() == x2.to_list(), pat


def _is_degenerate(case):
    v = case[0]
    return (any(k != v for k in case)
            and case[-1] == v
            and not any(k > v for k in case))


def test_hybrids_match_double_index_outside_degenerate_inputs():
    """Up to vacuous swaps, the hybrids behave like the double-index
    scheme except when keys are mixed, x_r = v, and nothing exceeds v."""
    for n in range(2, 7):
        for pat in product(range(3), repeat=n):
            if _is_degenerate(list(pat)):
                continue
            x1 = as_key_array(list(pat))
            r1 = tripartition(TernarySchemeId.STIND2, x1, trace=True)
            for scheme in (TernarySchemeId.STH, TernarySchemeId.STHALT):
                x2 = as_key_array(list(pat))
                r2 = tripartition(scheme, x2, trace=True)
                assert (r1.a, r1.b) == (r2.a, r2.b), (scheme, pat)
                assert r1.trace.nonvacuous() == r2.trace.nonvacuous(), (scheme, pat)
                assert x1.to_list() == x2.to_list(), (scheme, pat)


def test_degenerate_inputs_do_differ():
    """Confirm the carve-out above is real, not over-broad."""
    diffs = 0
    for n in range(3, 7):
        for pat in product(range(3), repeat=n):
            if not _is_degenerate(list(pat)):
                continue
            x1 = as_key_array(list(pat))
            tripartition(TernarySchemeId.STIND2, x1, trace=True)
            x2 = as_key_array(list(pat))
            tripartition(TernarySchemeId.STH, x2, trace=True)
            diffs += x1.to_list() != x2.to_list()
    assert diffs > 0


def test_tuned_pairs_on_distinct_keys():
    rng = np.random.default_rng(73)
    for _ in range(400):
        n = int(rng.integers(8, 64))
        perm = (rng.permutation(n) + 1).tolist()
        srt = sorted(perm)
        s, p = 3, 1
        q = s - 1 - p
        # common arrangement: [low sample key][pivot][interior][high sample key]
        interior = [k for k in perm if k not in (srt[0], srt[p], srt[-1])]
        arranged = [srt[0], srt[p]] + interior + [srt[-1]]
        for binary, ternary in PAIRS:
            x1 = as_key_array(list(arranged))
            r1 = bipartition_tuned(binary, x1, 1, n, SamplePlan(s, p), trace=True)
            x2 = as_key_array(list(arranged))
            layout = TunedLayout(l=1, lbar=2, p=3, q=n - 1, rbar=n - 1, r=n)
            r2 = tripartition_tuned(ternary, x2, layout, trace=True)
            assert (r1.a, r1.b) == (r2.a, r2.b), (binary, arranged)
            assert r1.trace.nonvacuous() == r2.trace.nonvacuous(), (binary, arranged)
            assert x1.to_list() == x2.to_list(), (binary, arranged)
