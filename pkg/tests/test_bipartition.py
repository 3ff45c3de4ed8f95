"""Binary partitioning schemes: golden traces, invariants, closed forms."""

from itertools import product

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from partsel import BinarySchemeId, SamplePlan, as_key_array, bipartition, bipartition_tuned

from conftest import assert_binary_postcondition, random_cases

ALL = list(BinarySchemeId)
SAFEGUARDED = (BinarySchemeId.SBS,)
INDEX1 = (BinarySchemeId.SBIND1,)


def test_two_elements_sorted_golden():
    x = as_key_array([1, 2])
    r = bipartition(BinarySchemeId.SBS, x, trace=True)
    assert (r.a, r.b) == (1, 1)
    assert x.to_list() == [1, 2]
    assert r.counters.key_cmps == 3
    assert r.counters.swaps == 1
    assert r.counters.vacuous_swaps == 1
    assert r.trace.pairs() == [(1, 1)]


def test_double_index_golden():
    x = as_key_array([3, 1, 4, 1, 5])
    r = bipartition(BinarySchemeId.SBIND2, x)
    assert (r.a, r.b) == (3, 3)
    assert x.to_list() == [1, 1, 3, 4, 5]
    assert r.counters.key_cmps == 4
    assert r.counters.swaps == 2


@pytest.mark.parametrize("scheme", ALL)
def test_postcondition_exhaustive_small(scheme):
    for n in range(2, 7):
        for pat in product(range(3), repeat=n):
            x = as_key_array(list(pat))
            r = bipartition(scheme, x)
            assert_binary_postcondition(list(pat), x, r.a, r.b)


@pytest.mark.parametrize("scheme", ALL)
def test_postcondition_randomized(scheme):
    for case in random_cases(17, 300, 64):
        x = as_key_array(case)
        r = bipartition(scheme, x)
        assert_binary_postcondition(case, x, r.a, r.b)


@given(st.lists(st.integers(-50, 50), min_size=2, max_size=40))
@settings(max_examples=200, deadline=None)
def test_postcondition_property(case):
    for scheme in ALL:
        x = as_key_array(case)
        r = bipartition(scheme, x)
        assert_binary_postcondition(case, x, r.a, r.b)


@pytest.mark.parametrize("scheme,lohi", [
    (BinarySchemeId.SBS, (None, None)),
    (BinarySchemeId.SBIND1, (None, None)),
    (BinarySchemeId.SBIND2, ("exact", "exact")),
    (BinarySchemeId.SBL, ("exact", "exact")),
])
def test_key_comparison_counts(scheme, lohi):
    """Safeguarded/single-index: n or n+1 comparisons; others exactly n-1."""
    for case in random_cases(23, 300, 48):
        n = len(case)
        x = as_key_array(case)
        r = bipartition(scheme, x)
        if lohi == ("exact", "exact"):
            assert r.counters.key_cmps == n - 1
        else:
            assert r.counters.key_cmps in (n, n + 1)


def test_vacuous_swaps_are_counted_in_swaps():
    for scheme in ALL:
        for case in random_cases(5, 100, 32):
            x = as_key_array(case)
            r = bipartition(scheme, x, trace=True)
            vac = sum(1 for e in r.trace if e.vacuous)
            assert vac == r.counters.vacuous_swaps
            assert len(r.trace) == r.counters.swaps
            assert r.counters.vacuous_swaps <= r.counters.swaps


def _all_equal(scheme, n):
    x = as_key_array([7] * n)
    r = bipartition(scheme, x)
    return r.a, r.b, r.counters


@pytest.mark.parametrize("n", range(2, 65))
def test_all_equal_closed_forms(n):
    l, r = 1, n
    # safeguarded scheme
    a, b, c = _all_equal(BinarySchemeId.SBS, n)
    assert c.swaps == (n + 1 + 1) // 2
    assert a == (l + r - 1) // 2
    assert b == a + 1 + (n % 2)
    # single-index scheme
    a, b, c = _all_equal(BinarySchemeId.SBIND1, n)
    assert c.swaps == (n + 1) // 2
    assert a == (l + r) // 2
    assert b == a + 1 - (n % 2)
    # double-index scheme
    a, b, c = _all_equal(BinarySchemeId.SBIND2, n)
    assert c.swaps == (n + 1) // 2
    assert a == b == (l + r) // 2
    # single-scan scheme: only the (vacuous) cleanup swap
    a, b, c = _all_equal(BinarySchemeId.SBL, n)
    assert (a, b) == (l, l)
    assert c.swaps == 1 and c.vacuous_swaps == 1


def test_sample_plan_validation():
    assert SamplePlan(3, 1).q == 1
    with pytest.raises(ValueError):
        SamplePlan(0, 0)
    with pytest.raises(ValueError):
        SamplePlan(3, 3)
    with pytest.raises(ValueError):
        SamplePlan(3, -1)


def _tuned_layout(case, plan):
    """Arrange case as [p lows][pivot][middle][q highs] for the plan."""
    srt = sorted(case)
    p, q = plan.p, plan.q
    n = len(case)
    lows, v, highs = srt[:p], srt[p], srt[n - q:] if q else []
    middle = sorted(case)[p + 1: n - q]
    rng = np.random.default_rng(hash(tuple(case)) % 2**32)
    middle = rng.permutation(middle).tolist()
    return lows + [v] + middle + highs


@pytest.mark.parametrize("scheme", ALL)
@pytest.mark.parametrize("plan", [SamplePlan(3, 1), SamplePlan(3, 0), SamplePlan(5, 2)])
def test_tuned_postcondition(scheme, plan):
    for case in random_cases(31, 200, 40, low=0, high=1000):
        n = len(case)
        if n <= plan.s + 1:
            continue
        arranged = _tuned_layout(case, plan)
        x = as_key_array(arranged)
        r = bipartition_tuned(scheme, x, 1, n, plan, trace=True)
        assert_binary_postcondition([arranged[plan.p]] + arranged[:plan.p]
                                    + arranged[plan.p + 1:], x, r.a, r.b)
        # tuned runs scan only the interior of n - s + 1 keys
        assert r.counters.key_cmps <= n - plan.s + 2


def test_tuned_pivot_only_plan_needs_a_right_bound():
    # strictly decreasing from the pivot: no key >= v to stop the scan
    x = as_key_array([5, 4, 3, 2, 1])
    with pytest.raises(ValueError):
        bipartition_tuned(BinarySchemeId.SBS, x, 1, 5, SamplePlan(1, 0))
    x = as_key_array([3, 4, 1, 2, 5])
    r = bipartition_tuned(BinarySchemeId.SBS, x, 1, 5, SamplePlan(1, 0))
    assert_binary_postcondition([3, 4, 1, 2, 5], x, r.a, r.b)


def test_tuned_rejects_unbounded_scan_for_larger_samples():
    x = as_key_array([1, 2, 9, 8, 7])
    with pytest.raises(ValueError):
        bipartition_tuned(BinarySchemeId.SBIND1, x, 1, 5, SamplePlan(3, 2))


def test_range_validation():
    x = as_key_array([1, 2, 3])
    with pytest.raises(ValueError):
        bipartition(BinarySchemeId.SBS, x, 2, 2)
    with pytest.raises(ValueError):
        bipartition(BinarySchemeId.SBS, x, 0, 3)
    with pytest.raises(ValueError):
        bipartition(BinarySchemeId.SBS, x, 1, 4)


def test_subrange_partitioning_leaves_rest_untouched():
    base = [9, 3, 1, 2, 0, 9]
    x = as_key_array(list(base))
    r = bipartition(BinarySchemeId.SBIND2, x, 2, 5)
    assert x[1] == 9 and x[6] == 9
    inner = x.to_list()[1:5]
    assert sorted(inner) == sorted(base[1:5])
    assert_binary_postcondition(base[1:5], as_key_array(inner), r.a - 1, r.b - 1)
