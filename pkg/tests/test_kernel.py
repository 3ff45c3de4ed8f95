"""Unit tests for the 1-based key array, counters, and swap traces."""

import numpy as np
import pytest

from partsel import (
    Counters,
    KeyArray,
    Ordering,
    SwapPhase,
    SwapTrace,
    as_key_array,
    three_way_compare,
    vector_swap,
)


def test_key_array_is_one_based():
    x = KeyArray([5, 7, 9])
    assert x.n == len(x) == 3
    assert x[1] == 5 and x[3] == 9
    assert x.to_list() == [5, 7, 9]
    x[2] = 42
    assert list(x) == [5, 42, 9]


@pytest.mark.parametrize("i", [0, 4, -1])
def test_key_array_bounds_checked(i):
    x = KeyArray([1, 2, 3])
    with pytest.raises(IndexError):
        x[i]
    with pytest.raises(IndexError):
        x[i] = 0


def test_key_array_copy_and_eq():
    x = KeyArray([1, 2])
    y = x.copy()
    assert x == y
    y[1] = 9
    assert x != y
    assert x == [1, 2]


def test_three_way_compare_counts_one_comparison():
    c = Counters()
    assert three_way_compare(1, 2, c) is Ordering.LESS
    assert three_way_compare(2, 2, c) is Ordering.EQUAL
    assert three_way_compare(3, 2, c) is Ordering.GREATER
    assert c.key_cmps == 3
    assert c.swaps == 0


def test_counters_roundtrip_through_array():
    c = Counters(key_cmps=1, index_cmps=2, swaps=3, vacuous_swaps=4,
                 spurious_cmps=5, partitions=6)
    arr = c.as_array()
    assert arr.dtype == np.int64
    assert Counters.from_array(arr) == c


def test_vector_swap_exchanges_blocks():
    x = as_key_array([1, 2, 3, 4, 5, 6])
    c = Counters()
    # blocks x[1:2] and x[5:6]
    d = vector_swap(x, 1, 2, 6, c)
    assert d == 2
    assert x.to_list() == [6, 5, 3, 4, 2, 1]
    assert c.swaps == 2
    assert c.vacuous_swaps == 0


def test_vector_swap_uses_shorter_block():
    x = as_key_array([1, 2, 3, 4, 5])
    c = Counters()
    d = vector_swap(x, 1, 3, 5, c)  # left block of 3, right block of 2
    assert d == 2
    assert x.to_list() == [5, 4, 3, 2, 1]


def test_vector_swap_empty_block_is_free():
    x = as_key_array([1, 2, 3])
    c = Counters()
    assert vector_swap(x, 2, 1, 3, c) == 0
    assert x.to_list() == [1, 2, 3]
    assert c.swaps == 0


def test_vector_swap_validates_bounds():
    x = as_key_array([1, 2, 3])
    c = Counters()
    with pytest.raises(ValueError):
        vector_swap(x, 3, 1, 2, c)


def test_swap_trace_phases_and_replay():
    arr = np.array([[1, 3, int(SwapPhase.LOOP)],
                    [2, 2, int(SwapPhase.CLEANUP)]], dtype=np.int64)
    tr = SwapTrace.from_array(arr, 2)
    assert len(tr) == 2
    assert tr.pairs() == [(1, 3), (2, 2)]
    assert tr.nonvacuous() == [(1, 3)]
    assert tr.count(SwapPhase.CLEANUP) == 1
    assert tr.loop_swaps() == 1
    x = as_key_array([10, 20, 30])
    y = tr.replay(x)
    assert y.to_list() == [30, 20, 10]
    assert x.to_list() == [10, 20, 30]


def test_as_key_array_accepts_numpy_and_lists():
    assert as_key_array(np.array([3, 1])).to_list() == [3, 1]
    x = KeyArray([1])
    assert as_key_array(x) is x
