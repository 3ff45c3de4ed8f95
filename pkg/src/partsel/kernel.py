"""Shared instrumentation types: keys, counters, swap traces, primitives.

Arrays are indexed 1-based over inclusive ranges [l, r]; all indices
reported by this package follow that convention.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

import numpy as np

from ._kernels import (
    C_IDX,
    C_KEY,
    C_PART,
    C_SPUR,
    C_SWAP,
    C_VAC,
)

__all__ = [
    "KeyArray",
    "Counters",
    "Ordering",
    "SwapPhase",
    "SwapTrace",
    "PartitionResult",
    "three_way_compare",
    "vector_swap",
]


class Ordering(enum.IntEnum):
    LESS = -1
    EQUAL = 0
    GREATER = 1


class SwapPhase(enum.IntEnum):
    """Which part of a partitioning scheme performed a swap."""

    LOOP = 0
    EQUAL_LEFT = 1
    EQUAL_RIGHT = 2
    CLEANUP = 3

    def __str__(self) -> str:
        return _PHASE_NAMES[self]


_PHASE_NAMES = {
    SwapPhase.LOOP: "loop",
    SwapPhase.EQUAL_LEFT: "equal-left",
    SwapPhase.EQUAL_RIGHT: "equal-right",
    SwapPhase.CLEANUP: "cleanup",
}


class KeyArray:
    """A 1-based array of int64 keys.

    The backing buffer keeps an unused slot at index 0 so that kernels can
    use textbook index arithmetic directly.
    """

    __slots__ = ("_buf",)

    def __init__(self, keys: Iterable[int]):
        keys = list(keys)
        buf = np.zeros(len(keys) + 1, dtype=np.int64)
        if keys:
            buf[1:] = keys
        self._buf = buf

    @classmethod
    def _from_buffer(cls, buf: np.ndarray) -> "KeyArray":
        out = cls.__new__(cls)
        out._buf = buf
        return out

    @property
    def n(self) -> int:
        return self._buf.shape[0] - 1

    def __len__(self) -> int:
        return self.n

    def _check(self, i: int) -> int:
        if not 1 <= i <= self.n:
            raise IndexError(f"index {i} outside 1..{self.n}")
        return i

    def __getitem__(self, i: int) -> int:
        return int(self._buf[self._check(i)])

    def __setitem__(self, i: int, value: int) -> None:
        self._buf[self._check(i)] = value

    def __iter__(self) -> Iterator[int]:
        return iter(self.to_list())

    def to_list(self) -> list[int]:
        return [int(v) for v in self._buf[1:]]

    def copy(self) -> "KeyArray":
        return KeyArray._from_buffer(self._buf.copy())

    def __eq__(self, other: object) -> bool:
        if isinstance(other, KeyArray):
            return bool(np.array_equal(self._buf[1:], other._buf[1:]))
        if isinstance(other, (list, tuple)):
            return self.to_list() == list(other)
        return NotImplemented

    def __repr__(self) -> str:
        return f"KeyArray({self.to_list()})"


@dataclass
class Counters:
    """Per-run instrumentation totals.

    Vacuous swaps are swaps with i == j; they are executed and counted
    both in ``swaps`` and in ``vacuous_swaps``.  ``spurious_cmps`` records
    the extra comparison the primed double-index ternary scheme makes when
    its scans meet.
    """

    key_cmps: int = 0
    index_cmps: int = 0
    swaps: int = 0
    vacuous_swaps: int = 0
    spurious_cmps: int = 0
    partitions: int = 0

    def as_array(self) -> np.ndarray:
        out = np.zeros(6, dtype=np.int64)
        out[C_KEY] = self.key_cmps
        out[C_IDX] = self.index_cmps
        out[C_SWAP] = self.swaps
        out[C_VAC] = self.vacuous_swaps
        out[C_SPUR] = self.spurious_cmps
        out[C_PART] = self.partitions
        return out

    @classmethod
    def from_array(cls, arr: np.ndarray) -> "Counters":
        return cls(
            key_cmps=int(arr[C_KEY]),
            index_cmps=int(arr[C_IDX]),
            swaps=int(arr[C_SWAP]),
            vacuous_swaps=int(arr[C_VAC]),
            spurious_cmps=int(arr[C_SPUR]),
            partitions=int(arr[C_PART]),
        )

    def load_array(self, arr: np.ndarray) -> None:
        self.key_cmps = int(arr[C_KEY])
        self.index_cmps = int(arr[C_IDX])
        self.swaps = int(arr[C_SWAP])
        self.vacuous_swaps = int(arr[C_VAC])
        self.spurious_cmps = int(arr[C_SPUR])
        self.partitions = int(arr[C_PART])


@dataclass(frozen=True)
class SwapEntry:
    i: int
    j: int
    phase: SwapPhase

    @property
    def vacuous(self) -> bool:
        return self.i == self.j


@dataclass
class SwapTrace:
    """Chronological record of executed swaps with their phase tags."""

    entries: list[SwapEntry] = field(default_factory=list)

    @classmethod
    def from_array(cls, arr: np.ndarray, count: int) -> "SwapTrace":
        return cls(
            [
                SwapEntry(int(arr[m, 0]), int(arr[m, 1]), SwapPhase(int(arr[m, 2])))
                for m in range(count)
            ]
        )

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self) -> Iterator[SwapEntry]:
        return iter(self.entries)

    def pairs(self) -> list[tuple[int, int]]:
        return [(e.i, e.j) for e in self.entries]

    def nonvacuous(self) -> list[tuple[int, int]]:
        return [(e.i, e.j) for e in self.entries if not e.vacuous]

    def count(self, phase: SwapPhase) -> int:
        return sum(1 for e in self.entries if e.phase == phase)

    def loop_swaps(self) -> int:
        """Swaps made before the final block-moving swaps."""
        return sum(1 for e in self.entries if e.phase != SwapPhase.CLEANUP)

    def replay(self, x: KeyArray) -> KeyArray:
        """Apply the recorded swaps to a copy of ``x`` and return it."""
        out = x.copy()
        for e in self.entries:
            out[e.i], out[e.j] = out[e.j], out[e.i]
        return out


@dataclass
class PartitionResult:
    """Outcome of one partitioning pass.

    The final arrangement is x[l:a-1] below the pivot block, x[a:b] the
    pivot block, x[b+1:r] above it (with <=/>= in place of </> for the
    binary schemes).  Always l <= a <= b + 1 and b <= r.
    """

    a: int
    b: int
    counters: Counters
    trace: SwapTrace | None = None


def three_way_compare(key: int, pivot: int, counters: Counters) -> Ordering:
    """Probe one key against the pivot; costs one key comparison."""
    counters.key_cmps += 1
    if key < pivot:
        return Ordering.LESS
    if key > pivot:
        return Ordering.GREATER
    return Ordering.EQUAL


def vector_swap(
    x: KeyArray,
    a: int,
    b: int,
    c: int,
    counters: Counters,
    trace: SwapTrace | None = None,
) -> int:
    """Exchange the adjacent blocks x[a:b] and x[b+1:c].

    Moves d = min(b+1-a, c-b) element pairs in fixed order
    x[a+m] <-> x[c-m]; counts d swaps; does nothing when d <= 0.
    Returns d.
    """
    if not (a <= b + 1 and b <= c):
        raise ValueError(f"invalid block bounds a={a}, b={b}, c={c}")
    d = min(b + 1 - a, c - b)
    if d <= 0:
        return 0
    if not (1 <= a and c <= x.n):
        raise IndexError(f"blocks [{a},{c}] outside 1..{x.n}")
    for m in range(d):
        i, j = a + m, c - m
        x[i], x[j] = x[j], x[i]
        counters.swaps += 1
        if i == j:
            counters.vacuous_swaps += 1
        if trace is not None:
            trace.entries.append(SwapEntry(i, j, SwapPhase.CLEANUP))
    return d


def as_key_array(keys: "KeyArray | Sequence[int] | np.ndarray") -> KeyArray:
    """Coerce a sequence to a KeyArray (no copy if already one)."""
    if isinstance(keys, KeyArray):
        return keys
    return KeyArray(keys)
