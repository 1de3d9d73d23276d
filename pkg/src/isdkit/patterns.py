"""Streaming enumeration of information-set error patterns.

Patterns of weight <= w over k positions are emitted in a fixed total order:
weight ascending, then support ascending in lexicographic order of sorted
position tuples, then value assignments in lexicographic order over the
nonzero residues 1..q-1.  The first emission is always the zero pattern.

The generator keeps O(k) state (current support and value odometer), so the
full weight-w ball never has to be materialised; the emitted count is exactly
V_q(k, w).
"""

from __future__ import annotations

from itertools import combinations, product
from typing import Iterator

from .codes import ball_volume
from .fields import FieldSpec, FqVector

Support = tuple[int, ...]
Values = tuple[int, ...]


def weight_ordered_patterns(k: int, q: int, max_weight: int) -> Iterator[tuple[Support, Values]]:
    """Yield (support, values) for every pattern of weight <= max_weight.

    support is a strictly increasing position tuple, values the matching
    nonzero residues; the zero pattern is ((), ()).
    """
    if k < 1:
        raise ValueError("need at least one position")
    if max_weight < 0:
        raise ValueError("weight bound must be nonnegative")
    yield (), ()
    for w in range(1, min(max_weight, k) + 1):
        for support in combinations(range(k), w):
            for values in product(range(1, q), repeat=w):
                yield support, values


class PatternEnumerator:
    """Single-consumer stream of the patterns of weight <= max_weight.

    Distinct instances are independent; replaying a fresh enumerator yields
    the identical sequence.
    """

    def __init__(self, field: FieldSpec, k: int, max_weight: int):
        self.field = field
        self.k = k
        self.max_weight = max_weight
        self.total = ball_volume(k, min(max_weight, k), field.q)
        self.emitted = 0
        self._stream = weight_ordered_patterns(k, field.q, max_weight)

    def __iter__(self) -> PatternEnumerator:
        return self

    def __next__(self) -> FqVector:
        support, values = next(self._stream)
        self.emitted += 1
        entries = [0] * self.k
        for pos, val in zip(support, values):
            entries[pos] = val
        return FqVector(self.field, tuple(entries))

    def next_pattern(self) -> FqVector | None:
        """The next pattern in order, or None once exhausted."""
        try:
            return next(self)
        except StopIteration:
            return None

    def count_remaining(self) -> int:
        """Patterns not yet emitted, computed from V_q(k, w), not by enumeration."""
        return self.total - self.emitted
