from __future__ import annotations

import pytest

from isdkit import FqVector, LinearCode, golay_23_12, hamming_7_4, repetition


@pytest.fixture(scope="session")
def hamming() -> LinearCode:
    return hamming_7_4()


@pytest.fixture(scope="session")
def golay() -> LinearCode:
    return golay_23_12()


@pytest.fixture(scope="session")
def code52() -> LinearCode:
    # [5,2,3] toy code; small enough for fully exhaustive checks
    return LinearCode.from_generator(2, [(1, 0, 1, 1, 0), (0, 1, 1, 0, 1)], d=3)


@pytest.fixture(scope="session")
def rep3() -> LinearCode:
    return repetition(3)


def vec(code: LinearCode, *entries: int) -> FqVector:
    return FqVector(code.field, tuple(entries))


def all_words(code: LinearCode):
    """Every vector in GF(q)^n, lexicographically."""
    from itertools import product

    for entries in product(range(code.field.q), repeat=code.n):
        yield FqVector(code.field, entries)
