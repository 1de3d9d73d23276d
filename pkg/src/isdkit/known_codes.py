"""Classical reference codes used for demos and certification."""

from __future__ import annotations

from .codes import LinearCode

# x^11 + x^10 + x^6 + x^5 + x^4 + x^2 + 1, bit i = coefficient of x^i
_GOLAY_GEN_POLY = 0b110001110101


def hamming_7_4() -> LinearCode:
    """The binary [7,4,3] Hamming code, perfect with t = 1."""
    a = ((1, 1, 0), (1, 0, 1), (0, 1, 1), (1, 1, 1))
    rows = [tuple(1 if j == i else 0 for j in range(4)) + a[i] for i in range(4)]
    return LinearCode.from_generator(2, rows, d=3)


def _gf2_poly_mod(a: int, m: int) -> int:
    mbits = m.bit_length()
    while a.bit_length() >= mbits:
        a ^= m << (a.bit_length() - mbits)
    return a


def golay_23_12() -> LinearCode:
    """The binary [23,12,7] Golay code, perfect with t = 3.

    Row i carries the parity remainder of x^(11+i) modulo the generator
    polynomial of the cyclic code, so [I_12 | A] spans the code directly.
    """
    rows = []
    for i in range(12):
        rem = _gf2_poly_mod(1 << (11 + i), _GOLAY_GEN_POLY)
        ident = tuple(1 if j == i else 0 for j in range(12))
        parity = tuple((rem >> r) & 1 for r in range(11))
        rows.append(ident + parity)
    return LinearCode.from_generator(2, rows, d=7)


def repetition(n: int, q: int = 2) -> LinearCode:
    """The [n, 1, n] repetition code."""
    if n < 2:
        raise ValueError("repetition needs n >= 2")
    return LinearCode.from_generator(q, [(1,) * n], d=n)
