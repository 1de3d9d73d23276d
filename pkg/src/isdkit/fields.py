"""Exact linear algebra over prime fields GF(q).

Field elements are plain integer residues in [0, q).  Vectors and matrices
are immutable (frozen dataclasses over tuples), so any value can be shared
freely across threads; every operation here is a pure function.

The one nontrivial operation is :func:`to_systematic`, which brings an
arbitrary full-rank generator matrix into the standard form [I_k | A] by
Gauss-Jordan elimination, swapping pivotless columns to the back and
recording the column order in a :class:`ColumnPermutation`.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence


class RankError(ValueError):
    """Raised when a generator matrix does not have full row rank."""

    def __init__(self, achieved: int, expected: int):
        self.achieved = achieved
        self.expected = expected
        super().__init__(f"matrix has rank {achieved}, expected {expected}")


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


@dataclass(frozen=True)
class FieldSpec:
    """The prime field GF(q); operands and results are residues in [0, q)."""

    q: int

    def __post_init__(self):
        if not _is_prime(self.q):
            raise ValueError(f"field size must be prime, got {self.q}")

    def validate(self, a: int) -> int:
        if not 0 <= a < self.q:
            raise ValueError(f"residue {a} out of range for GF({self.q})")
        return a

    def add(self, a: int, b: int) -> int:
        return (a + b) % self.q

    def sub(self, a: int, b: int) -> int:
        return (a - b) % self.q

    def mul(self, a: int, b: int) -> int:
        return (a * b) % self.q

    def neg(self, a: int) -> int:
        return (-a) % self.q

    def inv(self, a: int) -> int:
        """Multiplicative inverse by Fermat's little theorem (q prime)."""
        if a % self.q == 0:
            raise ZeroDivisionError(f"zero has no inverse in GF({self.q})")
        return pow(a, self.q - 2, self.q)

    def elements(self) -> range:
        return range(self.q)

    def nonzero(self) -> range:
        return range(1, self.q)


@dataclass(frozen=True)
class FqVector:
    """A fixed-length vector of residues over GF(q)."""

    field: FieldSpec
    entries: tuple[int, ...]

    def __post_init__(self):
        for e in self.entries:
            self.field.validate(e)

    @classmethod
    def zero(cls, field: FieldSpec, n: int) -> FqVector:
        return cls(field, (0,) * n)

    @classmethod
    def unit(cls, field: FieldSpec, n: int, pos: int, value: int = 1) -> FqVector:
        entries = [0] * n
        entries[pos] = field.validate(value)
        return cls(field, tuple(entries))

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self) -> Iterator[int]:
        return iter(self.entries)

    def __getitem__(self, i: int) -> int:
        return self.entries[i]

    def __add__(self, other: FqVector) -> FqVector:
        self._check_peer(other)
        q = self.field.q
        return FqVector(self.field, tuple((a + b) % q for a, b in zip(self.entries, other.entries)))

    def __sub__(self, other: FqVector) -> FqVector:
        self._check_peer(other)
        q = self.field.q
        return FqVector(self.field, tuple((a - b) % q for a, b in zip(self.entries, other.entries)))

    def scale(self, c: int) -> FqVector:
        q = self.field.q
        return FqVector(self.field, tuple((c * a) % q for a in self.entries))

    def concat(self, other: FqVector) -> FqVector:
        self._check_field(other)
        return FqVector(self.field, self.entries + other.entries)

    @property
    def weight(self) -> int:
        """Hamming weight: number of nonzero entries."""
        return sum(1 for e in self.entries if e)

    def _check_field(self, other: FqVector) -> None:
        if self.field != other.field:
            raise ValueError(f"field mismatch: GF({self.field.q}) vs GF({other.field.q})")

    def _check_peer(self, other: FqVector) -> None:
        self._check_field(other)
        if len(self) != len(other):
            raise ValueError(f"length mismatch: {len(self)} vs {len(other)}")


def hamming_distance(a: FqVector, b: FqVector) -> int:
    if a.field != b.field or len(a) != len(b):
        raise ValueError("vectors must share field and length")
    return sum(1 for x, y in zip(a.entries, b.entries) if x != y)


@dataclass(frozen=True)
class FqMatrix:
    """A dense row-major matrix of residues over GF(q)."""

    field: FieldSpec
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if not self.rows:
            raise ValueError("matrix needs at least one row")
        width = len(self.rows[0])
        for row in self.rows:
            if len(row) != width:
                raise ValueError("ragged rows")
            for e in row:
                self.field.validate(e)

    @classmethod
    def from_rows(cls, field: FieldSpec, rows: Iterable[Iterable[int]]) -> FqMatrix:
        return cls(field, tuple(tuple(r) for r in rows))

    @classmethod
    def identity(cls, field: FieldSpec, n: int) -> FqMatrix:
        return cls(field, tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n)))

    @classmethod
    def zeros(cls, field: FieldSpec, nrows: int, ncols: int) -> FqMatrix:
        return cls(field, ((0,) * ncols,) * nrows)

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def ncols(self) -> int:
        return len(self.rows[0])

    def row(self, i: int) -> tuple[int, ...]:
        return self.rows[i]

    def col(self, j: int) -> tuple[int, ...]:
        return tuple(r[j] for r in self.rows)

    def transpose(self) -> FqMatrix:
        return FqMatrix(self.field, tuple(zip(*self.rows)))


def mat_vec_mul(m: FqMatrix, x: FqVector) -> FqVector:
    """M·x over GF(q); x is treated as a column vector of length m.ncols."""
    if x.field != m.field:
        raise ValueError("field mismatch between matrix and vector")
    if len(x) != m.ncols:
        raise ValueError(f"dimension mismatch: matrix has {m.ncols} columns, vector has {len(x)}")
    q = m.field.q
    xe = x.entries
    return FqVector(m.field, tuple(sum(a * b for a, b in zip(row, xe)) % q for row in m.rows))


def mat_mul(a: FqMatrix, b: FqMatrix) -> FqMatrix:
    if a.field != b.field:
        raise ValueError("field mismatch")
    if a.ncols != b.nrows:
        raise ValueError(f"dimension mismatch: {a.ncols} vs {b.nrows}")
    q = a.field.q
    bt = tuple(zip(*b.rows))
    return FqMatrix(
        a.field,
        tuple(tuple(sum(x * y for x, y in zip(row, col)) % q for col in bt) for row in a.rows),
    )


def rank(m: FqMatrix) -> int:
    """Rank over GF(q) by Gaussian elimination."""
    q = m.field.q
    rows = [list(r) for r in m.rows]
    nrows, ncols = m.nrows, m.ncols
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, nrows) if rows[i][c]), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        inv = pow(rows[r][c], q - 2, q)
        rows[r] = [(inv * e) % q for e in rows[r]]
        for i in range(nrows):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [(e - f * p) % q for e, p in zip(rows[i], rows[r])]
        r += 1
        if r == nrows:
            break
    return r


@dataclass(frozen=True)
class ColumnPermutation:
    """A column reordering: position j of the reordered matrix holds
    original column mapping[j]."""

    mapping: tuple[int, ...]

    def __post_init__(self):
        n = len(self.mapping)
        if sorted(self.mapping) != list(range(n)):
            raise ValueError("mapping must be a bijection on 0..n-1")

    @classmethod
    def identity(cls, n: int) -> ColumnPermutation:
        return cls(tuple(range(n)))

    @property
    def is_identity(self) -> bool:
        return all(i == m for i, m in enumerate(self.mapping))

    def apply(self, seq: Sequence[int]) -> tuple[int, ...]:
        """Reorder original coordinates into permuted positions."""
        if len(seq) != len(self.mapping):
            raise ValueError("length mismatch")
        return tuple(seq[m] for m in self.mapping)

    def unapply(self, seq: Sequence[int]) -> tuple[int, ...]:
        """Inverse of :meth:`apply`: send permuted positions back home."""
        if len(seq) != len(self.mapping):
            raise ValueError("length mismatch")
        out = [0] * len(seq)
        for j, m in enumerate(self.mapping):
            out[m] = seq[j]
        return tuple(out)


def to_systematic(g: FqMatrix) -> tuple[FqMatrix, FqMatrix, ColumnPermutation]:
    """Reduce a k-by-n full-rank generator matrix to systematic form.

    Returns (G_sys, H_sys, perm) with G_sys = [I_k | A], H_sys = [-A^T | I_{n-k}],
    so that G_sys · H_sys^T = 0 and G with its columns reordered by perm has
    the same row space as G_sys.

    Pivoting is deterministic: at diagonal position r the candidate column is
    scanned top to bottom for its first nonzero entry among rows r..k-1; a
    column with no pivot is swapped with the rearmost untried column and the
    position is retried.  Raises :class:`RankError` when fewer than k pivots
    exist.
    """
    field = g.field
    q = field.q
    k, n = g.nrows, g.ncols
    if k >= n:
        raise ValueError(f"generator must have fewer rows than columns, got {k}x{n}")
    rows = [list(r) for r in g.rows]
    order = list(range(n))
    back = n - 1
    r = 0
    while r < k:
        pivot = next((i for i in range(r, k) if rows[i][order[r]]), None)
        if pivot is None:
            if back <= r:
                raise RankError(r, k)
            order[r], order[back] = order[back], order[r]
            back -= 1
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        c = order[r]
        inv = pow(rows[r][c], q - 2, q)
        if inv != 1:
            rows[r] = [(inv * e) % q for e in rows[r]]
        for i in range(k):
            if i != r and rows[i][c]:
                f = rows[i][c]
                piv = rows[r]
                rows[i] = [(e - f * p) % q for e, p in zip(rows[i], piv)]
        r += 1
    g_sys = FqMatrix(field, tuple(tuple(row[c] for c in order) for row in rows))
    # A = right block of G_sys; H_sys = [-A^T | I]
    h_rows = []
    for rr in range(n - k):
        left = tuple((-g_sys.rows[i][k + rr]) % q for i in range(k))
        right = tuple(1 if j == rr else 0 for j in range(n - k))
        h_rows.append(left + right)
    h_sys = FqMatrix(field, tuple(h_rows))
    return g_sys, h_sys, ColumnPermutation(tuple(order))
