"""The [n, k, d] linear code model and its combinatorial bounds.

A :class:`LinearCode` always lives in systematic coordinates: the generator
is [I_k | A], the parity check is [-A^T | I_{n-k}], and a column permutation
remembers how to translate to the coordinates the code was loaded in.

Minimum distance and covering radius are brute-force searches behind explicit
guards; they exist to certify the decoders at desk scale, not to scale.  Ball
volumes and codeword counts are exact arbitrary-precision integers.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from itertools import product

from .fields import ColumnPermutation, FieldSpec, FqMatrix, FqVector, mat_vec_mul, to_systematic

DEFAULT_GUARD = 1 << 24


class GuardError(ValueError):
    """Raised when a brute-force search would exceed its enumeration guard."""

    def __init__(self, what: str, size: int, guard: int):
        self.size = size
        self.guard = guard
        super().__init__(f"{what} needs {size} steps, above the guard of {guard}; too large to brute-force")


@dataclass(frozen=True)
class LinearCode:
    """A systematic [n, k] linear code over GF(q), with optional known d."""

    field: FieldSpec
    n: int
    k: int
    gen: FqMatrix  # [I_k | A], systematic coordinates
    check: FqMatrix  # [-A^T | I_{n-k}]
    perm: ColumnPermutation  # systematic position -> original column
    d: int | None = None

    def __post_init__(self):
        n, k = self.n, self.k
        if not 1 <= k < n:
            raise ValueError(f"need 1 <= k < n, got k={k}, n={n}")
        if self.gen.nrows != k or self.gen.ncols != n:
            raise ValueError("generator shape mismatch")
        if self.check.nrows != n - k or self.check.ncols != n:
            raise ValueError("parity-check shape mismatch")
        if len(self.perm.mapping) != n:
            raise ValueError("permutation length mismatch")
        if self.d is not None and self.d < 1:
            raise ValueError("minimum distance must be positive")
        neg = self.field.neg
        for i in range(k):
            for j in range(k):
                if self.gen.rows[i][j] != (1 if i == j else 0):
                    raise ValueError("generator is not in systematic form [I_k | A]")
        for r in range(n - k):
            for j in range(n - k):
                if self.check.rows[r][k + j] != (1 if r == j else 0):
                    raise ValueError("parity check is not in systematic form [-A^T | I]")
            for i in range(k):
                if self.check.rows[r][i] != neg(self.gen.rows[i][k + r]):
                    raise ValueError("parity check does not match the generator")

    @classmethod
    def from_generator(cls, q: int, rows, d: int | None = None) -> LinearCode:
        """Build a code from an arbitrary full-rank generator matrix."""
        field = FieldSpec(q)
        g = FqMatrix.from_rows(field, rows)
        g_sys, h_sys, perm = to_systematic(g)
        return cls(field, g.ncols, g.nrows, g_sys, h_sys, perm, d)

    @property
    def rate(self) -> float:
        return self.k / self.n

    @property
    def delta(self) -> float | None:
        return None if self.d is None else self.d / self.n

    @property
    def t(self) -> int | None:
        """Unique-decoding radius floor((d-1)/2), when d is known."""
        return None if self.d is None else (self.d - 1) // 2

    def with_distance(self, d: int) -> LinearCode:
        return LinearCode(self.field, self.n, self.k, self.gen, self.check, self.perm, d)

    def encode(self, x: FqVector) -> FqVector:
        """Systematic encoding: x of length k maps to <x | x·A>."""
        if x.field != self.field:
            raise ValueError("message field mismatch")
        if len(x) != self.k:
            raise ValueError(f"message length {len(x)}, expected {self.k}")
        q = self.field.q
        parity = tuple(
            sum(x.entries[i] * self.gen.rows[i][self.k + r] for i in range(self.k)) % q
            for r in range(self.n - self.k)
        )
        return FqVector(self.field, x.entries + parity)

    def syndrome(self, y: FqVector) -> FqVector:
        """H·y^T; zero exactly when y is a codeword."""
        if y.field != self.field:
            raise ValueError("received-word field mismatch")
        if len(y) != self.n:
            raise ValueError(f"received word length {len(y)}, expected {self.n}")
        return mat_vec_mul(self.check, y)

    def to_systematic_coords(self, y: FqVector) -> FqVector:
        return FqVector(self.field, self.perm.apply(y.entries))

    def to_original_coords(self, y: FqVector) -> FqVector:
        return FqVector(self.field, self.perm.unapply(y.entries))


def all_messages(code: LinearCode):
    """All q^k messages in lexicographic order, as entry tuples."""
    return product(code.field.elements(), repeat=code.k)


@lru_cache(maxsize=128)
def _codeword_entries(code: LinearCode) -> tuple[tuple[int, ...], ...]:
    field = code.field
    return tuple(code.encode(FqVector(field, m)).entries for m in all_messages(code))


def all_codewords(code: LinearCode, guard: int = DEFAULT_GUARD) -> tuple[FqVector, ...]:
    """Every codeword, ordered by lexicographic message; guarded by q^k."""
    size = code.field.q ** code.k
    if size > guard:
        raise GuardError("codeword sweep", size, guard)
    return tuple(FqVector(code.field, e) for e in _codeword_entries(code))


@lru_cache(maxsize=128)
def _min_distance(code: LinearCode) -> int:
    q = code.field.q
    k, n = code.k, code.n
    a_rows = tuple(code.gen.rows[i][k:] for i in range(k))
    best = n + 1
    for msg in product(range(q), repeat=k):
        if not any(msg):
            continue
        w = sum(1 for e in msg if e)
        if w >= best:
            continue
        for r in range(n - k):
            if sum(msg[i] * a_rows[i][r] for i in range(k)) % q:
                w += 1
                if w >= best:
                    break
        if w < best:
            best = w
    return best


def min_distance(code: LinearCode, guard: int = DEFAULT_GUARD) -> int:
    """Minimum Hamming weight over all q^k - 1 nonzero codewords."""
    size = code.field.q ** code.k
    if size > guard:
        raise GuardError("minimum-distance search", size, guard)
    return _min_distance(code)


@lru_cache(maxsize=128)
def _coset_layers(code: LinearCode) -> tuple[int, dict[tuple[int, ...], tuple[int, ...]]]:
    """Coset-leader table by layered expansion.

    The syndromes reachable at leader weight w are the weight-(w-1) set plus
    one scaled parity-check column; the first layer that reaches a syndrome
    fixes its minimum-weight leader.  Returns (covering radius, table).
    """
    q = code.field.q
    n, k = code.n, code.k
    total = q ** (n - k)
    cols = tuple(code.check.col(j) for j in range(n))
    zero_s = (0,) * (n - k)
    table: dict[tuple[int, ...], tuple[int, ...]] = {zero_s: (0,) * n}
    frontier = [zero_s]
    radius = 0
    while len(table) < total:
        radius += 1
        new_frontier = []
        for s in frontier:
            leader = table[s]
            for j in range(n):
                if leader[j]:
                    continue  # positions are added in increasing-weight layers
                col = cols[j]
                for c in range(1, q):
                    s2 = tuple((a + c * b) % q for a, b in zip(s, col))
                    if s2 not in table:
                        lead2 = leader[:j] + (c,) + leader[j + 1 :]
                        table[s2] = lead2
                        new_frontier.append(s2)
        frontier = new_frontier
    return radius, table


def covering_radius(code: LinearCode, guard: int = DEFAULT_GUARD) -> int:
    """Largest coset-leader weight, by brute force over all q^(n-k) cosets."""
    size = code.field.q ** (code.n - code.k)
    if size > guard:
        raise GuardError("covering-radius search", size, guard)
    return _coset_layers(code)[0]


def coset_leader_table(code: LinearCode, guard: int = DEFAULT_GUARD) -> dict[tuple[int, ...], tuple[int, ...]]:
    """syndrome -> minimum-weight coset leader, over full-length patterns."""
    size = code.field.q ** (code.n - code.k)
    if size > guard:
        raise GuardError("coset-leader table", size, guard)
    return _coset_layers(code)[1]


def ball_volume(n: int, t: int, q: int) -> int:
    """V_q(n, t) = sum_{i<=t} C(n,i)(q-1)^i, exact."""
    if t < 0 or t > n:
        raise ValueError(f"radius {t} outside 0..{n}")
    return sum(math.comb(n, i) * (q - 1) ** i for i in range(t + 1))


def entropy_q(x: float, q: int) -> float:
    """q-ary entropy H_q(x) on [0, 1], with the 0·log 0 = 0 convention."""
    if not 0 <= x <= 1:
        raise ValueError(f"entropy argument {x} outside [0, 1]")
    logq = math.log(q)
    h = 0.0
    if x > 0:
        h += x * math.log(q - 1) / logq - x * math.log(x) / logq
    if x < 1:
        h -= (1 - x) * math.log(1 - x) / logq
    return h


def gv_distance(n: int, k: int, q: int) -> int:
    """Largest d with V_q(n, d-1) <= q^(n-k)."""
    if not 1 <= k < n:
        raise ValueError(f"need 1 <= k < n, got k={k}, n={n}")
    cosets = q ** (n - k)
    volume = 1
    d = 1
    while d <= n:
        volume += math.comb(n, d) * (q - 1) ** d  # V_q(n, d) from V_q(n, d-1)
        if volume > cosets:
            return d
        d += 1
    return n


@dataclass(frozen=True)
class BoundsReport:
    """Work counts and exponents for decoding a code of distance d.

    The entropy exponents k·H_q(d/2k) and k·H_q(d/k) are None whenever the
    entropy argument exceeds 1, which happens for short low-rate codes.
    """

    t: int
    ball_info_set: int
    ball_full: int
    codeword_count: int
    exponent_unique: float | None
    exponent_md: float | None
    gv_distance: int


def bounds_report(code: LinearCode, d: int) -> BoundsReport:
    if d < 1:
        raise ValueError("distance must be positive")
    q = code.field.q
    n, k = code.n, code.k
    t = (d - 1) // 2
    x_unique = d / (2 * k)
    x_md = d / k
    return BoundsReport(
        t=t,
        ball_info_set=ball_volume(k, min(t, k), q),
        ball_full=ball_volume(n, t, q),
        codeword_count=q**k,
        exponent_unique=k * entropy_q(x_unique, q) if x_unique <= 1 else None,
        exponent_md=k * entropy_q(x_md, q) if x_md <= 1 else None,
        gv_distance=gv_distance(n, k, q),
    )
