"""Decoders for systematic linear codes.

Two production decoders work entirely in the information set: patterns
e = <v|0> are streamed in weight order, the syndrome of each is a combination
of at most wt(v) parity-check columns, and a pattern is accepted when
wt(v) + wt(s_y - s_e) clears the relevant radius.  The accepted full-length
error is <v | s_y - s_e>, so returned words are always codewords.

Three brute-force oracle decoders certify them: a codeword sweep, a
full-length pattern sweep, and a precomputed coset-leader table.  The oracles
use plain residue arithmetic throughout and share no shortcuts with the
production decoders, so agreement between the two routes is meaningful.

All decoders expect inputs in systematic coordinates; the CLI translates
through the code's column permutation.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from itertools import product

from .codes import DEFAULT_GUARD, GuardError, LinearCode, ball_volume, coset_leader_table, gv_distance
from .fields import FqVector, hamming_distance
from .patterns import weight_ordered_patterns


class DecodeStatus(Enum):
    DECODED = "decoded"
    INCOMPLETE = "incomplete"


@dataclass(frozen=True)
class DecodeStats:
    """Work counters: error patterns scored and syndrome products taken."""

    patterns_inspected: int
    syndrome_products: int
    best_weight_trace: tuple[int, ...] | None = None


@dataclass(frozen=True)
class DecodeOutcome:
    status: DecodeStatus
    codeword: FqVector | None
    error: FqVector | None
    error_weight: int | None
    stats: DecodeStats

    @property
    def decoded(self) -> bool:
        return self.status is DecodeStatus.DECODED


def _check_received(code: LinearCode, y: FqVector) -> None:
    if y.field != code.field:
        raise ValueError("received-word field mismatch")
    if len(y) != code.n:
        raise ValueError(f"received word length {len(y)}, expected {code.n}")


def _decoded(code: LinearCode, y: FqVector, support, values, check_part, stats: DecodeStats) -> DecodeOutcome:
    entries = [0] * code.n
    for pos, val in zip(support, values):
        entries[pos] = val
    entries[code.k :] = check_part
    error = FqVector(code.field, tuple(entries))
    codeword = y - error
    return DecodeOutcome(DecodeStatus.DECODED, codeword, error, error.weight, stats)


@lru_cache(maxsize=128)
def _packed_info_columns(code: LinearCode) -> tuple[int, ...]:
    """GF(2) only: column j of H as an integer with bit r = H[r][j]."""
    m = code.n - code.k
    return tuple(
        sum(code.check.rows[r][j] << r for r in range(m)) for j in range(code.k)
    )


def _unpack_bits(x: int, m: int) -> tuple[int, ...]:
    return tuple((x >> r) & 1 for r in range(m))


def unique_decode(code: LinearCode, y: FqVector) -> DecodeOutcome:
    """Bounded-distance decoding within radius t = floor((d-1)/2).

    Scans information-set patterns in weight order and accepts the first v
    with wt(v) + wt(s_y - s_e) <= t; balls of radius t are disjoint, so at
    most one pattern can ever be accepted and early return is exact.  When
    no pattern is accepted the word lies in no ball and the outcome is
    Incomplete, after exactly V_q(k, t) inspections.
    """
    _check_received(code, y)
    if code.d is None:
        raise ValueError("unique decoding needs a known minimum distance; construct the code with d")
    t = (code.d - 1) // 2
    q = code.field.q
    k, m = code.k, code.n - code.k
    s_y = code.syndrome(y)
    inspected = 0
    products = 1  # the s_y product
    if q == 2:
        cols = _packed_info_columns(code)
        sy = sum(b << r for r, b in enumerate(s_y.entries))
        for support, values in weight_ordered_patterns(k, 2, min(t, k)):
            inspected += 1
            products += 1
            se = 0
            for j in support:
                se ^= cols[j]
            u = sy ^ se
            if len(support) + u.bit_count() <= t:
                stats = DecodeStats(inspected, products)
                return _decoded(code, y, support, values, _unpack_bits(u, m), stats)
    else:
        cols = tuple(code.check.col(j) for j in range(k))
        sy = s_y.entries
        for support, values in weight_ordered_patterns(k, q, min(t, k)):
            inspected += 1
            products += 1
            u = list(sy)
            for j, v in zip(support, values):
                col = cols[j]
                for r in range(m):
                    u[r] = (u[r] - v * col[r]) % q
            if len(support) + sum(1 for e in u if e) <= t:
                stats = DecodeStats(inspected, products)
                return _decoded(code, y, support, values, tuple(u), stats)
    return DecodeOutcome(DecodeStatus.INCOMPLETE, None, None, None, DecodeStats(inspected, products))


def md_decode(code: LinearCode, y: FqVector, radius: int | None = None) -> DecodeOutcome:
    """Minimum-distance decoding over information-set patterns.

    Scans every pattern v with wt(v) <= radius, scoring wt(v) + wt(s_y - s_e),
    and keeps the first strictly better candidate.  When radius is at least
    the covering radius of the code, the result is a nearest codeword and
    error_weight equals min_c d(y, c); ties go to the earliest pattern in
    enumeration order.  Defaults: radius = d when known, else the
    Gilbert-Varshamov distance.
    """
    _check_received(code, y)
    if radius is None:
        radius = code.d if code.d is not None else gv_distance(code.n, code.k, code.field.q)
    if radius < 0:
        raise ValueError("radius must be nonnegative")
    q = code.field.q
    k, m = code.k, code.n - code.k
    s_y = code.syndrome(y)
    inspected = 0
    products = 1
    trace: list[int] = []
    best_score = code.n + 1
    best: tuple | None = None
    if q == 2:
        cols = _packed_info_columns(code)
        sy = sum(b << r for r, b in enumerate(s_y.entries))
        for support, values in weight_ordered_patterns(k, 2, min(radius, k)):
            inspected += 1
            products += 1
            se = 0
            for j in support:
                se ^= cols[j]
            u = sy ^ se
            score = len(support) + u.bit_count()
            if score < best_score:
                best_score = score
                best = (support, values, _unpack_bits(u, m))
                trace.append(score)
    else:
        cols = tuple(code.check.col(j) for j in range(k))
        sy = s_y.entries
        for support, values in weight_ordered_patterns(k, q, min(radius, k)):
            inspected += 1
            products += 1
            u = list(sy)
            for j, v in zip(support, values):
                col = cols[j]
                for r in range(m):
                    u[r] = (u[r] - v * col[r]) % q
            score = len(support) + sum(1 for e in u if e)
            if score < best_score:
                best_score = score
                best = (support, values, tuple(u))
                trace.append(score)
    assert best is not None  # the zero pattern always scores wt(s_y) <= n
    stats = DecodeStats(inspected, products, tuple(trace))
    return _decoded(code, y, best[0], best[1], best[2], stats)


def oracle_nearest_codeword(code: LinearCode, y: FqVector, guard: int = DEFAULT_GUARD) -> DecodeOutcome:
    """Sweep all q^k codewords for one at minimum distance from y.

    Ties break toward the lexicographically smallest message.
    """
    _check_received(code, y)
    size = code.field.q ** code.k
    if size > guard:
        raise GuardError("codeword sweep", size, guard)
    field = code.field
    ye = y.entries
    best_entries = None
    best_dist = code.n + 1
    count = 0
    for msg in product(range(field.q), repeat=code.k):
        count += 1
        c = code.encode(FqVector(field, msg)).entries
        dist = sum(1 for a, b in zip(ye, c) if a != b)
        if dist < best_dist:
            best_dist = dist
            best_entries = c
    codeword = FqVector(field, best_entries)
    error = y - codeword
    return DecodeOutcome(DecodeStatus.DECODED, codeword, error, best_dist, DecodeStats(count, 0))


def oracle_ball_decode(code: LinearCode, y: FqVector, guard: int = DEFAULT_GUARD) -> DecodeOutcome:
    """Sweep all V_q(n, t) full-length patterns for e with y - e a codeword."""
    _check_received(code, y)
    if code.d is None:
        raise ValueError("ball decoding needs a known minimum distance")
    t = (code.d - 1) // 2
    size = ball_volume(code.n, min(t, code.n), code.field.q)
    if size > guard:
        raise GuardError("full-length pattern sweep", size, guard)
    q = code.field.q
    n, m = code.n, code.n - code.k
    cols = tuple(code.check.col(j) for j in range(n))
    sy = code.syndrome(y).entries
    count = 0
    for support, values in weight_ordered_patterns(n, q, min(t, n)):
        count += 1
        se = [0] * m
        for j, v in zip(support, values):
            col = cols[j]
            for r in range(m):
                se[r] = (se[r] + v * col[r]) % q
        if tuple(se) == sy:
            entries = [0] * n
            for pos, val in zip(support, values):
                entries[pos] = val
            error = FqVector(code.field, tuple(entries))
            codeword = y - error
            stats = DecodeStats(count, count + 1)
            return DecodeOutcome(DecodeStatus.DECODED, codeword, error, error.weight, stats)
    return DecodeOutcome(DecodeStatus.INCOMPLETE, None, None, None, DecodeStats(count, count + 1))


def oracle_coset_table_decode(code: LinearCode, y: FqVector, guard: int = DEFAULT_GUARD) -> DecodeOutcome:
    """Subtract the minimum-weight coset leader of s_y, from a full table."""
    _check_received(code, y)
    table = coset_leader_table(code, guard)
    leader = table[code.syndrome(y).entries]
    error = FqVector(code.field, leader)
    codeword = y - error
    return DecodeOutcome(DecodeStatus.DECODED, codeword, error, error.weight, DecodeStats(1, 1))


def assert_outcome_consistent(code: LinearCode, y: FqVector, outcome: DecodeOutcome) -> None:
    """Structural sanity: codeword + error = y, zero syndrome, weight match."""
    if not outcome.decoded:
        return
    if (outcome.codeword + outcome.error).entries != y.entries:
        raise AssertionError("codeword + error != received word")
    if code.syndrome(outcome.codeword).weight != 0:
        raise AssertionError("decoded word is not a codeword")
    if outcome.error_weight != outcome.error.weight:
        raise AssertionError("error weight mismatch")
    if hamming_distance(y, outcome.codeword) != outcome.error_weight:
        raise AssertionError("distance does not match error weight")
