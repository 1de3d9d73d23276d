"""Seedable q-ary symmetric channel and the trial/verification runners.

Randomness comes from Python's ``random.Random`` (the Mersenne Twister
MT19937, a published, fully specified generator), so reports are
reproducible: the same seed and spec give byte-identical results.  Each
trial derives its own stream from the string ``"{seed}:{trial}"``, which
keeps trials independent of one another and lets any single trial be
replayed in isolation.  Within a trial the error pattern is drawn before
the message.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Callable, Sequence

from .codes import LinearCode
from .decoders import DecodeOutcome, DecodeStatus
from .fields import FieldSpec, FqVector

Decoder = Callable[[LinearCode, FqVector], DecodeOutcome]

FIXED_WEIGHT = "fixed_weight"
SYMMETRIC = "symmetric"


@dataclass(frozen=True)
class ChannelSpec:
    """Either a fixed-weight corrupter (exactly ``weight`` wrong symbols) or
    a q-ary symmetric channel (each symbol independently wrong with
    probability ``error_prob``); wrong symbols are uniform over the q-1
    other residues."""

    q: int
    seed: int
    weight: int | None = None
    error_prob: float | None = None

    def __post_init__(self):
        if (self.weight is None) == (self.error_prob is None):
            raise ValueError("set exactly one of weight and error_prob")
        if self.weight is not None and self.weight < 0:
            raise ValueError("weight must be nonnegative")
        if self.error_prob is not None and not 0 <= self.error_prob <= 1:
            raise ValueError("error probability must lie in [0, 1]")

    @property
    def mode(self) -> str:
        return FIXED_WEIGHT if self.weight is not None else SYMMETRIC


def trial_rng(seed: int, trial: int) -> random.Random:
    return random.Random(f"{seed}:{trial}")


def _nonzero(rng: random.Random, q: int) -> int:
    return 1 if q == 2 else rng.randrange(1, q)


def _draw_error(spec: ChannelSpec, n: int, rng: random.Random) -> FqVector:
    field = FieldSpec(spec.q)
    entries = [0] * n
    if spec.weight is not None:
        if spec.weight > n:
            raise ValueError(f"weight {spec.weight} exceeds block length {n}")
        for pos in rng.sample(range(n), spec.weight):
            entries[pos] = _nonzero(rng, spec.q)
    else:
        for pos in range(n):
            if rng.random() < spec.error_prob:
                entries[pos] = _nonzero(rng, spec.q)
    return FqVector(field, tuple(entries))


def sample_error(spec: ChannelSpec, n: int, trial: int = 0) -> FqVector:
    """The error pattern used in the given trial of this spec's stream."""
    return _draw_error(spec, n, trial_rng(spec.seed, trial))


def _draw_message(code: LinearCode, rng: random.Random) -> FqVector:
    q = code.field.q
    return FqVector(code.field, tuple(rng.randrange(q) for _ in range(code.k)))


def trial_stream(code: LinearCode, spec: ChannelSpec, trials: int):
    """Yield (trial, transmitted codeword, received word) deterministically."""
    for i in range(trials):
        rng = trial_rng(spec.seed, i)
        error = _draw_error(spec, code.n, rng)
        message = _draw_message(code, rng)
        codeword = code.encode(message)
        yield i, codeword, codeword + error


@dataclass(frozen=True)
class TrialReport:
    trials: int
    decoded_correct: int
    decoded_wrong: int
    incomplete: int
    mean_patterns_inspected: float
    max_patterns_inspected: int
    seed: int

    def as_dict(self) -> dict:
        return {
            "trials": self.trials,
            "decoded_correct": self.decoded_correct,
            "decoded_wrong": self.decoded_wrong,
            "incomplete": self.incomplete,
            "mean_patterns_inspected": self.mean_patterns_inspected,
            "max_patterns_inspected": self.max_patterns_inspected,
            "seed": self.seed,
        }


def run_trials(code: LinearCode, decoder: Decoder, spec: ChannelSpec, trials: int) -> TrialReport:
    """Encode, corrupt and decode fresh random words, tallying outcomes."""
    if trials < 1:
        raise ValueError("need at least one trial")
    correct = wrong = incomplete = 0
    total_patterns = 0
    max_patterns = 0
    for _, codeword, received in trial_stream(code, spec, trials):
        outcome = decoder(code, received)
        total_patterns += outcome.stats.patterns_inspected
        max_patterns = max(max_patterns, outcome.stats.patterns_inspected)
        if outcome.status is DecodeStatus.INCOMPLETE:
            incomplete += 1
        elif outcome.codeword == codeword:
            correct += 1
        else:
            wrong += 1
    return TrialReport(trials, correct, wrong, incomplete, total_patterns / trials, max_patterns, spec.seed)


@dataclass(frozen=True)
class Mismatch:
    """One trial where the decoder and its oracle disagreed."""

    trial: int
    received: tuple[int, ...]
    detail: str


def verify_trials(
    code: LinearCode,
    decoder: Decoder,
    oracle: Decoder,
    compare: Callable[[DecodeOutcome, DecodeOutcome, FqVector], str | None],
    spec: ChannelSpec,
    trials: int,
) -> tuple[TrialReport, tuple[Mismatch, ...]]:
    """run_trials plus a per-trial oracle cross-check.

    ``compare(outcome, oracle_outcome, received)`` returns None on agreement
    or a human-readable discrepancy.
    """
    if trials < 1:
        raise ValueError("need at least one trial")
    correct = wrong = incomplete = 0
    total_patterns = 0
    max_patterns = 0
    mismatches: list[Mismatch] = []
    for i, codeword, received in trial_stream(code, spec, trials):
        outcome = decoder(code, received)
        total_patterns += outcome.stats.patterns_inspected
        max_patterns = max(max_patterns, outcome.stats.patterns_inspected)
        if outcome.status is DecodeStatus.INCOMPLETE:
            incomplete += 1
        elif outcome.codeword == codeword:
            correct += 1
        else:
            wrong += 1
        detail = compare(outcome, oracle(code, received), received)
        if detail is not None:
            mismatches.append(Mismatch(i, received.entries, detail))
    report = TrialReport(trials, correct, wrong, incomplete, total_patterns / trials, max_patterns, spec.seed)
    return report, tuple(mismatches)


def compare_unique(outcome: DecodeOutcome, oracle: DecodeOutcome, received: FqVector) -> str | None:
    """Unique decoding must match the ball sweep on status and codeword."""
    if outcome.status is not oracle.status:
        return f"status {outcome.status.value} vs oracle {oracle.status.value}"
    if outcome.decoded and outcome.codeword != oracle.codeword:
        return "decoded to a different codeword than the oracle"
    return None


def compare_md(outcome: DecodeOutcome, oracle: DecodeOutcome, received: FqVector) -> str | None:
    """MD decoding must achieve the oracle's minimum distance exactly."""
    if not outcome.decoded:
        return "minimum-distance decoder returned incomplete"
    if outcome.error_weight != oracle.error_weight:
        return f"error weight {outcome.error_weight} vs oracle minimum {oracle.error_weight}"
    dist = sum(1 for a, b in zip(outcome.codeword.entries, received.entries) if a != b)
    if dist != oracle.error_weight:
        return f"returned codeword at distance {dist}, oracle minimum {oracle.error_weight}"
    return None
