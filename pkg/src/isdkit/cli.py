"""Command-line surface: gen, info, decode, verify, bench.

Exit codes: 0 success (and Decoded), 2 Incomplete from the decode command,
1 usage, parse or guard errors, 3 oracle mismatch from verify.  Every
command that consumes randomness takes --seed and echoes it; machine
output is one JSON object (or CSV for bench) on stdout.

Received words on the command line and all reported vectors are in the
code file's own column order; the permutation to systematic coordinates
is applied internally.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import random
import sys
import time
from functools import partial

from .channel import ChannelSpec, compare_md, compare_unique, run_trials, verify_trials
from .codefile import CodeFileData, ParseError, format_code_file, load_code_file
from .codes import (
    DEFAULT_GUARD,
    GuardError,
    LinearCode,
    ball_volume,
    bounds_report,
    covering_radius,
    gv_distance,
    min_distance,
)
from .decoders import md_decode, oracle_ball_decode, oracle_nearest_codeword, unique_decode
from .fields import FieldSpec, FqVector, RankError

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_INCOMPLETE = 2
EXIT_MISMATCH = 3

NOT_COMPUTED = "not computed (guard)"


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # argparse defaults to exit code 2
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _emit(args, payload: dict) -> None:
    if args.json:
        print(json.dumps(payload))
    else:
        for key, value in payload.items():
            if isinstance(value, (list, tuple)):
                value = " ".join(str(v) for v in value)
            print(f"{key}: {value}")


def _load(path: str) -> tuple[CodeFileData, LinearCode]:
    data = load_code_file(path)
    return data, data.to_code()


def _parse_vector(code: LinearCode, text: str) -> FqVector:
    try:
        entries = tuple(int(tok) for tok in text.split())
    except ValueError:
        raise ValueError("received word must be space-separated integers") from None
    if len(entries) != code.n:
        raise ValueError(f"received word has {len(entries)} symbols, expected n = {code.n}")
    for e in entries:
        if not 0 <= e < code.field.q:
            raise ValueError(f"symbol {e} outside GF({code.field.q})")
    return FqVector(code.field, entries)


def _ensure_distance(code: LinearCode, guard: int) -> LinearCode:
    """Use the file's d when present, otherwise brute-force it."""
    if code.d is not None:
        return code
    return code.with_distance(min_distance(code, guard))


def cmd_gen(args) -> int:
    FieldSpec(args.q)
    if not 1 <= args.k < args.n:
        raise ValueError(f"need 1 <= k < n, got k={args.k}, n={args.n}")
    rng = random.Random(args.seed)
    rows = tuple(
        tuple(1 if j == i else 0 for j in range(args.k))
        + tuple(rng.randrange(args.q) for _ in range(args.n - args.k))
        for i in range(args.k)
    )
    data = CodeFileData(args.q, args.n, args.k, None, rows)
    text = format_code_file(data, comments=(f"seed {args.seed}",))
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_info(args) -> int:
    _, code = _load(args.file)
    payload: dict = {
        "n": code.n,
        "k": code.k,
        "q": code.field.q,
        "rate": code.rate,
    }
    try:
        code = _ensure_distance(code, args.guard)
    except GuardError:
        pass
    if code.d is None:
        payload["d"] = None if args.json else NOT_COMPUTED
        if args.json:
            payload["d_note"] = NOT_COMPUTED
    else:
        payload["d"] = code.d
        payload["t"] = code.t
    try:
        payload["covering_radius"] = covering_radius(code, args.guard)
    except GuardError:
        payload["covering_radius"] = None if args.json else NOT_COMPUTED
        if args.json:
            payload["covering_radius_note"] = NOT_COMPUTED
    payload["gv_distance"] = gv_distance(code.n, code.k, code.field.q)
    if code.d is not None:
        report = bounds_report(code, code.d)
        payload["ball_info_set"] = report.ball_info_set
        payload["ball_full"] = report.ball_full
        payload["codeword_count"] = report.codeword_count
        payload["exponent_unique"] = report.exponent_unique
        payload["exponent_md"] = report.exponent_md
    _emit(args, payload)
    return EXIT_OK


def cmd_decode(args) -> int:
    _, code = _load(args.file)
    y_file = _parse_vector(code, args.received)
    y = code.to_systematic_coords(y_file)
    if args.mode == "unique":
        code = _ensure_distance(code, args.guard)
        outcome = unique_decode(code, y)
        radius = code.t
    else:
        radius = args.radius
        outcome = md_decode(code, y, radius)
        if radius is None:
            radius = code.d if code.d is not None else gv_distance(code.n, code.k, code.field.q)
    payload: dict = {
        "mode": args.mode,
        "radius": radius,
        "status": outcome.status.value,
    }
    if outcome.decoded:
        payload["codeword"] = list(code.to_original_coords(outcome.codeword).entries)
        payload["error"] = list(code.to_original_coords(outcome.error).entries)
        payload["error_weight"] = outcome.error_weight
    payload["patterns_inspected"] = outcome.stats.patterns_inspected
    payload["syndrome_products"] = outcome.stats.syndrome_products
    _emit(args, payload)
    return EXIT_OK if outcome.decoded else EXIT_INCOMPLETE


def cmd_verify(args) -> int:
    _, code = _load(args.file)
    spec = _channel_spec(args, code)
    if args.mode == "unique":
        code = _ensure_distance(code, args.guard)
        oracle_guard_probe(oracle_ball_decode, code, args.guard)
        decoder = unique_decode
        oracle = partial(oracle_ball_decode, guard=args.guard)
        compare = compare_unique
        radius = code.t
    else:
        radius = args.radius if args.radius is not None else covering_radius(code, args.guard)
        decoder = partial(md_decode, radius=radius)
        oracle = partial(oracle_nearest_codeword, guard=args.guard)
        compare = compare_md
    report, mismatches = verify_trials(code, decoder, oracle, compare, spec, args.trials)
    payload = report.as_dict()
    payload["mode"] = args.mode
    payload["radius"] = radius
    payload["mismatches"] = len(mismatches)
    _emit(args, payload)
    for miss in mismatches:
        print(
            f"mismatch: seed={spec.seed} trial={miss.trial} "
            f"received={' '.join(str(e) for e in miss.received)} ({miss.detail})",
            file=sys.stderr,
        )
    return EXIT_MISMATCH if mismatches else EXIT_OK


def oracle_guard_probe(oracle, code: LinearCode, guard: int) -> None:
    """Fail fast, before any trials, when the oracle would trip its guard."""
    zero = FqVector.zero(code.field, code.n)
    oracle(code, zero, guard=guard)


def _channel_spec(args, code: LinearCode) -> ChannelSpec:
    if (args.weight is None) == (args.prob is None):
        raise ValueError("set exactly one of --weight and --prob")
    if args.weight is not None and args.weight > code.n:
        raise ValueError(f"--weight {args.weight} exceeds n = {code.n}")
    return ChannelSpec(code.field.q, args.seed, weight=args.weight, error_prob=args.prob)


def cmd_bench(args) -> int:
    _, code = _load(args.file)
    code = _ensure_distance(code, args.guard)
    t = code.t
    q = code.field.q
    try:
        weights = [int(tok) for tok in args.weights.split()]
    except ValueError:
        raise ValueError("--weights must be space-separated integers") from None
    rows = []
    for w in weights:
        if not 0 <= w <= code.n:
            raise ValueError(f"weight {w} outside 0..{code.n}")
        spec = ChannelSpec(q, args.seed, weight=w)
        start = time.perf_counter()
        report = run_trials(code, unique_decode, spec, args.trials)
        elapsed = time.perf_counter() - start
        rows.append(
            {
                "weight": w,
                "trials": args.trials,
                "mean_patterns_inspected": report.mean_patterns_inspected,
                "max_patterns_inspected": report.max_patterns_inspected,
                "pattern_bound": ball_volume(code.k, min(t, code.k), q),
                "full_pattern_baseline": ball_volume(code.n, t, q),
                "codeword_sweep": q**code.k,
                "mean_decode_seconds": elapsed / args.trials,
            }
        )
    if args.json:
        print(json.dumps({"seed": args.seed, "rows": rows}))
    else:
        out = io.StringIO()
        writer = csv.DictWriter(out, fieldnames=list(rows[0].keys()))
        writer.writeheader()
        writer.writerows(rows)
        sys.stdout.write(out.getvalue())
    return EXIT_OK


def build_parser() -> _Parser:
    parser = _Parser(prog="isdkit", description="information-set decoding toolkit for linear block codes")
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("gen", help="generate a random systematic code file")
    gen.add_argument("--q", type=int, required=True)
    gen.add_argument("--n", type=int, required=True)
    gen.add_argument("--k", type=int, required=True)
    gen.add_argument("--seed", type=int, default=0)
    gen.add_argument("--out", help="write to a file instead of stdout")
    gen.set_defaults(func=cmd_gen, json=False)

    info = sub.add_parser("info", help="parameters, distances and work bounds of a code file")
    info.add_argument("file")
    info.add_argument("--guard", type=int, default=DEFAULT_GUARD)
    info.add_argument("--json", action="store_true")
    info.set_defaults(func=cmd_info)

    dec = sub.add_parser("decode", help="decode a received word")
    dec.add_argument("file")
    dec.add_argument("--received", required=True, help="space-separated residues, quoted")
    dec.add_argument("--mode", choices=("unique", "md"), default="unique")
    dec.add_argument("--radius", type=int, default=None, help="md search radius (default: d, else GV distance)")
    dec.add_argument("--guard", type=int, default=DEFAULT_GUARD)
    dec.add_argument("--json", action="store_true")
    dec.set_defaults(func=cmd_decode)

    ver = sub.add_parser("verify", help="random trials cross-checked against an oracle decoder")
    ver.add_argument("file")
    ver.add_argument("--mode", choices=("unique", "md"), default="unique")
    ver.add_argument("--trials", type=int, required=True)
    ver.add_argument("--seed", type=int, default=0)
    ver.add_argument("--weight", type=int, default=None)
    ver.add_argument("--prob", type=float, default=None)
    ver.add_argument("--radius", type=int, default=None, help="md radius (default: covering radius)")
    ver.add_argument("--guard", type=int, default=DEFAULT_GUARD)
    ver.add_argument("--json", action="store_true")
    ver.set_defaults(func=cmd_verify)

    ben = sub.add_parser("bench", help="pattern counts and baselines per error weight, as CSV")
    ben.add_argument("file")
    ben.add_argument("--weights", required=True, help="space-separated weights, quoted")
    ben.add_argument("--trials", type=int, default=100)
    ben.add_argument("--seed", type=int, default=0)
    ben.add_argument("--guard", type=int, default=DEFAULT_GUARD)
    ben.add_argument("--json", action="store_true")
    ben.set_defaults(func=cmd_bench)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"isdkit: parse error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except GuardError as exc:
        print(f"isdkit: {exc}; try smaller parameters", file=sys.stderr)
        return EXIT_USAGE
    except (RankError, ValueError, OSError) as exc:
        print(f"isdkit: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
