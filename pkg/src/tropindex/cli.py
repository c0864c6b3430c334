"""Command-line front end: ``tropindex <command> ...``.

Exit codes: 0 success, 1 negative verdict (not log-concave, no counterexample,
not an index, failed verification), 2 unparseable or invalid input,
3 zero polynomial, 4 zero coefficient where none is allowed, 5 the fast SIRR
test and the brute-force oracle disagree.
"""

from __future__ import annotations

import argparse
import csv
import io
import os
import sys

from . import indices, preservers, serialize
from .errors import (
    IsLogConcave,
    NotAnIndex,
    ParseError,
    TropIndexError,
    ZeroCoefficient,
    ZeroPolynomial,
)
from .indices import Witness
from .poly import GammaSequence, Polynomial, apply_diagonal
from .verify import CLAIM_NAMES, DEFAULT_MAX_DEGREE, DEFAULT_SEED, DEFAULT_TRIALS, RunConfig, run_verify

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_PARSE = 2
EXIT_ZERO_POLY = 3
EXIT_ZERO_COEFF = 4
EXIT_ORACLE = 5

SEED_ENV = "TROPINDEX_SEED"


class Failure(Exception):
    """Stop with a message and exit code."""

    def __init__(self, code: int, message: str):
        super().__init__(message)
        self.code = code


# -- input ---------------------------------------------------------------


def read_polynomial(args) -> Polynomial:
    if args.coeffs is not None and args.input is not None:
        raise ParseError("give either --coeffs or --input, not both")
    if args.coeffs is not None:
        return Polynomial(serialize.parse_csv(args.coeffs))
    if args.input is not None:
        return serialize.polynomial_from_json(serialize.load_file(args.input))
    raise ParseError("a polynomial is required (--coeffs CSV or --input FILE)")


def read_gamma(args, *, allow_file: bool = False) -> GammaSequence:
    if args.gamma is not None:
        return GammaSequence(serialize.parse_csv(args.gamma))
    if allow_file and args.input is not None:
        return serialize.gamma_from_json(serialize.load_file(args.input))
    raise ParseError("a sequence is required (--gamma CSV)")


def resolve_seed(value: int | None) -> int:
    if value is not None:
        return value
    env = os.environ.get(SEED_ENV)
    if env is None or not env.strip():
        return DEFAULT_SEED
    try:
        return int(env)
    except ValueError as exc:
        raise ParseError(f"{SEED_ENV}={env!r} is not an integer") from exc


# -- output --------------------------------------------------------------


def _mark(flag: bool) -> str:
    return "✓" if flag else "✗"


def witness_text(w: Witness | None) -> str:
    if w is None:
        return "-"
    if w.is_point:
        return f"z = {w.point}"
    return f"root of {w.certificate} in [{w.interval.lo}, {w.interval.hi}]"


def _csv(rows) -> str:
    buf = io.StringIO()
    csv.writer(buf, lineterminator="\n").writerows(rows)
    return buf.getvalue()


def _table(header: list[str], rows: list[list[str]]) -> str:
    widths = [max(len(r[i]) for r in [header, *rows]) for i in range(len(header))]
    lines = ["  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip() for r in [header, *rows]]
    return "\n".join(lines) + "\n"


def emit(fmt: str, payload, *, csv_rows=None, human: str | None = None) -> None:
    if fmt == "json":
        sys.stdout.write(serialize.dumps(payload))
    elif fmt == "csv":
        sys.stdout.write(_csv(csv_rows))
    else:
        sys.stdout.write(human if human.endswith("\n") else human + "\n")


def _witness_csv(w: Witness | None) -> str:
    return "" if w is None else witness_text(w)


# -- commands ------------------------------------------------------------


def cmd_indices(args) -> int:
    f = read_polynomial(args)
    report = indices.index_report(f, require_positive_witness=args.require_positive_witness)
    rows = [
        [str(e.m), _mark(e.tropical), _mark(e.central), witness_text(e.tropical_witness), witness_text(e.central_witness)]
        for e in report.per_index
    ]
    human = f"f = {f}\n" + _table(["m", "tropical", "central", "tropical witness", "central witness"], rows)
    for note in report.warnings:
        human += f"note: {note}\n"
    emit(
        args.format,
        serialize.report_to_json(report),
        csv_rows=[["m", "tropical", "central", "tropical_witness", "central_witness"]]
        + [
            [e.m, str(e.tropical).lower(), str(e.central).lower(), _witness_csv(e.tropical_witness), _witness_csv(e.central_witness)]
            for e in report.per_index
        ],
        human=human,
    )
    return EXIT_OK


def cmd_sirr(args) -> int:
    f = read_polynomial(args)
    fast = indices.is_sign_independently_real_rooted(f)
    brute = indices.sirr_bruteforce(f, args.max_degree) if args.oracle else None
    payload = {"sirr": fast, "oracle": brute}
    human = f"f = {f}\nsign-independently real-rooted: {_mark(fast)}"
    if args.oracle:
        human += f"\nbrute force over sign patterns: {_mark(brute)}"
    emit(
        args.format,
        payload,
        csv_rows=[["sirr", "oracle"], [str(fast).lower(), "" if brute is None else str(brute).lower()]],
        human=human,
    )
    if args.oracle and brute != fast:
        raise Failure(EXIT_ORACLE, f"oracle disagreement on {f}: fast={fast}, brute force={brute}")
    return EXIT_OK


def cmd_logconcave(args) -> int:
    gamma = read_gamma(args, allow_file=True)
    c = preservers.classify_sequence(gamma)
    human = f"gamma = {list(map(str, gamma.values))}\n"
    if c.log_concave:
        human += "log-concave ✓"
    else:
        human += f"not log-concave ✗ (first violation at m = {c.violating_index})"
    emit(
        args.format,
        serialize.classification_to_json(c),
        csv_rows=[["classification", "log_concave", "violating_index"],
                  [c.label, str(c.log_concave).lower(), "" if c.violating_index is None else c.violating_index]],
        human=human,
    )
    return EXIT_OK if c.log_concave else EXIT_NEGATIVE


def cmd_apply(args) -> int:
    f = read_polynomial(args)
    image = apply_diagonal(read_gamma(args), f)
    emit(
        args.format,
        serialize.polynomial_to_json(image),
        csv_rows=[[serialize.fmt_rational(c) for c in image.coeffs]],
        human=str(image),
    )
    return EXIT_OK


def cmd_witness(args) -> int:
    f = read_polynomial(args)
    find = indices.tropical_witness if args.mode == preservers.TROPICAL else indices.central_witness
    w = find(f, args.m, positive=args.require_positive_witness)
    if not indices.verify_witness(f, args.m, w, args.mode, positive=args.require_positive_witness):
        raise AssertionError(f"witness {w} failed exact re-verification")
    emit(
        args.format,
        {"m": args.m, "mode": args.mode, "witness": serialize.witness_to_json(w)},
        csv_rows=[["m", "mode", "witness"], [args.m, args.mode, witness_text(w)]],
        human=f"{args.mode} index {args.m} of {f}: {witness_text(w)}",
    )
    return EXIT_OK


def cmd_counterexample(args) -> int:
    gamma = read_gamma(args, allow_file=True)
    if args.mode == preservers.TROPICAL:
        f, m = preservers.counterexample_tropical(gamma)
    else:
        f, m = preservers.counterexample_central(gamma)
    image = apply_diagonal(gamma, f)
    before, after = preservers.check_counterexample(gamma, f, m, args.mode)
    verified = before and not after
    payload = {
        "mode": args.mode,
        "gamma": [serialize.fmt_rational(v) for v in gamma.values],
        "m": m,
        "f": serialize.polynomial_to_json(f)["coeffs"],
        "image": serialize.polynomial_to_json(image)["coeffs"],
        "index_in_source": before,
        "index_in_image": after,
        "verified": verified,
    }
    human = "\n".join([
        f"least log-concavity violation: m = {m}",
        f"f            = {f}",
        f"T_gamma f    = {image}",
        f"{args.mode} index {m} of f:         {_mark(before)}",
        f"{args.mode} index {m} of T_gamma f: {_mark(after)}",
        "counterexample verified" if verified else "counterexample NOT verified",
    ])
    emit(
        args.format,
        payload,
        csv_rows=[["mode", "m", "index_in_source", "index_in_image", "verified"],
                  [args.mode, m, str(before).lower(), str(after).lower(), str(verified).lower()]],
        human=human,
    )
    return EXIT_OK if verified else EXIT_NEGATIVE


def cmd_verify(args) -> int:
    cfg = RunConfig(
        seed=resolve_seed(args.seed),
        trials=args.trials,
        max_degree=args.max_degree,
        output_format=args.format,
        require_positive_witness=args.require_positive_witness,
        jobs=args.jobs,
    )
    report = run_verify(cfg, tuple(args.claim) if args.claim else None)
    rows = [[c.claim, str(c.trials), str(c.failures), "pass" if c.failures == 0 else "FAIL"] for c in report.claims]
    if args.timings:
        for row, c in zip(rows, report.claims):
            row.append(f"{c.elapsed:.2f}s")
    header = ["claim", "trials", "failures", "result"] + (["time"] if args.timings else [])
    human = f"seed {cfg.seed}, trials {cfg.trials}, max degree {cfg.max_degree}\n" + _table(header, rows)
    for c in report.claims:
        if c.first_failure:
            human += f"first failure in {c.claim}: {serialize.dumps(c.first_failure)}"
    emit(args.format, report.to_json(args.timings), csv_rows=[header, *rows], human=human)
    return EXIT_OK if report.passed else EXIT_NEGATIVE


# -- parser --------------------------------------------------------------


def _positive_int(text: str) -> int:
    try:
        n = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"{text!r} is not an integer")
    if n < 1:
        raise argparse.ArgumentTypeError("must be positive")
    return n


def _seed(text: str) -> int:
    try:
        n = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"{text!r} is not an integer")
    if not 0 <= n < 2**64:
        raise argparse.ArgumentTypeError("seed must fit in 64 unsigned bits")
    return n


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="tropindex", description=__doc__.splitlines()[0])
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "csv", "human"), default="json")

    poly_in = argparse.ArgumentParser(add_help=False)
    poly_in.add_argument("--coeffs", metavar="CSV", help="coefficients a_0,a_1,... as integers or p/q")
    poly_in.add_argument("--input", metavar="FILE", help='JSON file {"coeffs": [...]}')

    gamma_in = argparse.ArgumentParser(add_help=False)
    gamma_in.add_argument("--gamma", metavar="CSV", help="positive sequence gamma_0,gamma_1,...")

    mode = argparse.ArgumentParser(add_help=False)
    mode.add_argument("--mode", choices=preservers.MODES, default=preservers.TROPICAL)

    positive = argparse.ArgumentParser(add_help=False)
    positive.add_argument(
        "--require-positive-witness", action="store_true", help="forbid the witness z = 0 for index 0 too"
    )

    sub = parser.add_subparsers(dest="command", required=True)
    p = sub.add_parser("indices", parents=[common, poly_in, positive], help="tropical and central indices")
    p.set_defaults(run=cmd_indices)

    p = sub.add_parser("sirr", parents=[common, poly_in], help="sign-independent real-rootedness")
    p.add_argument("--oracle", action="store_true", help="cross-check by enumerating sign patterns")
    p.add_argument("--max-degree", type=_positive_int, default=DEFAULT_MAX_DEGREE, help="degree cap for --oracle")
    p.set_defaults(run=cmd_sirr)

    p = sub.add_parser("logconcave", parents=[common, gamma_in], help="classify a positive sequence")
    p.add_argument("--input", metavar="FILE", help='JSON file {"gamma": [...]}')
    p.set_defaults(run=cmd_logconcave)

    p = sub.add_parser("apply", parents=[common, poly_in, gamma_in], help="apply the diagonal operator")
    p.set_defaults(run=cmd_apply)

    p = sub.add_parser("witness", parents=[common, poly_in, mode, positive], help="exact witness for one index")
    p.add_argument("--m", "--index", dest="m", type=int, required=True)
    p.set_defaults(run=cmd_witness)

    p = sub.add_parser("counterexample", parents=[common, gamma_in, mode], help="break preservation for gamma")
    p.add_argument("--input", metavar="FILE", help='JSON file {"gamma": [...]}')
    p.set_defaults(run=cmd_counterexample)

    p = sub.add_parser("verify", parents=[common, positive], help="seeded property harness")
    p.add_argument("--seed", type=_seed, default=None, help=f"default ${SEED_ENV}, else {DEFAULT_SEED}")
    p.add_argument("--trials", type=_positive_int, default=DEFAULT_TRIALS)
    p.add_argument("--max-degree", type=_positive_int, default=DEFAULT_MAX_DEGREE)
    p.add_argument("--jobs", type=_positive_int, default=1, help="worker processes")
    p.add_argument("--claim", action="append", choices=CLAIM_NAMES, help="run only these claims")
    p.add_argument("--timings", action="store_true", help="include elapsed times (output no longer reproducible)")
    p.set_defaults(run=cmd_verify)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.run(args)
    except Failure as exc:
        print(f"tropindex: {exc}", file=sys.stderr)
        return exc.code
    except ZeroPolynomial as exc:
        print(f"tropindex: {exc}", file=sys.stderr)
        return EXIT_ZERO_POLY
    except ZeroCoefficient as exc:
        print(f"tropindex: {exc}", file=sys.stderr)
        return EXIT_ZERO_COEFF
    except (NotAnIndex, IsLogConcave) as exc:
        print(f"tropindex: {exc}", file=sys.stderr)
        return EXIT_NEGATIVE
    except TropIndexError as exc:
        # malformed numbers, non-positive sequences, bad index or length
        print(f"tropindex: {exc}", file=sys.stderr)
        return EXIT_PARSE
