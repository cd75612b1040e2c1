"""Command-line front door for the codec.

Subcommands cover parameter derivation, encoding and decoding (full pipeline
or the congruence layer alone), reproducible channel corruption, the
verification suites, and the redundancy table. Text protocol throughout:
one bit sequence per line on stdin and stdout, reports and event logs on
stderr where noted.

Exit codes are part of the contract: 0 success, 1 usage, 2 parameter
validation, 3 data error on at least one input line, 4 verification failure.
"""
from __future__ import annotations

import argparse
import sys
from collections.abc import Callable

from .analysis import emit_csv, gap_condition_check, redundancy_row
from .bitseq import BitSeq
from .channel import DELETION, INSERTION, apply_event, log_line, random_event, trial_seed
from .code import derive_params, embed_encode, params_text, raw_params
from .decoder import correct, decode_message
from .errors import DataError, ValidationError
from .front import FrontParams, front_encode
from .oracle import (
    DEFAULT_SAMPLE_SEED,
    Report,
    check_channel_campaign,
    check_encoder_rll,
    check_front_roundtrip,
    check_sidc,
)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_VALIDATION = 2
EXIT_DATA = 3
EXIT_VERIFY = 4

_CAMPAIGN_TRIALS = 1000


class _Parser(argparse.ArgumentParser):
    """ArgumentParser that reports usage problems with exit code 1."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _for_each_line(transform: Callable[[int, str], None]) -> int:
    """Run transform over stdin lines; report per-line failures and continue."""
    failed = False
    for number, raw in enumerate(sys.stdin, start=1):
        try:
            transform(number, raw.strip())
        except (DataError, ValueError) as exc:
            failed = True
            print(f"ERROR {number} {exc}", file=sys.stderr)
    return EXIT_DATA if failed else EXIT_OK


def _cmd_params(args) -> int:
    cp = derive_params(args.k, args.r, args.d, args.b)
    sys.stdout.write(params_text(cp))
    return EXIT_OK


def _cmd_encode(args) -> int:
    cp = derive_params(args.k, args.r, args.d, args.b)
    if args.raw:
        def transform(number: int, text: str) -> None:
            print(embed_encode(cp, BitSeq.parse(text)))
    else:
        fp = FrontParams(args.k, args.r)

        def transform(number: int, text: str) -> None:
            print(embed_encode(cp, front_encode(BitSeq.parse(text), fp)))
    return _for_each_line(transform)


def _cmd_decode(args) -> int:
    cp = derive_params(args.k, args.r, args.d, args.b)
    if args.raw:
        def transform(number: int, text: str) -> None:
            print(correct(cp, BitSeq.parse(text))[cp.m :])
    else:
        # constructed eagerly so infeasible (k, r) fail before any input is read
        FrontParams(args.k, args.r)

        def transform(number: int, text: str) -> None:
            print(decode_message(cp, BitSeq.parse(text)))
    return _for_each_line(transform)


def _cmd_corrupt(args) -> int:
    kind = {"insert": INSERTION, "delete": DELETION, "random": None}[args.op]

    def transform(number: int, text: str) -> None:
        s = BitSeq.parse(text)
        event = random_event(len(s), trial_seed(args.seed, number - 1), kind)
        print(apply_event(s, event))
        print(log_line(event), file=sys.stderr)

    return _for_each_line(transform)


def _emit_reports(reports) -> int:
    ok = True
    for report in reports:
        sys.stdout.write(report.render())
        ok = ok and report.passed
    return EXIT_OK if ok else EXIT_VERIFY


def _verify_front_roundtrip(args) -> int:
    return _emit_reports([check_front_roundtrip(args.k, args.r)])


def _verify_sidc(args) -> int:
    reports = []
    for n in range(args.n_min, args.n_max + 1):
        modulus = raw_params(n, args.rhat, args.d, 0).modulus
        residues = range(modulus) if args.b is None else [args.b]
        failures = 0
        counterexample = None
        for b in residues:
            if not check_sidc(n, args.rhat, args.d, b):
                failures += 1
                if counterexample is None:
                    counterexample = f"b={b}"
        reports.append(
            Report(
                name="sidc",
                params={
                    "n": n,
                    "r_hat": args.rhat,
                    "d": args.d,
                    "b": "all" if args.b is None else args.b,
                },
                passed=failures == 0,
                counterexample=counterexample,
                stats={"residues": len(residues), "failures": failures},
            )
        )
    return _emit_reports(reports)


def _verify_encoder_rll(args) -> int:
    return _emit_reports([check_encoder_rll(args.k, args.r, args.d, seed=args.seed)])


def _verify_gap_condition(args) -> int:
    return _emit_reports([gap_condition_check(args.rhat)])


def _verify_campaign(args) -> int:
    report = check_channel_campaign(
        args.k, args.r, _CAMPAIGN_TRIALS, args.seed, args.d, args.b
    )
    return _emit_reports([report])


def _cmd_analyze(args) -> int:
    if args.n_min > args.n_max:
        raise ValidationError(f"--n-min {args.n_min} exceeds --n-max {args.n_max}")
    rows = [redundancy_row(n) for n in range(args.n_min, args.n_max + 1)]
    sys.stdout.write(emit_csv(rows))
    return EXIT_OK


def _add_code_flags(parser: argparse.ArgumentParser, with_raw: bool = False) -> None:
    parser.add_argument("--k", type=int, required=True, help="message-part length")
    parser.add_argument("--r", type=int, required=True, help="maximum run length")
    parser.add_argument("--d", type=int, help="solved-position weight (default: top of range)")
    parser.add_argument("--b", type=int, help="congruence residue (default: 0)")
    if with_raw:
        parser.add_argument(
            "--raw",
            action="store_true",
            help="congruence layer only: run-limited words in, codewords out",
        )


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="rllindel",
        description="Run-length-limited codec correcting one insertion or deletion.",
    )
    sub = parser.add_subparsers(dest="command", required=True, metavar="command")

    p = sub.add_parser("params", help="derive and print code parameters")
    _add_code_flags(p)
    p.set_defaults(func=_cmd_params)

    p = sub.add_parser(
        "encode", help="encode stdin lines into codewords"
    )
    _add_code_flags(p, with_raw=True)
    p.set_defaults(func=_cmd_encode)

    p = sub.add_parser(
        "decode", help="decode stdin lines, fixing one indel"
    )
    _add_code_flags(p, with_raw=True)
    p.set_defaults(func=_cmd_decode)

    p = sub.add_parser(
        "corrupt",
        help="apply one seeded random indel per line; event log on stderr",
    )
    p.add_argument("--seed", type=int, required=True, help="base seed; line i uses trial i-1")
    p.add_argument(
        "--op",
        choices=("insert", "delete", "random"),
        default="random",
        help="event kind (default: random)",
    )
    p.set_defaults(func=_cmd_corrupt)

    p = sub.add_parser("verify", help="run a verification suite")
    suites = p.add_subparsers(dest="suite", required=True, metavar="suite")

    s = suites.add_parser(
        "front-roundtrip",
        help="exhaustive front-end round trip over all messages",
    )
    s.add_argument("--k", type=int, required=True)
    s.add_argument("--r", type=int, required=True)
    s.set_defaults(func=_verify_front_roundtrip)

    s = suites.add_parser(
        "sidc",
        help="single-deletion ball disjointness by enumeration",
    )
    s.add_argument("--n-min", type=int, required=True)
    s.add_argument("--n-max", type=int, required=True)
    s.add_argument("--rhat", type=int, required=True)
    s.add_argument("--d", type=int, required=True)
    s.add_argument("--b", type=int, help="single residue (default: all residues)")
    s.set_defaults(func=_verify_sidc)

    s = suites.add_parser(
        "encoder-rll",
        help="encoder outputs stay run-limited codewords (exhaustive for k <= 10)",
    )
    s.add_argument("--k", type=int, required=True)
    s.add_argument("--r", type=int, required=True)
    s.add_argument("--d", type=int)
    s.add_argument("--seed", type=int, default=DEFAULT_SAMPLE_SEED)
    s.set_defaults(func=_verify_encoder_rll)

    s = suites.add_parser(
        "gap-condition",
        help="parity-collision sweep over one blocklength band",
    )
    s.add_argument("--rhat", type=int, required=True)
    s.set_defaults(func=_verify_gap_condition)

    s = suites.add_parser(
        "campaign",
        help=f"{_CAMPAIGN_TRIALS} seeded encode-corrupt-decode trials",
    )
    s.add_argument("--k", type=int, required=True)
    s.add_argument("--r", type=int, required=True)
    s.add_argument("--d", type=int)
    s.add_argument("--b", type=int)
    s.add_argument("--seed", type=int, required=True)
    s.set_defaults(func=_verify_campaign)

    p = sub.add_parser("analyze", help="emit analysis tables as CSV")
    tables = p.add_subparsers(dest="table", required=True, metavar="table")
    t = tables.add_parser(
        "redundancy",
        help="redundancy and bound gap per blocklength",
    )
    t.add_argument("--n-min", type=int, required=True)
    t.add_argument("--n-max", type=int, required=True)
    t.set_defaults(func=_cmd_analyze)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ValidationError as exc:
        print(f"parameter error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION
    except DataError as exc:
        print(f"data error: {exc}", file=sys.stderr)
        return EXIT_DATA
    except ValueError as exc:
        print(f"parameter error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION


if __name__ == "__main__":
    raise SystemExit(main())
