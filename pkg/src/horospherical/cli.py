"""Command line: ``classify``, ``inspect`` and ``selftest``.

Exit codes: 0 success, 1 invalid input, 2 internal consistency failure.
"""

from __future__ import annotations

import argparse
import sys

from .classify import DEFAULT_MAX_RANK, enumerate_special
from .horo import HoroPair
from .report import (
    build_report,
    classification_to_dict,
    render_json,
    render_report,
    render_table,
    report_to_dict,
)
from .roots import DomainError, InvalidTypeError, SimpleType
from .selftest import run_selftest

MAX_CLI_RANK = 12


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="horospherical",
        description="Smooth projective horospherical varieties of Picard number one.",
    )
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("classify", help="list the special pairs up to a rank")
    p.add_argument("--max-rank", type=int, default=DEFAULT_MAX_RANK)
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("inspect", help="full report for one pair")
    p.add_argument("type", help="family letter A..G")
    p.add_argument("rank", type=int)
    p.add_argument("alpha", type=int)
    p.add_argument("beta", type=int)
    p.add_argument("--json", action="store_true")

    sub.add_parser("selftest", help="run the invariant suites")
    return parser


def cmd_classify(max_rank: int, as_json: bool) -> str:
    if not 1 <= max_rank <= MAX_CLI_RANK:
        raise UsageError(f"--max-rank must be between 1 and {MAX_CLI_RANK}")
    reports = [build_report(rec.pair) for rec in enumerate_special(max_rank)]
    if as_json:
        return render_json(classification_to_dict(max_rank, reports))
    return render_table(reports)


def cmd_inspect(family: str, rank: int, alpha: int, beta: int, as_json: bool) -> str:
    try:
        pair = HoroPair(SimpleType(family.upper(), rank), alpha, beta)
    except (InvalidTypeError, DomainError) as exc:
        raise UsageError(str(exc)) from exc
    report = build_report(pair)
    if as_json:
        return render_json(report_to_dict(report))
    return render_report(report)


def main(argv: list[str] | None = None) -> int:
    try:
        args = build_parser().parse_args(argv)
        if args.command == "classify":
            out = cmd_classify(args.max_rank, args.json)
        elif args.command == "inspect":
            out = cmd_inspect(args.type, args.rank, args.alpha, args.beta, args.json)
        else:
            return 0 if run_selftest() else 2
    except UsageError as exc:
        print(f"horospherical: error: {exc}", file=sys.stderr)
        return 1
    except (DomainError, RuntimeError) as exc:
        print(f"horospherical: consistency failure: {exc}", file=sys.stderr)
        return 2
    sys.stdout.write(out)
    return 0


if __name__ == "__main__":
    sys.exit(main())
