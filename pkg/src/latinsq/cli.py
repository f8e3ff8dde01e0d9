"""Command-line interface.

Exit codes: 0 for a positive verdict, 1 for a negative one (a non-Latin
table, a theorem violation), 2 when the input could not be analysed.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import __version__
from .classify import ClassificationReport, classify
from .generate import (
    FIXTURES,
    EnumPrefix,
    SampleConfig,
    cyclic_table,
    direct_product,
    enumerate_latin,
    fixture,
    random_latin,
)
from .table import CayleyTable, ParseError, latin_check, parse, serialize
from .verify import verify_exhaustive, verify_sampled

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_USAGE = 2


class UsageError(Exception):
    pass


def _sniff_format(path: str, override: str | None) -> str:
    if override:
        return override
    return "json" if path.lower().endswith(".json") else "text"


def _read_table(path: str, fmt: str | None) -> CayleyTable:
    fmt = _sniff_format(path, fmt)
    try:
        text = sys.stdin.read() if path == "-" else Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None
    try:
        return parse(text, fmt)
    except ParseError as exc:
        raise UsageError(f"{path}: {exc}") from None


def _emit(args: argparse.Namespace, text: str) -> None:
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _dump(doc: dict) -> str:
    return json.dumps({"indexing": "0-based", **doc}, indent=2) + "\n"


def cmd_validate(args: argparse.Namespace) -> int:
    table = _read_table(args.path, args.format)
    report = latin_check(table)
    if args.json:
        _emit(args, _dump({"n": table.n, **report.to_dict()}))
    else:
        lines = [f"order {table.n}: " + ("Latin square" if report.is_latin else "not a Latin square")]
        lines += ["  " + v.describe(table) for v in report.violations]
        _emit(args, "\n".join(lines) + "\n")
    return EXIT_OK if report.is_latin else EXIT_NEGATIVE


def _format_report(table: CayleyTable, report: ClassificationReport) -> str:
    lab = table.label
    yes = {True: "yes", False: "no"}
    lines = [
        f"class: {report.structure}",
        f"order: {table.n}",
        f"latin: {yes[report.latin.is_latin]}",
    ]
    lines += ["  " + v.describe(table) for v in report.latin.violations]
    lines.append("identity: " + ("none" if report.identity is None else lab(report.identity)))
    lines.append(f"associative: {yes[report.associative]} ({report.algorithm})")
    if report.assoc_witness is not None:
        lines.append("witness: " + report.assoc_witness.equation(table))
    if report.inverses is not None:
        pairs = [f"{lab(i)}<->{lab(j)}" for i, j in enumerate(report.inverses.pairs) if i <= j]
        lines.append("inverses: " + ", ".join(pairs))
    elif report.identity is not None:
        lines.append("inverses: not two-sided")
    comm = f"commutative: {yes[report.commutative]}"
    if report.commutative_witness is not None:
        a, b = report.commutative_witness
        comm += f" ({lab(a)}·{lab(b)} = {lab(table.entry(a, b))} ≠ {lab(table.entry(b, a))} = {lab(b)}·{lab(a)})"
    lines.append(comm)
    if report.order_profile is not None:
        lines.append("element orders: " + " ".join(map(str, report.order_profile)))
    return "\n".join(lines) + "\n"


def cmd_classify(args: argparse.Namespace) -> int:
    table = _read_table(args.path, args.format)
    report = classify(table, args.algo)
    if args.json:
        _emit(args, _dump({"n": table.n, **report.to_dict()}))
    else:
        _emit(args, _format_report(table, report))
    return EXIT_OK


def _operand(spec: str, fmt: str | None) -> CayleyTable:
    if spec.isdigit():
        n = int(spec)
        if n < 1:
            raise UsageError("cyclic factor order must be at least 1")
        return cyclic_table(n)
    return _read_table(spec, fmt)


def cmd_gen(args: argparse.Namespace) -> int:
    params = args.params
    kind = args.kind

    def need(count: int) -> None:
        if len(params) != count:
            raise UsageError(f"gen {kind} takes {count} parameter(s), got {len(params)}")

    def order(token: str) -> int:
        if not token.isdigit() or int(token) < 1:
            raise UsageError(f"order must be a positive integer, got {token!r}")
        return int(token)

    if kind == "cyclic":
        need(1)
        table = cyclic_table(order(params[0]))
    elif kind == "random":
        need(1)
        if args.steps is not None and args.steps < 1:
            raise UsageError("--steps must be at least 1")
        table = random_latin(SampleConfig(order(params[0]), args.seed, args.steps))
    elif kind == "product":
        need(2)
        # operands are cyclic orders or table files; files are read as text unless .json
        table = direct_product(_operand(params[0], None), _operand(params[1], None))
    else:
        need(1)
        if params[0] not in FIXTURES:
            raise UsageError(f"unknown fixture {params[0]!r}; choose from {', '.join(FIXTURES)}")
        table = fixture(params[0])
    _emit(args, serialize(table, "json" if args.json else (args.format or "text")))
    return EXIT_OK


def cmd_enumerate(args: argparse.Namespace) -> int:
    n = args.n
    prefix = EnumPrefix(n, tuple(range(n))) if args.fixed_first_row else None
    printed: list[str] = []
    visitor = None
    if args.print:
        def visitor(table: CayleyTable) -> None:
            printed.append(serialize(table))
    count = enumerate_latin(n, prefix, visitor, force=args.force)
    if args.json:
        doc = {"n": n, "fixed_first_row": args.fixed_first_row, "count": count}
        if args.print:
            doc["tables"] = [t.rstrip("\n") for t in printed]
        _emit(args, _dump(doc))
    else:
        _emit(args, "".join(t + "\n" for t in printed) + f"{count} Latin squares of order {n}\n")
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    if args.sampled is not None:
        if args.sampled < 1:
            raise UsageError("--sampled must be at least 1")
        report = verify_sampled(args.n, args.sampled, args.seed, args.steps)
    else:
        if args.parallel < 1:
            raise UsageError("--parallel must be at least 1")
        report = verify_exhaustive(args.n, force=args.force, parallel=args.parallel)
    if args.json:
        _emit(args, _dump(report.to_dict()))
    else:
        lines = [f"order {report.n} ({report.mode}): {report.summary()}"]
        for v in report.violations:
            lines.append(f"violation at step {v.step}:")
            lines.append(serialize(v.table).rstrip("\n"))
        _emit(args, "\n".join(lines) + "\n")
    print(f"elapsed {report.elapsed:.3f}s", file=sys.stderr)
    return EXIT_OK if report.holds else EXIT_NEGATIVE


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["text", "json"], default=None,
                        help="table file format (default: by extension for input, text for output)")
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--out", metavar="PATH", help="write output to PATH instead of stdout")

    parser = argparse.ArgumentParser(prog="latinsq", description="Analyse Latin squares as Cayley tables.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", parents=[common], help="check the Latin property")
    p.add_argument("path", help="table file, or - for stdin")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("classify", parents=[common], help="classify the operation")
    p.add_argument("path", help="table file, or - for stdin")
    p.add_argument("--algo", choices=["naive", "light"], default=None,
                   help="associativity algorithm (default: naive up to order 64)")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("gen", parents=[common], help="generate a table")
    p.add_argument("kind", choices=["cyclic", "random", "product", "fixture"])
    p.add_argument("params", nargs="*",
                   help="cyclic N | random N | product A B (orders or files) | fixture "
                        + "|".join(FIXTURES))
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--steps", type=int, default=None, help="random walk length (default n^3)")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("enumerate", parents=[common], help="count Latin squares of order n")
    p.add_argument("n", type=int)
    p.add_argument("--fixed-first-row", action="store_true", help="only squares with first row 1..n")
    p.add_argument("--print", action="store_true", help="also print every square")
    p.add_argument("--force", action="store_true", help="allow order 6")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("verify", parents=[common],
                       help="check that every associative Latin square of order n is a group")
    p.add_argument("n", type=int)
    p.add_argument("--sampled", type=int, metavar="K", default=None, help="check K random squares instead")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--steps", type=int, default=None, help="random walk length for --sampled")
    p.add_argument("--parallel", type=int, metavar="P", default=1, help="worker processes")
    p.add_argument("--force", action="store_true", help="allow order 6")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, ValueError) as exc:
        print(f"latinsq: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
