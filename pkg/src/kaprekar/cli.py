"""Command-line front end.

Number notation: bases up to 36 use the compact alphabet 0-9 then a-z
(lowercase), so 495 in base 10 is "495" and 35 in base 36 is "z". Above
base 36 digits are colon-separated decimal values, e.g. "24:7:31:16".

Exit codes: 0 success, 1 internal invariant violation (including an orbit
that fails to repeat within the step budget), 2 usage or parse errors,
3 state space over the build guard.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import census as census_mod
from . import constants as constants_mod
from .errors import KaprekarError, StateSpaceTooLarge, StepLimitExceeded
from .graph import (
    DEFAULT_MAX_STEPS,
    build_graph,
    graph_to_dot,
    graph_to_json,
    trace,
)
from .radix import DigitString, check_radix, check_width

ALPHABET = "0123456789abcdefghijklmnopqrstuvwxyz"

EXIT_OK = 0
EXIT_INTERNAL = 1
EXIT_USAGE = 2
EXIT_TOO_LARGE = 3


def format_digits(n: DigitString) -> str:
    if n.base <= 36:
        return "".join(ALPHABET[d] for d in n.digits)
    return ":".join(str(d) for d in n.digits)


def format_digit_tuple(digits: tuple[int, ...], base: int) -> str:
    if base <= 36:
        return "".join(ALPHABET[d] for d in digits)
    return ":".join(str(d) for d in digits)


def parse_literal(text: str, base: int, width: int | None = None) -> DigitString:
    """Parse a number literal in the CLI notation, zero-padded to width."""
    check_radix(base)
    if base > 36:
        try:
            digits = [int(part) for part in text.split(":")]
        except ValueError:
            raise ValueError(f"expected colon-separated digit values, got {text!r}") from None
    else:
        digits = []
        for ch in text.lower():
            idx = ALPHABET.find(ch)
            if idx < 0:
                raise ValueError(f"bad digit {ch!r} in literal {text!r}")
            digits.append(idx)
    for d in digits:
        if d >= base:
            raise ValueError(f"digit {d} out of range for base {base} in {text!r}")
    if width is None:
        width = max(len(digits), 2)
    check_width(width)
    if len(digits) > width:
        raise ValueError(f"literal {text!r} has {len(digits)} digits; width is {width}")
    padded = [0] * (width - len(digits)) + digits
    return DigitString(base, tuple(padded))


def parse_range_spec(text: str) -> list[int]:
    """start | start:end | start:end:step, all inclusive."""
    parts = text.split(":")
    if len(parts) > 3:
        raise ValueError(f"range spec has too many fields: {text!r}")
    try:
        numbers = [int(p) for p in parts]
    except ValueError:
        raise ValueError(f"bad range spec {text!r}") from None
    start = numbers[0]
    end = numbers[1] if len(numbers) > 1 else start
    step = numbers[2] if len(numbers) > 2 else 1
    if start > end:
        raise ValueError(f"range start {start} exceeds end {end}")
    if step < 1:
        raise ValueError(f"range step must be >= 1, got {step}")
    return list(range(start, end + 1, step))


def _write_output(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        Path(out).write_text(text, encoding="utf-8")


def cmd_step(args: argparse.Namespace) -> int:
    from .radix import kaprekar_step

    n = parse_literal(args.number, args.base, args.width)
    print(format_digits(kaprekar_step(n)))
    return EXIT_OK


def cmd_trace(args: argparse.Namespace) -> int:
    literal = args.literal if args.literal is not None else args.number
    if literal is None:
        raise ValueError("trace needs a number (positional or --literal)")
    n = parse_literal(literal, args.base, args.width)
    result = trace(n, max_steps=args.max_steps)
    for value in result.values:
        print(format_digits(value))
    if result.kind == "cycle":
        print(f"status: cycle length={result.cycle_length}")
    else:
        print(f"status: {result.kind}")
    return EXIT_OK


def cmd_constants(args: argparse.Namespace) -> int:
    report = constants_mod.find_constants(args.base, args.digits)
    if args.format == "json":
        doc = report.as_dict()
        doc["search_result_text"] = (
            format_digits(report.search_result) if report.search_result else None
        )
        _write_output(json.dumps(doc, indent=2) + "\n", args.out)
        return EXIT_OK
    lines = [
        f"base: {report.base}",
        f"width: {report.width}",
        "search result: "
        + (format_digits(report.search_result) if report.search_result else "none"),
        "cycle lengths: " + ",".join(str(n) for n in report.cycle_lengths),
    ]
    if report.formula_prediction is not None:
        lines.append(
            f"formula ({report.formula_name}): "
            + format_digit_tuple(report.formula_prediction, report.base)
        )
        lines.append(f"formula is fixed point: {str(report.formula_is_fixed_point).lower()}")
    lines.append(f"agreement: {report.agreement}")
    _write_output("\n".join(lines) + "\n", args.out)
    return EXIT_OK


def cmd_table(args: argparse.Namespace) -> int:
    bases = parse_range_spec(args.bases)
    table = census_mod.distribution_table(bases, args.digits, parallel=args.parallel)
    if args.format == "text":
        widths = [max(len(str(v)) for v in col) for col in zip(*table.rows)]
        lines = []
        for base, row in zip(table.bases, table.rows):
            cells = " ".join(str(v).rjust(w) for v, w in zip(row, widths))
            lines.append(f"{base:>4} {cells}")
        _write_output("\n".join(lines) + "\n", args.out)
    else:
        _write_output(table.to_csv(), args.out)
    return EXIT_OK


def cmd_cycles(args: argparse.Namespace) -> int:
    bases = parse_range_spec(args.bases)
    widths = parse_range_spec(args.widths)
    result = census_mod.cycle_census(bases, widths, parallel=args.parallel)
    if args.format == "json":
        doc = {
            "cells": [
                {"base": b, "width": w, "cycles": result.cells[(b, w)]}
                for (b, w) in sorted(result.cells)
            ],
            "histogram": {str(k): v for k, v in sorted(result.histogram.items())},
            "skipped": [list(cell) for cell in result.skipped],
        }
        _write_output(json.dumps(doc, indent=2) + "\n", args.out)
    else:
        _write_output(result.to_csv(), args.out)
    if result.skipped:
        print(f"skipped {len(result.skipped)} cells over the state guard", file=sys.stderr)
    return EXIT_OK


def cmd_tree(args: argparse.Namespace) -> int:
    g = build_graph(args.base, args.digits)
    text = graph_to_dot(g) if args.format == "dot" else graph_to_json(g)
    _write_output(text, args.out)
    return EXIT_OK


def _verify_lines(max_base: int, parallel: int) -> tuple[list[str], bool]:
    lines = []
    ok = True

    def verdict(passed: bool, name: str, detail: str = "") -> None:
        nonlocal ok
        ok = ok and passed
        suffix = f" ({detail})" if detail else ""
        lines.append(f"{'PASS' if passed else 'FAIL'}  {name}{suffix}")

    table = census_mod.distribution_table(
        range(2, max_base + 1, 2), 3, parallel=parallel
    )
    verdicts = census_mod.verify_patterns(table)
    for check in verdicts.all_checks():
        detail = f"skipped {len(check.skipped)}" if check.skipped else ""
        if not check.passed:
            detail = "; ".join(check.violations[:3])
        verdict(check.passed, f"pattern {check.name}", detail)

    count = census_mod.figure1_edge_count()
    verdict(
        count == census_mod.FIGURE1_EXPECTED_COUNT,
        "flow-graph 594 edge count",
        f"counted {count}, expected {census_mod.FIGURE1_EXPECTED_COUNT}",
    )

    for base in range(2, max_base + 1, 2):
        report = constants_mod.find_constants(base, 3)
        if report.agreement != constants_mod.AGREE_MATCH:
            verdict(False, "3-digit constants match formula", f"base {base}: {report.agreement}")
            break
    else:
        verdict(True, "3-digit constants match formula", f"even bases 2-{max_base}")

    for base in (5, 10, 40):
        report = constants_mod.find_constants(base, 4)
        if report.agreement != constants_mod.AGREE_MATCH:
            verdict(False, "4-digit constants match formula", f"base {base}: {report.agreement}")
            break
    else:
        verdict(True, "4-digit constants match formula", "bases 5, 10, 40")

    for base in (15, 21, 27, 33):
        report = constants_mod.find_constants(base, 5)
        complete = (
            report.formula_prediction is not None
            and report.formula_is_fixed_point is not None
        )
        consistent = (report.agreement == constants_mod.AGREE_MATCH) == (
            report.search_result is not None
            and report.search_result.digits == report.formula_prediction
        )
        found = (
            format_digits(report.search_result) if report.search_result else "no constant"
        )
        verdict(
            complete and consistent,
            f"5-digit formula reconciliation base {base}",
            f"formula {format_digit_tuple(report.formula_prediction, base)} "
            f"vs search {found}: {report.agreement}",
        )
    return lines, ok


def cmd_verify(args: argparse.Namespace) -> int:
    lines, ok = _verify_lines(args.max_base, args.parallel)
    _write_output("\n".join(lines) + "\n", args.out)
    return EXIT_OK if ok else EXIT_INTERNAL


def cmd_report(args: argparse.Namespace) -> int:
    """Full analysis pass: delimited data, figures, and the verify summary."""
    from . import figures

    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)

    table_28 = census_mod.distribution_table(range(2, 29, 2), 3, parallel=args.parallel)
    (out / "table_3digit_bases2-28.csv").write_text(table_28.to_csv(), encoding="utf-8")

    table_full = census_mod.distribution_table(
        range(2, args.max_base + 1, 2), 3, parallel=args.parallel
    )
    (out / f"table_3digit_bases2-{args.max_base}.csv").write_text(
        table_full.to_csv(), encoding="utf-8"
    )

    row3 = census_mod.distribution_row(10, 3)
    row4 = census_mod.distribution_row(10, 4)
    table_b10 = census_mod.distribution_table([10], 4)
    (out / "table_4digit_base10.csv").write_text(table_b10.to_csv(), encoding="utf-8")

    cens = census_mod.cycle_census(
        range(2, args.census_max_base + 1),
        range(2, args.census_max_width + 1),
        parallel=args.parallel,
    )
    (out / "cycle_census.csv").write_text(cens.to_csv(), encoding="utf-8")

    figures.save_iteration_curves(table_full, out / f"iterations_3digit_bases2-{args.max_base}.png")
    figures.save_iteration_bars(row3, 10, 3, out / "iterations_3digit_base10.png")
    figures.save_iteration_bars(row4, 10, 4, out / "iterations_4digit_base10.png")
    figures.save_cycle_histogram(cens, out / "cycle_length_histogram.png")

    lines, ok = _verify_lines(args.max_base, args.parallel)
    (out / "verify_summary.txt").write_text("\n".join(lines) + "\n", encoding="utf-8")

    for name in sorted(p.name for p in out.iterdir()):
        print(name)
    return EXIT_OK if ok else EXIT_INTERNAL


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="kaprekar",
        description="Kaprekar routine engine: constants, cycles, and "
        "iteration distributions in arbitrary bases.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("step", help="apply one Kaprekar step to a number")
    p.add_argument("number")
    p.add_argument("--base", type=int, required=True)
    p.add_argument("--width", type=int, default=None)
    p.set_defaults(func=cmd_step)

    p = sub.add_parser("trace", help="print an orbit until it first repeats")
    p.add_argument("number", nargs="?", default=None)
    p.add_argument("--literal", default=None, help="number literal; overrides the positional")
    p.add_argument("--base", type=int, required=True)
    p.add_argument("--width", type=int, default=None)
    p.add_argument("--max-steps", type=int, default=DEFAULT_MAX_STEPS)
    p.set_defaults(func=cmd_trace)

    p = sub.add_parser("constants", help="search for a constant and check the formulas")
    p.add_argument("--base", type=int, required=True)
    p.add_argument("--digits", type=int, required=True)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_constants)

    p = sub.add_parser("table", help="iteration-distribution table over a range of bases")
    p.add_argument("--digits", type=int, required=True)
    p.add_argument("--bases", required=True, help="range spec start[:end[:step]]")
    p.add_argument("--format", choices=("csv", "text"), default="csv")
    p.add_argument("--out", default=None)
    p.add_argument("--parallel", type=int, default=1)
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("cycles", help="cycle-length census over a (base, width) grid")
    p.add_argument("--bases", required=True, help="range spec start[:end[:step]]")
    p.add_argument("--widths", required=True, help="range spec start[:end[:step]]")
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--out", default=None)
    p.add_argument("--parallel", type=int, default=1)
    p.set_defaults(func=cmd_cycles)

    p = sub.add_parser("tree", help="export the successor graph as JSON or DOT")
    p.add_argument("--base", type=int, required=True)
    p.add_argument("--digits", type=int, required=True)
    p.add_argument("--format", choices=("json", "dot"), default="json")
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_tree)

    p = sub.add_parser("verify", help="run every built-in regularity check")
    p.add_argument("--max-base", type=int, default=56)
    p.add_argument("--out", default=None)
    p.add_argument("--parallel", type=int, default=1)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("report", help="write CSV data, figures, and the verify summary")
    p.add_argument("--out", required=True, help="output directory")
    p.add_argument("--max-base", type=int, default=56)
    p.add_argument("--census-max-base", type=int, default=36)
    p.add_argument("--census-max-width", type=int, default=9)
    p.add_argument("--parallel", type=int, default=1)
    p.set_defaults(func=cmd_report)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except StateSpaceTooLarge as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_TOO_LARGE
    except StepLimitExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    except (KaprekarError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
