"""Command-line surface.

Exit codes: 0 valid / provable / agreement, 1 invalid / unprovable,
2 usage or parse error, 3 cross-check disagreement.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .decision import (
    cross_check,
    decide_ipl,
    decide_s4,
    verdict_to_json,
)
from .formula import IPL, S4, ParseError, parse, pretty, subformula_closure
from .nmatrix import M_IPL, M_S4_PRIME
from .oracle import g4ip_prove
from .refinement import refine_fixpoint, render_trace_markdown, trace_to_json
from .tabulation import (
    closure_bounds,
    generate_table,
    table_to_csv,
    table_to_json,
    table_to_markdown,
)
from .translation import translate


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(message)


def _build_parser() -> _Parser:
    parser = _Parser(prog="rnmx", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, logic=True, premises=True):
        if logic:
            p.add_argument("--logic", choices=("ipl", "s4"), required=True)
        if premises:
            p.add_argument(
                "--premise",
                action="append",
                default=[],
                metavar="FORMULA",
                help="repeatable premise",
            )
        p.add_argument("--style", choices=("ascii", "unicode"), default="unicode")
        p.add_argument("formula")

    p = sub.add_parser("decide", help="validity / entailment verdict")
    common(p)
    p.add_argument(
        "--mode",
        choices=("designated", "necessity"),
        default="designated",
        help="acceptance threshold for S4 verdicts (ignored for ipl)",
    )
    p.add_argument("--format", choices=("json", "md"), default="json")

    p = sub.add_parser("table", help="initial and refined truth tables")
    common(p)
    p.add_argument("--trace", action="store_true", help="show every cycle")
    p.add_argument("--format", choices=("md", "csv", "json"), default="md")

    p = sub.add_parser("translate", help="boxed and semi-translated forms")
    common(p, logic=False, premises=False)

    p = sub.add_parser("bounds", help="row-count bounds and the actual count")
    common(p, premises=False)

    p = sub.add_parser("oracle", help="sequent-calculus verdict (IPL only)")
    common(p, logic=False)

    p = sub.add_parser("xcheck", help="three-way agreement report")
    common(p, logic=False, premises=False)
    return parser


def _color_enabled(stream) -> bool:
    mode = os.environ.get("RNMX_COLOR", "auto")
    if mode == "always":
        return True
    if mode == "never":
        return False
    return hasattr(stream, "isatty") and stream.isatty()


def _verdict_word(valid: bool, stream) -> str:
    word = "valid" if valid else "invalid"
    if _color_enabled(stream):
        code = "32" if valid else "31"
        return f"\x1b[{code}m{word}\x1b[0m"
    return word


def _matrix_for(logic: str):
    return M_IPL if logic == "ipl" else M_S4_PRIME


def _parse_inputs(args):
    sig = S4 if getattr(args, "logic", "ipl") == "s4" else IPL
    premises = [parse(text, sig) for text in getattr(args, "premise", [])]
    return premises, parse(args.formula, sig)


def run(argv, stdout=None, stderr=None) -> int:
    stdout = stdout if stdout is not None else sys.stdout
    stderr = stderr if stderr is not None else sys.stderr
    try:
        args = _build_parser().parse_args(argv)
    except _UsageError as exc:
        print(f"rnmx: {exc}", file=stderr)
        return 2
    try:
        return _dispatch(args, stdout, stderr)
    except (ParseError, ValueError, KeyError) as exc:
        print(f"rnmx: {exc}", file=stderr)
        return 2


def _dispatch(args, stdout, stderr) -> int:
    if args.command == "decide":
        premises, conclusion = _parse_inputs(args)
        if args.logic == "ipl":
            verdict = decide_ipl(premises, conclusion)
        else:
            verdict = decide_s4(premises, conclusion, args.mode)
        payload = verdict_to_json(verdict, args.style)
        if args.format == "json":
            print(json.dumps(payload, indent=2), file=stdout)
        else:
            print(f"{pretty(conclusion, args.style)}: {payload['valid']}", file=stdout)
        print(
            f"{args.logic}: {_verdict_word(verdict.valid, stderr)} "
            f"({verdict.initial_rows} rows -> {verdict.final_rows}, "
            f"{verdict.cycles} cycle(s))",
            file=stderr,
        )
        return 0 if verdict.valid else 1

    if args.command == "table":
        premises, conclusion = _parse_inputs(args)
        closure = subformula_closure([*premises, conclusion])
        table = generate_table(closure, _matrix_for(args.logic))
        final, trace = refine_fixpoint(table)
        if args.format == "md":
            if args.trace:
                print(render_trace_markdown(table, trace, args.style), file=stdout)
            else:
                print(f"Initial table.\n\n{table_to_markdown(table, args.style)}", file=stdout)
                print(f"Final table.\n\n{table_to_markdown(final, args.style)}", file=stdout)
        elif args.format == "csv":
            print(table_to_csv(table, args.style), end="", file=stdout)
            print(table_to_csv(final, args.style), end="", file=stdout)
        else:
            payload = {
                "initial": table_to_json(table, args.style),
                "final": table_to_json(final, args.style),
            }
            if args.trace:
                payload["trace"] = trace_to_json(trace)
            print(json.dumps(payload, indent=2), file=stdout)
        return 0

    if args.command == "translate":
        source = parse(args.formula, IPL)
        result = translate(source)
        print(pretty(result.boxed, args.style), file=stdout)
        print(f"semi: {pretty(result.semi, args.style)}", file=stderr)
        return 0

    if args.command == "bounds":
        _, formula = _parse_inputs(args)
        matrix = _matrix_for(args.logic)
        closure = subformula_closure([formula])
        lb, ub = closure_bounds(closure, matrix)
        actual = len(generate_table(closure, matrix).rows)
        print(json.dumps({"lb": lb, "ub": ub, "initial_rows": actual}), file=stdout)
        return 0

    if args.command == "oracle":
        premises = [parse(text, IPL) for text in args.premise]
        conclusion = parse(args.formula, IPL)
        provable = g4ip_prove(premises, conclusion)
        print(json.dumps({"provable": provable}), file=stdout)
        return 0 if provable else 1

    if args.command == "xcheck":
        formula = parse(args.formula, IPL)
        report = cross_check(formula)
        payload = {
            "formula": pretty(formula, args.style),
            "ipl": report.ipl_valid,
            "s4": report.s4_valid,
            "oracle": report.oracle_valid,
            "agree": report.agree,
        }
        print(json.dumps(payload, indent=2), file=stdout)
        return 0 if report.agree else 3

    raise _UsageError(f"unknown command {args.command!r}")


def main() -> None:
    raise SystemExit(run(sys.argv[1:]))
