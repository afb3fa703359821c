"""Command-line surface.

Exit codes: 0 success/valid, 1 invalid table or pseudo verdict, 2 undecidable
(a hint or class metadata is required), 3 parse or usage errors.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import checks, degrees, solve
from .errors import (
    ChartabError,
    DimensionMismatch,
    InsufficientData,
    LiteralError,
    NeedsHint,
    ParseError,
)
from .cyclo import format_cyclotomic
from .fileio import load_path
from .table import CharacterTable, PartialTable, class_data, element_orders

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_UNDECIDED = 2
EXIT_USAGE = 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(message)


class _UsageError(Exception):
    pass


def _emit(payload: dict, as_json: bool, lines: list[str]):
    if as_json:
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        for line in lines:
            print(line)


def _load(path, kind):
    table = load_path(path)
    if kind == "full" and not isinstance(table, CharacterTable):
        raise _UsageError(f"{path} holds a partial table; a full table is required")
    if kind == "row" and not (isinstance(table, PartialTable) and table.missing == "row"):
        raise _UsageError(f"{path} is not a puzzle with a missing row")
    if kind == "column" and not (isinstance(table, PartialTable) and table.missing == "column"):
        raise _UsageError(f"{path} is not a puzzle with a missing column")
    return table


def _parse_hints(raw: str | None) -> dict:
    if raw is None:
        return {}
    key, sep, value = raw.partition("=")
    if key != "sylow2-ab" or not sep or not value.isdigit():
        raise _UsageError(f"unsupported hint {raw!r}; expected sylow2-ab=N")
    return {"sylow2_ab": int(value)}


def _cmd_validate(args) -> int:
    table = _load(args.file, "full")
    report = checks.validate(table)
    lines = [f"{table.name}: " + ("valid" if report.passed else "INVALID")]
    for v in report.violations:
        lines.append(f"  {v.rule} at {v.location}: {v.detail}")
    _emit({"command": "validate", "name": table.name, **report.to_dict()},
          args.json, lines)
    return EXIT_OK if report.passed else EXIT_INVALID


def _cmd_info(args) -> int:
    table = load_path(args.file)
    if isinstance(table, PartialTable):
        payload = {"command": "info", "name": table.name, "kind": f"partial-{table.missing}",
                   "classes": table.k, "given_rows": len(table.entries)}
        _emit(payload, args.json,
              [f"{table.name}: partial table missing one {table.missing}, k = {table.k}"])
        return EXIT_OK
    data = class_data(table)
    try:
        orders = list(element_orders(table))
    except InsufficientData:
        orders = None
    payload = {"command": "info", "name": table.name, "kind": "table",
               "classes": table.k, "group_order": data.group_order,
               "centralizer_orders": list(data.centralizer_orders),
               "class_sizes": list(data.class_sizes),
               "element_orders": orders,
               "identity_column": data.identity_column + 1}
    lines = [f"{table.name}: k = {table.k}, |G| = {data.group_order}",
             f"  centralizer orders: {', '.join(map(str, data.centralizer_orders))}",
             f"  class sizes:        {', '.join(map(str, data.class_sizes))}",
             "  element orders:     " + (", ".join(map(str, orders)) if orders
                                         else "unavailable (no orders or power maps)")]
    _emit(payload, args.json, lines)
    return EXIT_OK


def _solve_payload(command, name, outcome: solve.SolveOutcome) -> tuple[dict, list[str]]:
    payload = {"command": command, "name": name, "ok": True, **outcome.to_dict()}
    vector = ", ".join(format_cyclotomic(x) for x in outcome.vector)
    trace = outcome.trace.to_dict()
    detail = ", ".join(f"{k}={v}" for k, v in trace.items() if k != "kind")
    lines = [f"{'row' if command == 'solve-row' else 'column'}: {vector}",
             f"case: {trace['kind']}" + (f" ({detail})" if detail else ""),
             "validation: passed"]
    return payload, lines


def _cmd_solve_row(args) -> int:
    table = _load(args.file, "row")
    try:
        outcome = solve.solve_missing_row(table, _parse_hints(args.hint))
    except NeedsHint as exc:
        payload = {"command": "solve-row", "name": table.name, "ok": False,
                   "error": "needs-hint", "message": str(exc),
                   "candidates": [{"vector": [format_cyclotomic(x) for x in vec],
                                   "trace": trace.to_dict()}
                                  for vec, trace in exc.candidates]}
        if args.json:
            print(json.dumps(payload, indent=2, sort_keys=True))
        else:
            print("undecided: " + str(exc), file=sys.stderr)
            for vec, trace in exc.candidates:
                print("  candidate: " + ", ".join(format_cyclotomic(x) for x in vec)
                      + f"  (branch {trace.branch})", file=sys.stderr)
        return EXIT_UNDECIDED
    payload, lines = _solve_payload("solve-row", table.name, outcome)
    _emit(payload, args.json, lines)
    return EXIT_OK


def _cmd_solve_col(args) -> int:
    table = _load(args.file, "column")
    outcome = solve.solve_missing_column(table)
    payload, lines = _solve_payload("solve-col", table.name, outcome)
    _emit(payload, args.json, lines)
    return EXIT_OK


def _cmd_pseudo_check(args) -> int:
    table = _load(args.file, "full")
    report = checks.validate(table)
    if not report.passed:
        _emit({"command": "pseudo-check", "name": table.name, "verdict": "invalid",
               **report.to_dict()},
              args.json, [f"{table.name}: not formally valid; run validate for details"])
        return EXIT_INVALID
    verdict = checks.pseudo_check(table)
    payload = {"command": "pseudo-check", "name": table.name, **verdict.to_dict()}
    lines = [f"{table.name}: {verdict.verdict}"]
    if verdict.witness:
        w = verdict.witness
        lines.append(f"  row {w['row']} (degree {w['degree']}), class {w['class']}: "
                     f"{w['constraint']} fails with {w['lhs']} != {w['rhs']}")
    _emit(payload, args.json, lines)
    return EXIT_INVALID if verdict.verdict == "pseudo" else EXIT_OK


def _cmd_degrees(args) -> int:
    pairs = degrees.enumerate_pairs(args.e)
    payload = {"command": "degrees", "e": args.e,
               "max_order": degrees.hls_max_order(args.e),
               "pairs": [[p.d, p.n] for p in pairs]}
    _emit(payload, args.json, [f"({p.d},{p.n})" for p in pairs])
    return EXIT_OK


def _cmd_feasible(args) -> int:
    triples = degrees.feasible_ramifications(
        args.order, args.degree, args.normal,
        n_abelian=args.abelian, n_central=args.central,
        coprime_extension=args.coprime_extension)
    payload = {"command": "feasible", "order": args.order, "degree": args.degree,
               "normal": args.normal,
               "options": {"abelian": args.abelian, "central": args.central,
                           "coprime_extension": args.coprime_extension},
               "triples": [[t.k, t.e, t.t] for t in triples]}
    lines = [f"({t.k},{t.e},{t.t})" for t in triples] or ["infeasible"]
    _emit(payload, args.json, lines)
    return EXIT_OK


def _cmd_lemma_scenarios(args) -> int:
    results = degrees.lemma_scenarios()
    payload = {"command": "lemma-scenarios",
               "scenarios": [r.to_dict() for r in results],
               "ok": all(r.ok for r in results)}
    lines = []
    for r in results:
        shown = ",".join(f"({t.k},{t.e},{t.t})" for t in r.triples) or "infeasible"
        lines.append(f"case {r.label} {r.description}: {shown}"
                     + ("" if r.ok else "  [UNEXPECTED]"))
    _emit(payload, args.json, lines)
    return EXIT_OK if all(r.ok for r in results) else EXIT_INVALID


def build_parser() -> _Parser:
    parser = _Parser(prog="chartab",
                     description="Validate, complete, and probe finite-group character tables.")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--hint", metavar="sylow2-ab=N",
                        help="extra datum for row puzzles the table cannot decide")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", parents=[common], help="check the formal table axioms")
    p.add_argument("file")
    p.set_defaults(func=_cmd_validate)
    p = sub.add_parser("info", parents=[common], help="orders, centralizers, class sizes")
    p.add_argument("file")
    p.set_defaults(func=_cmd_info)
    p = sub.add_parser("solve-row", parents=[common], help="reconstruct a deleted row")
    p.add_argument("file")
    p.set_defaults(func=_cmd_solve_row)
    p = sub.add_parser("solve-col", parents=[common], help="reconstruct a deleted column")
    p.add_argument("file")
    p.set_defaults(func=_cmd_solve_col)
    p = sub.add_parser("pseudo-check", parents=[common],
                       help="screen two-class rows for impossibility")
    p.add_argument("file")
    p.set_defaults(func=_cmd_pseudo_check)
    p = sub.add_parser("degrees", parents=[common],
                       help="candidate (d, n) pairs for groups of order d(d+e)")
    p.add_argument("e", type=int)
    p.set_defaults(func=_cmd_degrees)
    p = sub.add_parser("feasible", parents=[common],
                       help="ramification triples compatible with a normal subgroup")
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--degree", type=int, required=True)
    p.add_argument("--normal", type=int, required=True)
    p.add_argument("--abelian", action="store_true")
    p.add_argument("--central", action="store_true")
    p.add_argument("--coprime-extension", action="store_true", dest="coprime_extension")
    p.set_defaults(func=_cmd_feasible)
    p = sub.add_parser("lemma-scenarios", parents=[common],
                       help="run the scripted infeasibility suites")
    p.set_defaults(func=_cmd_lemma_scenarios)
    return parser


def run_cli(argv) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except _UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (ParseError, DimensionMismatch, LiteralError, FileNotFoundError, IsADirectoryError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (NeedsHint, InsufficientData) as exc:
        print(f"undecided: {exc}", file=sys.stderr)
        return EXIT_UNDECIDED
    except ChartabError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID


def main():
    sys.exit(run_cli(sys.argv[1:]))


if __name__ == "__main__":
    main()
