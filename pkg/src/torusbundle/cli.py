"""Command line entry point.

Input is one JSON or TOML document such as ``{"p": 3, "rho": [[0,-1],[1,-1]], "l": 3}``
read from ``--input FILE`` or stdin. Exit codes: 0 success, 1 the input
fails validation, 2 the input is malformed.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass

from .action import ActionData, validate_action
from .errors import ActionError, DomainError
from .linalg import IntMatrix
from .report import (
    SCHEMA,
    build_report,
    detection_section,
    input_section,
    invariants_section,
    ltheory_section,
    oracle_section,
    render_text,
    structure_section,
    validation_section,
)
from .structure import ManifoldParams

try:
    import tomllib
except ModuleNotFoundError:  # Python < 3.11
    import tomli as tomllib

DEFAULT_L = 3


class MalformedInput(Exception):
    pass


@dataclass
class InputSpec:
    p: int
    rho: list[list[int]]
    l: int | None = None


def _is_int(x) -> bool:
    return isinstance(x, int) and not isinstance(x, bool)


def parse_input(text: str) -> InputSpec:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as json_err:
        try:
            doc = tomllib.loads(text)
        except tomllib.TOMLDecodeError:
            raise MalformedInput(f"input is neither JSON nor TOML ({json_err})") from None
    if not isinstance(doc, dict):
        raise MalformedInput("input must be an object with fields p, rho and optionally l")
    if "p" not in doc:
        raise MalformedInput("missing field 'p'")
    if not _is_int(doc["p"]):
        raise MalformedInput(f"field 'p' must be an integer, got {doc['p']!r}")
    if "rho" not in doc:
        raise MalformedInput("missing field 'rho'")
    rho = doc["rho"]
    if not isinstance(rho, list) or not rho or not all(isinstance(r, list) for r in rho):
        raise MalformedInput("field 'rho' must be a nonempty list of rows")
    for i, r in enumerate(rho):
        if len(r) != len(rho):
            raise MalformedInput(f"field 'rho' must be square: row {i} has {len(r)} entries, expected {len(rho)}")
        for j, x in enumerate(r):
            if not _is_int(x):
                raise MalformedInput(f"field 'rho' entry [{i}][{j}] must be an integer, got {x!r}")
    l = doc.get("l")
    if l is not None and not _is_int(l):
        raise MalformedInput(f"field 'l' must be an integer, got {l!r}")
    return InputSpec(doc["p"], rho, l)


def _parse_range(text: str) -> tuple[int, int]:
    try:
        lo, hi = text.split("..")
        lo, hi = int(lo), int(hi)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected A..B, got {text!r}") from None
    if lo > hi:
        raise argparse.ArgumentTypeError(f"empty range {text!r}")
    return lo, hi


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--input", "-i", help="input JSON/TOML file (default: stdin)")
    common.add_argument("--json", action="store_true", help="emit JSON instead of text")
    with_l = argparse.ArgumentParser(add_help=False)
    with_l.add_argument("--l", type=int, default=None,
                        help=f"odd sphere dimension >= 3 (default: input 'l' or {DEFAULT_L})")

    parser = argparse.ArgumentParser(
        prog="torusbundle",
        description="Invariants of Z^n x| Z/p and of the torus bundle T^n x_{Z/p} S^l.")
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("validate", parents=[common], help="check the action")
    sub.add_parser("invariants", parents=[common], help="H^1, abelianization, classes, r_j")
    lt = sub.add_parser("ltheory", parents=[common], help="L- and Whitehead group tables")
    lt.add_argument("--m-range", type=_parse_range, default=(0, 3), metavar="A..B",
                    help="inclusive range of m; write --m-range=-2..1 for negative starts")
    sub.add_parser("structure-set", parents=[common, with_l], help="structure sets")
    sub.add_parser("detect", parents=[common, with_l], help="detection census for M")
    sub.add_parser("verify", parents=[common], help="run all brute-force oracles")
    rp = sub.add_parser("report", parents=[common, with_l], help="everything")
    rp.add_argument("--m-range", type=_parse_range, default=(0, 3), metavar="A..B",
                    help="inclusive range of m; write --m-range=-2..1 for negative starts")
    rp.add_argument("--oracles", action="store_true", help="include oracle outcomes")
    return parser


def _emit(doc: dict, as_json: bool, out) -> None:
    if as_json:
        out.write(json.dumps(doc, indent=2) + "\n")
    else:
        out.write(render_text(doc))


def run_cli(argv: list[str] | None = None, stdin=None, stdout=None, stderr=None) -> int:
    stdin = sys.stdin if stdin is None else stdin
    stdout = sys.stdout if stdout is None else stdout
    stderr = sys.stderr if stderr is None else stderr
    args = build_parser().parse_args(argv)

    try:
        if args.input:
            with open(args.input, encoding="utf-8") as fh:
                text = fh.read()
        else:
            text = stdin.read()
        spec = parse_input(text)
    except OSError as err:
        stderr.write(f"error: cannot read input: {err}\n")
        return 2
    except MalformedInput as err:
        stderr.write(f"error: malformed input: {err}\n")
        return 2

    try:
        a: ActionData = validate_action(spec.p, IntMatrix.from_rows(spec.rho))
        l = getattr(args, "l", None)
        l = l if l is not None else (spec.l if spec.l is not None else DEFAULT_L)
        mp = ManifoldParams(a, l)
    except (ActionError, DomainError) as err:
        stderr.write(f"error: {err}\n")
        if args.json:
            stdout.write(json.dumps({"schema": SCHEMA, "validation": {
                "valid": False, "error": type(err).__name__, "message": str(err)}}, indent=2) + "\n")
        return 1

    doc = {"schema": SCHEMA, "input": input_section(a, l)}
    cmd = args.command
    if cmd == "validate":
        doc["validation"] = validation_section(a)
    elif cmd == "invariants":
        doc["validation"] = validation_section(a)
        doc["invariants"] = invariants_section(a)
    elif cmd == "ltheory":
        doc["l_theory"] = ltheory_section(a, *args.m_range)
    elif cmd == "structure-set":
        doc["structure_sets"] = structure_section(mp)
    elif cmd == "detect":
        doc["detection"] = detection_section(mp)
    elif cmd == "verify":
        doc["oracles"] = oracle_section(a)
        _emit(doc, args.json, stdout)
        return 0 if doc["oracles"]["all_agree"] else 1
    elif cmd == "report":
        doc = build_report(a, l, *args.m_range, with_oracles=args.oracles)
    _emit(doc, args.json, stdout)
    return 0


def main() -> None:
    sys.exit(run_cli())
