"""Command-line front end.

Subcommands: ``decide``, ``schwarz``, ``enumerate``, ``tables``, ``selftest``.
``decide`` exits 0 (splits), 1 (obstructed) or 2 (hypotheses not met); any
usage or input error exits 64.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from fractions import Fraction
from typing import Any, Mapping, Sequence

import jsonschema

from .chern import ChernVector, LineBundle
from .cpm import enumerate_split_chern
from .engine import (
    SpaceProfile,
    SplitProblem,
    decide,
    primary_obstruction,
    profile_cpm,
    span_decide,
)
from .selftest import run_selftest
from .symfun import cpm_split_admissible, schwarzenberger_check
from .tables import TABLE_NAMES, OutOfTabulatedRange, table_rows

__all__ = ["PROBLEM_SCHEMA", "VERDICT_SCHEMA", "ProblemError", "load_problem", "solve", "run", "main"]

EX_USAGE = 64

_INT = {"oneOf": [{"type": "integer"}, {"type": "string", "pattern": "^-?[0-9]+$"}]}
_VEC = {"type": "array", "items": _INT}
_STR_INT = {"type": "string", "pattern": "^-?[0-9]+$"}
_GROUP = {
    "type": "object",
    "properties": {"free_rank": _INT, "torsion": _VEC},
    "additionalProperties": False,
}
_MATRIX = {
    "oneOf": [
        {"type": "array", "items": _VEC},
        {
            "type": "object",
            "properties": {"rows": _INT, "cols": _INT, "entries": {"type": "array", "items": _VEC}},
            "required": ["rows", "cols"],
            "additionalProperties": False,
        },
    ]
}
_DEGREE_MAP = {"type": "object", "patternProperties": {"^[0-9]+$": _MATRIX}, "additionalProperties": False}
_DEGREE_GROUPS = {"type": "object", "patternProperties": {"^[0-9]+$": _GROUP}, "additionalProperties": False}

PROFILE_SCHEMA = {
    "type": "object",
    "properties": {
        "m": _INT,
        "name": {"type": "string"},
        "ring": {
            "type": "object",
            "properties": {
                "groups": {"type": "array", "items": _GROUP, "minItems": 2},
                "products": {
                    "type": "object",
                    "patternProperties": {"^[0-9]+,[0-9]+$": {"type": "array", "items": {"type": "array", "items": _VEC}}},
                    "additionalProperties": False,
                },
            },
            "required": ["groups"],
            "additionalProperties": False,
        },
        "cohomology": {
            "type": "object",
            "properties": {"Z": _DEGREE_GROUPS, "Z/2": _DEGREE_GROUPS, "Z/4": _DEGREE_GROUPS},
            "additionalProperties": False,
        },
        "maps": {
            "type": "object",
            "properties": {"rho2": _DEGREE_MAP, "sq2": _DEGREE_MAP, "delta": _DEGREE_MAP},
            "additionalProperties": False,
        },
        "flags": {"type": "object", "additionalProperties": {"type": "boolean"}},
    },
    "required": ["m", "ring"],
    "additionalProperties": False,
}

PROBLEM_SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "type": "object",
    "properties": {
        "base": {"enum": ["cpm", "profile"]},
        "m": _INT,
        "profile": PROFILE_SCHEMA,
        "xi": {"type": "array", "items": {"oneOf": [_INT, _VEC]}},
        "lines": {"type": "array", "items": {"oneOf": [_INT, _VEC]}, "maxItems": 3},
        "r": _INT,
        "mode": {"enum": ["split", "span", "primary-obstruction", "schwarzenberger"]},
        "tangent": {"type": "boolean"},
    },
    "required": ["base", "m", "xi"],
    "additionalProperties": False,
    "allOf": [
        {"if": {"properties": {"base": {"const": "profile"}}}, "then": {"required": ["profile"]}},
    ],
}

_FAILURE = {
    "type": "object",
    "properties": {
        "route": {"type": "string"},
        "condition": {"type": "string"},
        "status": {"enum": ["fails", "insufficient"]},
        "explanation": {"type": "string"},
    },
    "required": ["route", "condition", "status", "explanation"],
    "additionalProperties": False,
}

VERDICT_SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "oneOf": [
        {
            "type": "object",
            "properties": {
                "verdict": {"const": "splits"},
                "route": {"type": "string"},
                "checked_degrees": {"type": "array", "items": _STR_INT},
                "certificate": {"type": "array", "items": {"type": "array", "items": _STR_INT}},
                "conditions": {"type": "array", "items": {"type": "string"}},
                "flags_used": {"type": "array", "items": {"type": "string"}},
            },
            "required": ["verdict", "route", "checked_degrees", "certificate", "conditions", "flags_used"],
            "additionalProperties": False,
        },
        {
            "type": "object",
            "properties": {
                "verdict": {"const": "obstructed"},
                "route": {"type": "string"},
                "index": _STR_INT,
                "degree": _STR_INT,
                "value": {"type": "array", "items": _STR_INT},
                "checked_degrees": {"type": "array", "items": _STR_INT},
                "necessary_only": {"type": "boolean"},
                "flags_used": {"type": "array", "items": {"type": "string"}},
            },
            "required": ["verdict", "route", "index", "degree", "value", "checked_degrees",
                         "necessary_only", "flags_used"],
            "additionalProperties": False,
        },
        {
            "type": "object",
            "properties": {
                "verdict": {"const": "hypotheses_not_met"},
                "failures": {"type": "array", "items": _FAILURE, "minItems": 1},
            },
            "required": ["verdict", "failures"],
            "additionalProperties": False,
        },
    ],
}


class ProblemError(ValueError):
    """Malformed problem file; ``pointer`` names the offending field."""

    def __init__(self, pointer: str, message: str):
        super().__init__(f"{pointer or '/'}: {message}")
        self.pointer = pointer or "/"


def _pointer(path) -> str:
    return "".join(f"/{p}" for p in path)


def _vector(x, ngens: int, where: str) -> tuple[int, ...]:
    vec = (int(x),) if not isinstance(x, list) else tuple(int(v) for v in x)
    if len(vec) != ngens:
        raise ProblemError(where, f"expected {ngens} coordinates, got {len(vec)}")
    return vec


def load_problem(data: Mapping[str, Any]) -> tuple[str, SplitProblem | None, dict]:
    """Validate a problem document; return ``(mode, problem, extras)``.

    For ``schwarzenberger`` mode the problem is ``None`` and ``extras`` holds
    the integer class and line values.
    """
    validator = jsonschema.Draft202012Validator(PROBLEM_SCHEMA)
    errors = sorted(validator.iter_errors(data), key=lambda e: list(e.absolute_path))
    if errors:
        err = jsonschema.exceptions.best_match(errors)
        raise ProblemError(_pointer(err.absolute_path), err.message)
    mode = data.get("mode", "split")
    m = int(data["m"])
    if m < 1:
        raise ProblemError("/m", "m must be positive")
    if data["base"] == "cpm":
        if "profile" in data:
            raise ProblemError("/profile", "a cpm problem takes no profile")
        profile = profile_cpm(m)
    else:
        try:
            profile = SpaceProfile.from_dict(data["profile"])
        except (ValueError, TypeError, KeyError) as exc:
            raise ProblemError("/profile", str(exc)) from None
        if profile.m != m:
            raise ProblemError("/profile/m", f"profile has m = {profile.m}, problem says m = {m}")
    ring = profile.ring
    xi_raw = data["xi"]
    if len(xi_raw) > m:
        raise ProblemError("/xi", f"{len(xi_raw)} Chern classes for rank {m}")
    classes = [_vector(x, ring.groups[i + 1].ngens, f"/xi/{i}") for i, x in enumerate(xi_raw)]
    lines_raw = data.get("lines", [])
    line_vecs = [_vector(z, ring.groups[1].ngens, f"/lines/{i}") for i, z in enumerate(lines_raw)]
    r = int(data["r"]) if "r" in data else len(line_vecs)
    extras = {"m": m, "r": r, "xi": classes, "lines": line_vecs}

    if mode == "schwarzenberger":
        if data["base"] != "cpm":
            raise ProblemError("/base", "the integrality test needs base cpm")
        return mode, None, extras
    if not 1 <= r <= 3:
        raise ProblemError("/r", f"r must be 1, 2 or 3, got {r}")
    if mode in ("split", "primary-obstruction") and len(line_vecs) != r:
        raise ProblemError("/lines", f"{len(line_vecs)} lines given but r = {r}")
    try:
        xi = ChernVector.from_classes(ring, classes, rank=m)
    except ValueError as exc:
        raise ProblemError("/xi", str(exc)) from None
    if mode == "span":
        zero = ring.zero(1)
        lines = tuple(LineBundle(ring, zero) for _ in range(r))
    else:
        lines = tuple(LineBundle(ring, z) for z in line_vecs)
    return mode, SplitProblem(profile, xi, lines, bool(data.get("tangent", False))), extras


def _fraction(x: Fraction | None) -> str | None:
    return None if x is None else str(x)


def solve(data: Mapping[str, Any]) -> tuple[dict, int]:
    """Run one problem document; return the JSON report and exit code."""
    mode, problem, extras = load_problem(data)
    if mode == "schwarzenberger":
        m = extras["m"]
        c = [1] + [v[0] for v in extras["xi"]]
        c += [0] * (m + 1 - len(c))
        if not extras["lines"]:
            res = schwarzenberger_check(c, m)
            return {"realizable": res.realizable, "failing_k": None if res.failing_k is None else str(res.failing_k),
                    "value": _fraction(res.value)}, 0 if res else 1
        adm = cpm_split_admissible(c, [z[0] for z in extras["lines"]], m)
        code = {"admissible": 0, "inadmissible": 1, "hypothesis_failure": 2}[adm.status]
        return {
            "status": adm.status,
            "quotient": None if adm.quotient is None else [str(x) for x in adm.quotient],
            "failing_degree": None if adm.failing_degree is None else str(adm.failing_degree),
            "failing_k": None if adm.failing_k is None else str(adm.failing_k),
            "value": _fraction(adm.value),
            "reason": adm.reason,
        }, code
    if mode == "primary-obstruction":
        value = primary_obstruction(problem)
        degree = problem.m - problem.r + 1
        return {"degree": str(degree), "value": [str(x) for x in value]}, 1 if any(value) else 0
    if mode == "span":
        verdict = span_decide(problem.profile, problem.xi, problem.r, problem.tangent)
    else:
        verdict = decide(problem)
    return verdict.to_dict(), verdict.exit_code


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EX_USAGE, f"{self.prog}: error: {message}\n")


def _build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="linesplit", description="Decide whether complex line bundles split off a vector bundle.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("decide", help="decide a problem file and print the verdict as JSON")
    p.add_argument("--input", default="-", help="problem JSON file ('-' for standard input)")
    p.add_argument("--format", choices=["json"], default="json")

    p = sub.add_parser("schwarz", help="integrality test for a total Chern class over CP^m")
    p.add_argument("coefficients", nargs="*", help="c_1 ... c_m (integers)")
    p.add_argument("--m", type=int, help="top degree (defaults to the number of coefficients)")
    p.add_argument("--input", help="problem JSON file instead of coefficients")
    p.add_argument("--format", choices=["json", "csv"], default="json")

    p = sub.add_parser("enumerate", help="list split-admissible classes over CP^m (JSON lines)")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--bound", type=int, required=True, help="bound on |c_i|")
    p.add_argument("--line-bound", type=int, help="bound on |z_i| (defaults to --bound)")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--format", choices=["json", "csv"], default="json")

    p = sub.add_parser("tables", help="dump a lookup table")
    p.add_argument("table", choices=TABLE_NAMES)
    p.add_argument("--m", type=int, help="select one row of the pi table")
    p.add_argument("--format", choices=["json", "csv"], default="csv")

    p = sub.add_parser("selftest", help="run the built-in invariant suite")
    p.add_argument("--seed", type=int, default=0)
    return parser


def _read_json(path: str, stdin) -> Any:
    try:
        text = stdin.read() if path == "-" else open(path, encoding="utf-8").read()
    except OSError as exc:
        raise ProblemError("/", f"cannot read {path}: {exc.strerror}") from None
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ProblemError("/", f"invalid JSON at line {exc.lineno} column {exc.colno}: {exc.msg}") from None


def _emit_rows(header: Sequence[str], rows: Sequence[Sequence[str]], fmt: str, out) -> None:
    if fmt == "csv":
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(header)
        writer.writerows(rows)
    else:
        out.write(json.dumps({"columns": list(header), "rows": [list(r) for r in rows]}, indent=2) + "\n")


def run(argv: Sequence[str] | None = None, stdin=None, stdout=None, stderr=None) -> int:
    stdin = stdin or sys.stdin
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)

    try:
        if args.command == "decide":
            report, code = solve(_read_json(args.input, stdin))
            stdout.write(json.dumps(report, indent=2) + "\n")
            return code

        if args.command == "schwarz":
            if args.input:
                data = dict(_read_json(args.input, stdin))
                data["mode"] = "schwarzenberger"
                report, code = solve(data)
            else:
                if not args.coefficients:
                    raise ProblemError("/", "give coefficients c_1 ... c_m or --input")
                try:
                    coeffs = [int(x) for x in args.coefficients]
                except ValueError:
                    raise ProblemError("/coefficients", "coefficients must be integers") from None
                m = len(coeffs) if args.m is None else args.m
                if m < 1 or len(coeffs) > m:
                    raise ProblemError("/m", f"{len(coeffs)} coefficients do not fit in degree {m}")
                res = schwarzenberger_check([1] + coeffs + [0] * (m - len(coeffs)), m)
                report = {"realizable": res.realizable,
                          "failing_k": None if res.failing_k is None else str(res.failing_k),
                          "value": _fraction(res.value)}
                code = 0 if res else 1
            if args.format == "csv":
                _emit_rows(list(report), [["" if v is None else str(v) for v in report.values()]], "csv", stdout)
            else:
                stdout.write(json.dumps(report, indent=2) + "\n")
            return code

        if args.command == "enumerate":
            line_bound = args.bound if args.line_bound is None else args.line_bound
            try:
                results = enumerate_split_chern(args.m, args.r, args.bound, line_bound, args.workers)
            except ValueError as exc:
                raise ProblemError("/", str(exc)) from None
            if args.format == "csv":
                rows = [[" ".join(map(str, s.chern)), " ".join(map(str, s.lines)),
                         " ".join(map(str, s.certificate.quotient))] for s in results]
                _emit_rows(["c", "lines", "quotient"], rows, "csv", stdout)
            else:
                for s in results:
                    stdout.write(json.dumps({
                        "c": [str(x) for x in s.chern],
                        "lines": [str(z) for z in s.lines],
                        "quotient": [str(x) for x in s.certificate.quotient],
                    }) + "\n")
            return 0

        if args.command == "tables":
            try:
                header, rows = table_rows(args.table, args.m)
            except OutOfTabulatedRange as exc:
                raise ProblemError("/m", str(exc)) from None
            _emit_rows(header, rows, args.format, stdout)
            return 0

        if args.command == "selftest":
            results = run_selftest(args.seed)
            for name, ok, detail in results:
                stdout.write(f"{'PASS' if ok else 'FAIL'}  {name}{'  ' + detail if detail else ''}\n")
            return 0 if all(ok for _, ok, _ in results) else 1
    except ProblemError as exc:
        stderr.write(f"linesplit: {exc}\n")
        return EX_USAGE
    return EX_USAGE


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
