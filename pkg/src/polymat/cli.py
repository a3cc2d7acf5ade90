"""Command-line front end.

Problem files are JSON documents::

    {"schema": 1, "nvars": 3,
     "matrix": [["z1 - z3", "z2"], ["0", "1"]],
     "polys": ["z1", "z3"]}            # used by the groebner command

Each command prints a JSON certificate document on stdout and a short
summary on stderr.  Exit codes: 0 for a decisive outcome, 2 when the answer
is inconclusive (unable to judge, completion budget exhausted), 1 for input
errors.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time

from .completion import DEFAULT_MAX_DEGREE, DEFAULT_MAX_OPS
from .factorize import (COMPLETION_NOT_FOUND, EQUIVALENT, FACTORED,
                        NO_FACTORIZATION, NOT_EQUIVALENT, UNABLE_TO_JUDGE,
                        NotInClassError, PivotError, decide_equivalence,
                        factorize_general_variable, split_pivot,
                        verify_equivalence, verify_factorization)
from .groebner import buchberger
from .matrix import PolyMatrix, ShapeError, gcd_chain
from .parsing import ParseError, parse_polynomial
from .poly import DimensionError, MonomialOrder, Polynomial, divides

SCHEMA = 1

DECISIVE = (FACTORED, NO_FACTORIZATION, EQUIVALENT, NOT_EQUIVALENT)
INCONCLUSIVE = (UNABLE_TO_JUDGE, COMPLETION_NOT_FOUND)


class InputError(ValueError):
    """Malformed problem file or inconsistent options."""


def _load_problem(path: str) -> dict:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            data = json.load(fh)
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise InputError(f"{path} is not valid JSON: {exc}") from exc
    if not isinstance(data, dict):
        raise InputError("problem file must be a JSON object")
    if "nvars" not in data or not isinstance(data["nvars"], int) or data["nvars"] < 1:
        raise InputError("problem file needs a positive integer 'nvars'")
    return data


def _parse_matrix(data: dict) -> PolyMatrix:
    grid = data.get("matrix")
    if (not isinstance(grid, list) or not grid
            or not all(isinstance(row, list) and row for row in grid)):
        raise InputError("'matrix' must be a non-empty array of arrays")
    width = len(grid[0])
    if any(len(row) != width for row in grid):
        raise InputError("'matrix' must be rectangular")
    nvars = data["nvars"]
    rows = []
    for i, row in enumerate(grid):
        out = []
        for j, cell in enumerate(row):
            if not isinstance(cell, str):
                raise InputError(f"matrix[{i}][{j}] must be a string")
            try:
                out.append(parse_polynomial(cell, nvars))
            except ParseError as exc:
                raise InputError(f"matrix[{i}][{j}]: {exc}") from exc
        rows.append(out)
    return PolyMatrix(rows)


def _parse_poly_list(data: dict) -> list[Polynomial]:
    nvars = data["nvars"]
    if "polys" in data:
        items = data["polys"]
        if not isinstance(items, list) or not all(isinstance(s, str) for s in items):
            raise InputError("'polys' must be an array of strings")
        out = []
        for k, s in enumerate(items):
            try:
                out.append(parse_polynomial(s, nvars))
            except ParseError as exc:
                raise InputError(f"polys[{k}]: {exc}") from exc
        return out
    if "matrix" in data:
        matrix = _parse_matrix(data)
        return [p for row in matrix.entries for p in row]
    raise InputError("groebner needs 'polys' or 'matrix' in the problem file")


def _matrix_strings(matrix: PolyMatrix | None):
    if matrix is None:
        return None
    return [[str(p) for p in row] for row in matrix.entries]


def _budgets(args) -> tuple[int, int]:
    max_ops = args.max_ops
    if max_ops is None:
        max_ops = int(os.environ.get("POLYMAT_MAX_OPS", DEFAULT_MAX_OPS))
    max_deg = args.max_deg
    if max_deg is None:
        max_deg = int(os.environ.get("POLYMAT_MAX_DEG", DEFAULT_MAX_DEGREE))
    return max_ops, max_deg


def _pivot_from_args(h: Polynomial, var: int | None) -> int:
    """Zero-based index of the variable playing the distinguished role."""
    if var is not None:
        index = var - 1
        if not 0 <= index < h.nvars:
            raise InputError(f"--var {var} out of range")
        split_pivot(h, index)  # validates shape
        return index
    for index in range(h.nvars):
        try:
            split_pivot(h, index)
            return index
        except PivotError:
            continue
    raise InputError("h must be of the form z_i - f with f free of z_i; "
                     "use --var to pick the variable")


def _cmd_analyze(args) -> tuple[dict, int]:
    started = time.monotonic()
    data = _load_problem(args.file)
    matrix = _parse_matrix(data)
    chain = gcd_chain(matrix)
    doc = {
        "schema": SCHEMA,
        "command": "analyze",
        "argv": ["analyze", args.file],
        "nvars": matrix.nvars,
        "shape": [matrix.rows, matrix.cols],
        "rank": matrix.rank(),
        "d_chain": [str(d) for d in chain[1:]],
        "elapsed_seconds": round(time.monotonic() - started, 6),
    }
    summary = (f"{matrix.rows}x{matrix.cols} matrix, rank {doc['rank']}; "
               + ", ".join(f"d{i + 1} = {s}"
                           for i, s in enumerate(doc["d_chain"])))
    return doc, 0, summary


def _cmd_groebner(args) -> tuple[dict, int]:
    started = time.monotonic()
    data = _load_problem(args.file)
    polys = _parse_poly_list(data)
    basis = buchberger(polys)
    doc = {
        "schema": SCHEMA,
        "command": "groebner",
        "argv": ["groebner", args.file],
        "nvars": data["nvars"],
        "basis": [str(g) for g in basis.generators],
        "unit_ideal": basis.is_unit,
        "elapsed_seconds": round(time.monotonic() - started, 6),
    }
    return doc, 0, "reduced basis: {" + ", ".join(doc["basis"]) + "}"


def _factor_step_doc(out) -> dict:
    return {
        "outcome": out.variant,
        "r": out.r,
        "h": str(out.h),
        "g1": _matrix_strings(out.g1),
        "f1": _matrix_strings(out.f1),
        "certificate": [str(p) for p in out.certificate],
        "cofactors": None if out.cofactors is None
        else [str(p) for p in out.cofactors],
    }


def _iterate_chain(matrix, first, budgets):
    """After a success, keep extracting coordinate-variable factors z_i
    from the d-chain of the remaining right factor."""
    steps = [first]
    current = first.f1
    total_g = first.g1
    progress = True
    while progress:
        progress = False
        l = current.rows
        dl = gcd_chain(current)[l]
        for index in range(current.nvars):
            zi = Polynomial.variable(current.nvars, index)
            if not divides(zi, dl)[0]:
                continue
            step = factorize_general_variable(
                current, index, Polynomial.zero(current.nvars),
                max_ops=budgets[0], max_degree=budgets[1])
            if step.variant != FACTORED:
                continue
            steps.append(step)
            total_g = total_g * step.g1
            current = step.f1
            progress = True
            break
    return steps, total_g, current


def _cmd_factorize(args) -> tuple[dict, int]:
    data = _load_problem(args.file)
    matrix = _parse_matrix(data)
    h_text = args.h or data.get("h")
    if not h_text:
        raise InputError("factorize needs --h or an 'h' field in the file")
    try:
        h = parse_polynomial(h_text, matrix.nvars)
    except ParseError as exc:
        raise InputError(f"--h: {exc}") from exc
    index = _pivot_from_args(h, args.var)
    budgets = _budgets(args)
    order_name = args.order or data.get("order", "degrevlex")
    try:
        order = MonomialOrder(order_name)
    except ValueError as exc:
        raise InputError(str(exc)) from exc
    f_part = Polynomial.variable(matrix.nvars, index) - h

    started = time.monotonic()
    out = factorize_general_variable(matrix, index, f_part, order=order,
                                     max_ops=budgets[0],
                                     max_degree=budgets[1])
    doc = {
        "schema": SCHEMA,
        "command": "factorize",
        "argv": ["factorize", args.file, "--h", str(h)],
        "nvars": matrix.nvars,
        "h": str(h),
        "order": order_name,
        "budgets": {"max_ops": budgets[0], "max_degree": budgets[1]},
    }
    doc.update(_factor_step_doc(out))
    verified = None
    if out.variant == FACTORED and args.iterate:
        steps, total_g, residue = _iterate_chain(matrix, out, budgets)
        doc["chain"] = [_factor_step_doc(s) for s in steps]
        doc["g_total"] = _matrix_strings(total_g)
        doc["f_final"] = _matrix_strings(residue)
        if args.verify:
            verified = total_g * residue == matrix
    elif out.variant == FACTORED and args.verify:
        verified = verify_factorization(matrix, out.g1, out.f1, h, out.r)
    doc["verified"] = verified
    doc["elapsed_seconds"] = round(time.monotonic() - started, 6)

    code = 0 if out.variant in DECISIVE else 2
    summary = f"factorize: {out.variant} (r = {out.r})"
    if verified is not None:
        summary += f", witnesses verified: {verified}"
    return doc, code, summary


def _cmd_equivalence(args) -> tuple[dict, int]:
    data = _load_problem(args.file)
    matrix = _parse_matrix(data)
    h_text = args.h or data.get("h")
    if not h_text:
        raise InputError("equivalence needs --h or an 'h' field in the file")
    try:
        h = parse_polynomial(h_text, matrix.nvars)
    except ParseError as exc:
        raise InputError(f"--h: {exc}") from exc
    try:
        split_pivot(h)
    except PivotError as exc:
        raise InputError(str(exc)) from exc
    budgets = _budgets(args)

    started = time.monotonic()
    try:
        out = decide_equivalence(matrix, h, args.r,
                                 max_ops=budgets[0], max_degree=budgets[1])
    except ValueError as exc:
        raise InputError(str(exc)) from exc
    doc = {
        "schema": SCHEMA,
        "command": "equivalence",
        "argv": ["equivalence", args.file, "--h", str(h), "--r", str(args.r)],
        "nvars": matrix.nvars,
        "h": str(h),
        "r": args.r,
        "outcome": out.variant,
        "u": _matrix_strings(out.u),
        "d": _matrix_strings(out.d),
        "v": _matrix_strings(out.v),
        "certificate": [str(p) for p in out.certificate],
        "budgets": {"max_ops": budgets[0], "max_degree": budgets[1]},
    }
    verified = None
    if out.variant == EQUIVALENT and args.verify:
        verified = verify_equivalence(matrix, out.u, out.d, out.v)
    doc["verified"] = verified
    doc["elapsed_seconds"] = round(time.monotonic() - started, 6)
    code = 0 if out.variant in DECISIVE else 2
    summary = f"equivalence: {out.variant}"
    if verified is not None:
        summary += f", witnesses verified: {verified}"
    return doc, code, summary


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="polymat",
        description="Exact factorization and diagonal equivalence for "
                    "multivariate polynomial matrices.")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--quiet", action="store_true",
                        help="suppress the stderr summary")
    sub = parser.add_subparsers(dest="cmd", required=True)

    p = sub.add_parser("analyze", parents=[common],
                       help="rank and minor gcd chain")
    p.add_argument("file")

    p = sub.add_parser("groebner", parents=[common],
                       help="reduced basis of listed polynomials")
    p.add_argument("file")

    p = sub.add_parser("factorize", parents=[common],
                       help="extract h^r from the matrix")
    p.add_argument("file")
    p.add_argument("--h", help="linear polynomial z_i - f")
    p.add_argument("--var", type=int,
                   help="1-based index of the distinguished variable")
    p.add_argument("--order", choices=["degrevlex", "lex", "deglex"],
                   default=None,
                   help="term order (default: file's 'order' or degrevlex)")
    p.add_argument("--verify", action="store_true")
    p.add_argument("--iterate", action="store_true",
                   help="keep extracting coordinate-variable factors from "
                        "the right factor")
    p.add_argument("--max-ops", type=int, default=None)
    p.add_argument("--max-deg", type=int, default=None)

    p = sub.add_parser("equivalence", parents=[common],
                       help="decide equivalence with diag(h,..,h,1,..,1)")
    p.add_argument("file")
    p.add_argument("--h", required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--verify", action="store_true")
    p.add_argument("--max-ops", type=int, default=None)
    p.add_argument("--max-deg", type=int, default=None)

    return parser


_COMMANDS = {
    "analyze": _cmd_analyze,
    "groebner": _cmd_groebner,
    "factorize": _cmd_factorize,
    "equivalence": _cmd_equivalence,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        doc, code, summary = _COMMANDS[args.cmd](args)
    except (InputError, ParseError, NotInClassError, PivotError, ShapeError,
            DimensionError, ValueError) as exc:
        doc = {"schema": SCHEMA, "command": args.cmd,
               "error": {"type": type(exc).__name__, "message": str(exc)}}
        code = 1
        summary = f"error: {exc}"
    print(json.dumps(doc, indent=2))
    if not args.quiet:
        print(summary, file=sys.stderr)
    return code


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()
