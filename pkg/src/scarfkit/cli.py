"""Command-line front end.

Every subcommand prints one JSON document on stdout. Exit codes: 0 on
success, 1 on a usage error, 2 when an input fails validation or a solver
hypothesis does not hold; in that case the JSON is a diagnostic.
"""

from __future__ import annotations

import argparse
import json
import sys
import warnings
from fractions import Fraction
from pathlib import Path
from typing import Sequence

from . import linalg, om
from .complexes import FamilyError, SimplexFamily, from_order_family
from .geom import lattice, rn, simplex
from .invariants import MUTATIONS, SIZES, SUITES, check_invariants
from .orders import OrderError, OrderFamily
from .solver import (
    MatroidFramework,
    SolverError,
    classical_path,
    solve_classical_any,
    solve_classical_AS,
    solve_hedgehog,
    solve_matroid_general,
    solve_matroid_nd,
    solve_scarf_dual,
    solve_vector,
)
from .tokens import jsonable, unjson


class UsageError(Exception):
    pass


class InputError(Exception):
    """Validation failure with a structured diagnostic."""

    def __init__(self, diagnostic: dict):
        super().__init__(diagnostic.get("error", ""))
        self.diagnostic = diagnostic


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def dumps(doc) -> str:
    return json.dumps(doc, sort_keys=True, indent=2, default=str)


# ---------------------------------------------------------------- input


def load_json(path: str) -> dict:
    try:
        text = Path(path).read_text()
    except OSError as e:
        raise InputError({"error": "cannot read file", "path": path, "detail": e.strerror})
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise InputError({"error": "malformed JSON", "path": path, "line": e.lineno, "column": e.colno,
                          "detail": e.msg})


def _require(doc: dict, key: str, path: str):
    if not isinstance(doc, dict) or key not in doc:
        raise InputError({"error": f"missing key {key!r}", "path": path})
    return doc[key]


def _domain(doc: dict, path: str) -> SimplexFamily | OrderFamily:
    if "family" in doc:
        return SimplexFamily.from_json(doc["family"])
    if "orders" in doc:
        return OrderFamily.from_json(doc["orders"])
    raise InputError({"error": "expected a 'family' or an 'orders' entry", "path": path})


def _coloring(doc: dict, path: str, value=unjson) -> dict:
    raw = _require(doc, "coloring", path)
    pairs = raw.items() if isinstance(raw, dict) else raw
    return {unjson(v): value(c) for v, c in pairs}


def _framework(doc: dict, path: str) -> MatroidFramework:
    m = om.OrientedMatroid.from_json(_require(doc, "matroid", path))
    basis = [unjson(v) for v in _require(doc, "basis", path)]
    return MatroidFramework(m, tuple(basis), unjson(_require(doc, "b", path)))


def _index(args, D) -> int:
    n1 = len(D.I) if isinstance(D, SimplexFamily) else len(D.orders)
    if not 0 <= args.index < n1:
        raise UsageError(f"--index must lie in 0..{n1 - 1}")
    return args.index


# ---------------------------------------------------------------- commands


def cmd_validate_matroid(args) -> dict:
    m = om.OrientedMatroid.from_json(load_json(args.file))
    report = om.validate_axioms(m)
    doc = {"file": args.file, **report.to_json()}
    if not report.ok:
        raise InputError({"error": f"axiom ({report.axiom}) fails", **doc})
    return doc


_CLASSICAL = {"any": solve_classical_any, "alexander_sperner": solve_classical_AS, "scarf": solve_scarf_dual}


def _classical_json(C, tau) -> dict:
    return {"C": sorted(C), "tau": [jsonable(v) for v in tau], "basis": [], "coeffs": []}


def cmd_solve_classical(args) -> dict:
    doc = load_json(args.input)
    D = _domain(doc, args.input)
    c = _coloring(doc, args.input)
    theorem = doc.get("theorem", "any")
    if theorem not in _CLASSICAL:
        raise InputError({"error": f"unknown theorem {theorem!r}", "choices": sorted(_CLASSICAL)})
    if args.mode == "path":
        C, tau = classical_path(D, c, _index(args, D))
        return {"mode": "path", "solutions": [_classical_json(C, tau)]}
    if isinstance(D, OrderFamily):
        D = from_order_family(D)
    found = _CLASSICAL[theorem](D, c)
    full = frozenset(D.I)
    sols = [_classical_json(*s) if isinstance(s[0], frozenset) else _classical_json(full, s) for s in found]
    return {"mode": "brute", "theorem": theorem, "count": len(sols), "solutions": sols}


def cmd_solve_matroid(args) -> dict:
    doc = load_json(args.input)
    fr = _framework(doc, args.input)
    D = _domain(doc, args.input)
    c = _coloring(doc, args.input)
    i = _index(args, D)
    if fr.nondegenerate:
        sols = solve_matroid_nd(fr, D, c, args.mode, i)
    else:
        sols = [solve_matroid_general(fr, D, c, args.mode, i)]
    return {"mode": args.mode, "nondegenerate": fr.nondegenerate, "count": len(sols),
            "solutions": [s.to_json() for s in sols]}


def cmd_solve_vector(args) -> dict:
    doc = load_json(args.input)
    D = _domain(doc, args.input)
    c = _coloring(doc, args.input, value=linalg.as_vector)
    basis = doc.get("basis")
    s = solve_vector(D, c, _require(doc, "b", args.input), basis, args.mode)
    return {"mode": args.mode, "solution": s.to_json()}


def cmd_solve_hedgehog(args) -> dict:
    doc = load_json(args.input)
    fr = _framework(doc, args.input)
    D = _domain(doc, args.input)
    if isinstance(D, OrderFamily):
        D = from_order_family(D)
    s = solve_hedgehog(fr, D, _coloring(doc, args.input), args.mode)
    return {"mode": args.mode, "solution": s.to_json()}


def _point_arg(text: str | None, n: int):
    if text is None:
        raise UsageError("the constant oracle needs --point")
    p = tuple(Fraction(t) for t in text.split(","))
    if len(p) != n + 1 or any(a < 0 for a in p) or sum(p) != 1:
        raise UsageError(f"--point must be a point of the {n}-simplex")
    return p


def _approximate(args, oracles: dict, constant, run) -> dict:
    if args.n < 1:
        raise UsageError("--n must be at least 1")
    if args.oracle == "constant":
        oracle = constant(_point_arg(args.point, args.n))
    else:
        oracle = oracles[args.oracle]
    schedule = simplex.density_schedule(args.max_grid)
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", simplex.ApproximationWarning)
        result = run(oracle, args.n, args.eps, schedule)
    return {"oracle": args.oracle, "n": args.n, "eps": args.eps, **result.to_json()}


def cmd_brouwer(args) -> dict:
    return _approximate(args, simplex.BROUWER_ORACLES, simplex.constant_oracle, simplex.brouwer_approximate)


def cmd_kakutani(args) -> dict:
    return _approximate(args, simplex.KAKUTANI_ORACLES, simplex.constant_kakutani, simplex.kakutani_approximate)


def cmd_freudenthal(args) -> dict:
    if args.n < 1 or args.N < 1:
        raise UsageError("--n and --N must be at least 1")
    cells = lattice.freudenthal(args.n, args.N)
    doc: dict = {"cells": len(cells)}
    if not args.count:
        doc["simplices"] = [[list(v) for v in sorted(s)] for s in cells]
    if args.verify:
        doc["isomorphism"] = lattice.verify_isomorphism(args.n, args.N)
        doc["closed_form"] = len(lattice.i_cells_closed_form(args.n, args.N))
        doc["dominance"] = len(lattice.i_cells_by_dominance(args.n, args.N))
    return doc


def cmd_intersect(args) -> dict:
    doc = load_json(args.input)
    c = rn.geometric_chain(_require(doc, "c", args.input))
    d = rn.geometric_chain(_require(doc, "d", args.input))
    return {"c_dimension": c.dimension, "d_dimension": d.dimension,
            "intersection": rn.intersection_number(c, d)}


def cmd_check_invariants(args) -> dict:
    only = args.only.split(",") if args.only else None
    if only and not set(only) <= set(SUITES):
        raise UsageError(f"--only takes suites from {', '.join(SUITES)}")
    report = check_invariants(args.seed, args.sizes, args.mutate, only)
    if not report["ok"]:
        raise InputError({"error": "invariant failure", **report})
    return report


# ---------------------------------------------------------------- parser


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="scarfkit", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("validate-matroid", help="check the circuit axioms, including strong elimination")
    s.add_argument("file")
    s.set_defaults(fn=cmd_validate_matroid)

    for name, fn, help_ in [
        ("solve-classical", cmd_solve_classical, "colorings with values in I"),
        ("solve-matroid", cmd_solve_matroid, "matroid colorings; degenerate frameworks are perturbed"),
        ("solve-vector", cmd_solve_vector, "vector colorings in the nonnegative orthant"),
        ("solve-hedgehog", cmd_solve_hedgehog, "hedgehog colorings"),
    ]:
        s = sub.add_parser(name, help=help_)
        s.add_argument("--input", required=True)
        s.add_argument("--mode", choices=["brute", "path"], default="brute")
        s.add_argument("--index", type=int, default=0, help="start the walk at the facet I - i")
        s.set_defaults(fn=fn)

    for name, fn, oracles, eps, grid in [
        ("brouwer", cmd_brouwer, simplex.BROUWER_ORACLES, 1e-3, 64),
        ("kakutani", cmd_kakutani, simplex.KAKUTANI_ORACLES, 1e-2, 256),
    ]:
        s = sub.add_parser(name, help=f"{name} fixed point approximation on the standard simplex")
        s.add_argument("--oracle", choices=sorted(oracles) + ["constant"], required=True)
        s.add_argument("--n", type=int, required=True)
        s.add_argument("--eps", type=float, default=eps)
        s.add_argument("--max-grid", type=int, default=grid)
        s.add_argument("--point", help="comma-separated p/q coordinates for the constant oracle")
        s.set_defaults(fn=fn)

    s = sub.add_parser("freudenthal", help="Freudenthal triangulation of the scaled simplex")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--N", type=int, required=True)
    s.add_argument("--count", action="store_true", help="only report the number of cells")
    s.add_argument("--verify", action="store_true", help="also compare with the I-cell enumerations")
    s.set_defaults(fn=cmd_freudenthal)

    s = sub.add_parser("intersect", help="mod-2 intersection number of two chains in R^n")
    s.add_argument("--input", required=True)
    s.set_defaults(fn=cmd_intersect)

    s = sub.add_parser("check-invariants", help="run the property suites with a fixed seed")
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--sizes", choices=sorted(SIZES), default="default")
    s.add_argument("--mutate", choices=MUTATIONS)
    s.add_argument("--only", help="comma-separated suite names")
    s.set_defaults(fn=cmd_check_invariants)
    return p


def run(argv: Sequence[str] | None = None, out=None) -> int:
    out = sys.stdout if out is None else out
    try:
        args = build_parser().parse_args(argv)
        doc = args.fn(args)
    except UsageError as e:
        print(f"usage error: {e}", file=sys.stderr)
        return 1
    except InputError as e:
        print(dumps(e.diagnostic), file=out)
        return 2
    except (SolverError, om.MatroidError, OrderError, FamilyError, rn.GeneralPositionError) as e:
        print(dumps({"error": str(e), "kind": type(e).__name__}), file=out)
        return 2
    except (KeyError, TypeError, ValueError) as e:
        print(dumps({"error": f"invalid input: {e}", "kind": type(e).__name__}), file=out)
        return 2
    print(dumps(doc), file=out)
    return 0


def main() -> None:
    sys.exit(run())
