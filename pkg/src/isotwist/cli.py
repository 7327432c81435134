"""Command-line front end.

Exit status: 0 when every check passes, 1 when a check fails, 2 on usage,
parse or domain errors.  Reports go to stdout as JSON; diagnostics to stderr.
"""
from __future__ import annotations

import argparse
import json
import math
import sys
from fractions import Fraction

from .corpus import random_pairs
from .errors import DomainError, ParseError
from .expr import evaluate_text
from .graded import GeneratorTable, load_table, torus_table
from .numeric import QuadratureSpec, convergence_study, is_monotone
from .rieffel import EQUIV_TOL, JMap, equivalence_check, first_order_study, poisson_bracket
from .twist import Convention, DeformationParams, parse_theta, sphere_relations, torus_relations

QUADRATURE_TOL = 1e-2
MIN_ORDER = 1.9
DEFAULT_THETAS = ("0", "1/4", "1/3", "0.1379")


def _theta(text: str):
    try:
        return parse_theta(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"invalid theta {text!r}") from None


def _pair(text: str) -> tuple[int, int]:
    try:
        a, b = (int(x) for x in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected 'n1,n2', got {text!r}") from None
    return a, b


def _floats(text: str) -> list[float]:
    try:
        return [float(x) for x in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated numbers, got {text!r}") from None


def _jsonable(x):
    if isinstance(x, Fraction):
        return x.numerator if x.denominator == 1 else str(x)
    if isinstance(x, float) and not math.isfinite(x):
        return None
    return x


def _emit(obj) -> None:
    print(json.dumps(obj, separators=(",", ":"), ensure_ascii=False, default=str))


def _table(args) -> GeneratorTable:
    return load_table(args.table) if args.table else torus_table()


def _params(args) -> DeformationParams:
    return DeformationParams(args.theta, Convention(args.convention))


def cmd_eval(args) -> int:
    table = _table(args)
    _emit(evaluate_text(args.expr, table, _params(args)).to_json())
    return 0


def cmd_equiv(args) -> int:
    theta = args.theta
    if args.a is not None or args.b is not None:
        if args.a is None or args.b is None:
            raise DomainError("--a and --b must be given together")
        table = _table(args)
        p = DeformationParams(theta)
        pairs = [(evaluate_text(args.a, table, p), evaluate_text(args.b, table, p))]
    else:
        pairs = random_pairs(args.random, args.seed, max_terms=args.max_terms, max_degree=args.max_degree)
    reports = [equivalence_check(a, b, theta) for a, b in pairs]
    ok = all(reports)
    _emit(
        {
            "theta": _jsonable(DeformationParams(theta).theta),
            "mode": "exact" if all(r.exact for r in reports) else "float",
            "pairs": len(reports),
            "max_residual": max(r.residual for r in reports),
            "tolerance": EQUIV_TOL,
            "passed": ok,
        }
    )
    return 0 if ok else 1


def cmd_poisson(args) -> int:
    table = _table(args)
    if args.J is not None:
        J = JMap.parse(args.J)
    else:
        J = JMap.theta_map(args.theta)
    p = DeformationParams(0)
    a = evaluate_text(args.a, table, p)
    b = evaluate_text(args.b, table, p)
    study = first_order_study(a, b, J)
    ok = study.order >= MIN_ORDER
    _emit(
        {
            "J": [_jsonable(x) for x in J.entries],
            "skew": J.is_skew(),
            "bracket": poisson_bracket(a, b, J).to_json(),
            "first_order": study.rows(),
            "order": _jsonable(study.order),
            "passed": ok,
        }
    )
    return 0 if ok else 1


def cmd_quadrature(args) -> int:
    spec = None
    if args.halfwidth is not None or args.step is not None:
        maxdeg = max(map(abs, (*args.da, *args.db)))
        base = QuadratureSpec.default(args.epsilon[0], float(args.theta), maxdeg)
        spec = QuadratureSpec(args.epsilon[0], args.halfwidth or base.halfwidth, args.step or base.step)
    rows, exact = convergence_study(args.da, args.db, args.theta, args.epsilon, spec)
    monotone = is_monotone(rows)
    final = rows[-1].error
    ok = monotone and final <= QUADRATURE_TOL
    _emit(
        {
            "theta": _jsonable(args.theta),
            "da": list(args.da),
            "db": list(args.db),
            "closed_form": [exact.real, exact.imag],
            "rows": [
                {"epsilon": r.epsilon, "value": [r.value.real, r.value.imag], "error": r.error} for r in rows
            ],
            "monotone": monotone,
            "final_error": final,
            "tolerance": QUADRATURE_TOL,
            "passed": ok,
        }
    )
    return 0 if ok else 1


def cmd_relations(args) -> int:
    thetas = args.theta or [parse_theta(t) for t in DEFAULT_THETAS]
    report, ok = [], True
    for th in thetas:
        p = DeformationParams(th, Convention(args.convention))
        tol = 0.0 if p.exact else EQUIV_TOL
        tr, sr = torus_relations(p), sphere_relations(p)
        passed = all(v <= tol for v in (*tr.values(), *sr.values()))
        ok &= passed
        report.append({"theta": _jsonable(p.theta), "torus": tr, "sphere": sr, "passed": passed})
    _emit({"convention": args.convention, "results": report, "passed": ok})
    return 0 if ok else 1


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="isotwist", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)

    def common(p, theta_default="0"):
        p.add_argument("--table", help="generator table JSON (default: torus U, V)")
        p.add_argument("--theta", type=_theta, default=_theta(theta_default), help="real or p/q")
        p.add_argument("--convention", choices=[c.value for c in Convention], default="right")

    p = sub.add_parser("eval", help="evaluate an expression")
    common(p)
    p.add_argument("expr")
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("equiv", help="twist product vs Rieffel product for J_theta")
    common(p)
    p.add_argument("--random", type=int, default=100, help="number of random pairs")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--max-terms", type=int, default=20)
    p.add_argument("--max-degree", type=int, default=8)
    p.add_argument("--a", help="left operand expression (instead of a random corpus)")
    p.add_argument("--b", help="right operand expression")
    p.set_defaults(func=cmd_equiv)

    p = sub.add_parser("poisson", help="Poisson bracket and first-order expansion study")
    common(p)
    p.add_argument("--J", help="row-major 'a,b;c,d' (default: J_theta)")
    p.add_argument("a")
    p.add_argument("b")
    p.set_defaults(func=cmd_poisson)

    p = sub.add_parser("quadrature", help="regularized oscillatory integral vs closed form")
    p.add_argument("--theta", type=_theta, required=True)
    p.add_argument("--da", type=_pair, required=True)
    p.add_argument("--db", type=_pair, required=True)
    p.add_argument("--epsilon", type=_floats, default=[1e-2, 1e-3, 1e-4])
    p.add_argument("--halfwidth", type=float)
    p.add_argument("--step", type=float)
    p.set_defaults(func=cmd_quadrature)

    p = sub.add_parser("relations", help="noncommutative torus and theta-sphere relations")
    p.add_argument("--theta", type=_theta, action="append", help="repeatable; default 0, 1/4, 1/3, 0.1379")
    p.add_argument("--convention", choices=[c.value for c in Convention], default="right")
    p.set_defaults(func=cmd_relations)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ParseError, DomainError, OSError, json.JSONDecodeError) as exc:
        print(f"isotwist {args.command}: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
