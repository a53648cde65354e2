"""Command-line entry point.

Exit codes: 0 success, 1 a property or identity failed, 2 usage or input
error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import __version__
from .curve import CurveParams, add_with_case, parse_curve_descriptor
from .errors import EcsumError, NonGeneric
from .identity import IDENTITY_NAMES, MERSENNE61, prove
from .identity.prover import STATEMENTS, check_identity
from .multisum import cofactors, iterated_sum, multisum
from .serialize import curve_from_json, curve_to_json, parse_points, point_from_json, point_to_json
from .suites import SUITES, PointSource
from .symsum3 import check_generic, slope_sum, sum3_from_coeffs, triple_coeffs

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2


class InputError(Exception):
    def __init__(self, message: str, hypothesis: str | None = None):
        super().__init__(message)
        self.hypothesis = hypothesis


def _curve(text: str | None) -> CurveParams:
    if not text:
        raise InputError("--curve is required, e.g. --curve Fp:10007,a=1,b=1")
    return CurveParams.parse(text)


def _points(args, E: CurveParams, count: int | None = None):
    if not args.points:
        raise InputError("--points is required")
    pts = parse_points(args.points, E.field)
    if count is not None and len(pts) != count:
        raise InputError(f"expected {count} points, got {len(pts)}")
    return pts


def cmd_add(args):
    E = _curve(args.curve)
    P, Q = _points(args, E, 2)
    case, R = add_with_case(P, Q, E)
    report = {"curve": curve_to_json(E), "case": case, "result": point_to_json(R)}
    return EXIT_OK, report, str(R)


def cmd_sum3(args):
    E = _curve(args.curve)
    P1, P2, P3 = _points(args, E, 3)
    check_generic(P1, P2, P3, E)
    coeffs = triple_coeffs(P1, P2, P3)
    P4 = sum3_from_coeffs((P1, P2, P3), coeffs)
    alpha, alpha_tilde = slope_sum(P1, P2, P3, E)
    report = {
        "x4": str(P4.x),
        "y4": str(P4.y),
        "V": str(coeffs.V),
        "c0": str(coeffs.c0),
        "c1": str(coeffs.c1),
        "c2": str(coeffs.c2),
        "alpha": str(alpha),
        "alpha_tilde": str(alpha_tilde),
    }
    human = f"P4 = {P4}\nV = {coeffs.V}, c0 = {coeffs.c0}, c1 = {coeffs.c1}, c2 = {coeffs.c2}"
    return EXIT_OK, report, human


def _sumn_input(args):
    if args.input:
        try:
            data = json.loads(Path(args.input).read_text())
        except (OSError, json.JSONDecodeError) as exc:
            raise InputError(f"cannot read {args.input}: {exc}") from exc
        if not isinstance(data, dict) or "points" not in data or "curve" not in data:
            raise InputError("input JSON needs 'curve' and 'points'")
        E = curve_from_json(data["curve"])
        return E, [point_from_json(p, E.field) for p in data["points"]]
    E = _curve(args.curve)
    return E, _points(args, E)


def cmd_sumn(args):
    E, pts = _sumn_input(args)
    if len(pts) < 2:
        raise InputError("sumn needs at least two points")
    try:
        P = multisum(pts, E)
        method = "closed-form"
    except NonGeneric:
        if not args.fallback:
            raise
        P = iterated_sum(pts, E)
        method = "iterated"
    try:
        cof = [str(c) for c in cofactors(pts).c]
    except NonGeneric:
        cof = None
    report = {
        "x": None if P.is_infinity else str(P.x),
        "y": None if P.is_infinity else str(P.y),
        "point": point_to_json(P),
        "cofactors": cof,
        "method": method,
    }
    return EXIT_OK, report, f"{P} ({method})"


def cmd_check(args):
    field, coeffs = parse_curve_descriptor(args.curve or "Fp:10007")
    curve = None
    if coeffs:
        if set(coeffs) != {"a", "b"}:
            raise InputError("give both a= and b=, or neither for random curves")
        curve = CurveParams.build(field, coeffs["a"], coeffs["b"])
    try:
        source = PointSource(field, curve)
    except ValueError as exc:
        raise InputError(str(exc)) from exc
    trials = args.trials if args.trials is not None else 100
    if trials < 1:
        raise InputError("--trials must be >= 1")
    run = SUITES[args.suite]
    if args.suite in ("multisum", "vanishing"):
        if not 2 <= args.n_min <= args.n_max:
            raise InputError("need 2 <= --n-min <= --n-max")
        report = run(source, trials, args.seed, range(args.n_min, args.n_max + 1))
    else:
        report = run(source, trials, args.seed)
    out = report.to_json()
    human = f"{args.suite}: {report.passed}/{report.trials} passed on {out['curve']}"
    for f in out["failures"]:
        human += f"\n  trial {f['trial']}: {f['detail']}"
    return (EXIT_OK if report.ok else EXIT_FAIL), out, human


def cmd_prove(args):
    name = args.identity
    if args.without_relations:
        if name not in STATEMENTS:
            raise InputError(f"--without-relations needs one of {sorted(STATEMENTS)}")
        lhs, rhs = STATEMENTS[name].build(False)
        verdict = {
            "identity": name,
            "mode": "exact",
            "result": check_identity(lhs, rhs, False),
            "trials": None,
            "prime": None,
            "relations": False,
        }
    else:
        trials = args.trials if args.trials is not None else 20
        verdict = prove(name, args.mode, args.timeout, trials, args.prime, args.seed).to_json()
    status = "holds" if verdict["result"] else "FAILS"
    human = f"{verdict['identity']}: {status} ({verdict['mode']})"
    return (EXIT_OK if verdict["result"] else EXIT_FAIL), verdict, human


def _global_flags(parser: argparse.ArgumentParser, suppress: bool) -> None:
    # accepted before or after the subcommand; the subcommand copy only
    # overrides when given
    def default(value):
        return argparse.SUPPRESS if suppress else value

    parser.add_argument(
        "--curve", default=default(None), help='e.g. "Fp:10007,a=1,b=1" or "Q,a=0,b=17"'
    )
    parser.add_argument("--seed", type=int, default=default(0))
    parser.add_argument("--trials", type=int, default=default(None))
    parser.add_argument(
        "--json", action="store_true", default=default(False), help="emit a JSON report"
    )


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    _global_flags(common, suppress=True)

    parser = argparse.ArgumentParser(prog="ecsum", description=__doc__.splitlines()[0])
    _global_flags(parser, suppress=False)
    parser.add_argument("--version", action="version", version=f"ecsum {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("add", parents=[common], help="add two points")
    p.add_argument("--points", help='"(x,y);(x,y)"')
    p.set_defaults(func=cmd_add)

    p = sub.add_parser("sum3", parents=[common], help="symmetric three-point sum")
    p.add_argument("--points", help='"(x,y);(x,y);(x,y)"')
    p.set_defaults(func=cmd_sum3)

    p = sub.add_parser("sumn", parents=[common], help="n-point sum from cofactors")
    p.add_argument("--points")
    p.add_argument("--input", help="JSON file with 'curve' and 'points'")
    p.add_argument(
        "--fallback", action="store_true", help="use iterated addition for non-generic input"
    )
    p.set_defaults(func=cmd_sumn)

    p = sub.add_parser("check", parents=[common], help="randomized property suites")
    p.add_argument("suite", choices=sorted(SUITES))
    p.add_argument("--n-min", type=int, default=2)
    p.add_argument("--n-max", type=int, default=8)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("prove", parents=[common], help="check a symbolic identity")
    p.add_argument("identity", help=f"one of {', '.join(IDENTITY_NAMES)} or detm:<n>")
    p.add_argument("--mode", choices=["auto", "exact", "schwartz-zippel"], default="auto")
    p.add_argument("--timeout", type=float, default=60.0)
    p.add_argument("--prime", type=int, default=MERSENNE61)
    p.add_argument(
        "--without-relations",
        action="store_true",
        help="exact check with the curve relations switched off",
    )
    p.set_defaults(func=cmd_prove)
    return parser


def _emit(args, payload, human, stream):
    if args.json:
        stream.write(json.dumps(payload, sort_keys=True) + "\n")
    else:
        stream.write(human + "\n")


def run_command(argv: list[str] | None = None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        code, payload, human = args.func(args)
    except (InputError, NonGeneric, EcsumError, ValueError) as exc:
        error = {"error": type(exc).__name__, "message": str(exc)}
        hyp = getattr(exc, "hypothesis", None)
        if hyp:
            error["hypothesis"] = hyp
        if isinstance(exc, InputError):
            error["error"] = "usage"
        _emit(args, error, f"error: {exc}", stderr)
        return EXIT_USAGE
    _emit(args, payload, human, stdout)
    return code


def main() -> None:
    sys.exit(run_command())


if __name__ == "__main__":
    main()
