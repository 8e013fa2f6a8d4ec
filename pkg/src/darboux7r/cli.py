"""Command line front end.

Subcommands: factor, verify, linkage, simulate, trace, mobility, plot.
Rational parameters are passed as strings like "3/2" (use --b=-1/2 for
negative fractions).  Exit codes: 0 success, 1 verification failure,
2 usage or parameter error.
"""

from __future__ import annotations

import argparse
import json
import math
import random
import sys
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from . import serialize, svgplot
from .darboux import (
    DarbouxParams,
    Factorization,
    circular_translation_check,
    darboux_c,
    factor_fi,
    factor_fii,
    factor_fiii,
    factor_fiv,
    fiv_companion_fi,
    t_grid,
)
from .errors import KinematicsError, SingularChoice
from .linkage import (
    Linkage,
    build_linkage,
    mobility_at,
    parallel_groups,
    simulate,
    substructure_report,
    trace_point,
)
from .motionpoly import MotionPoly
from .scalars import parse_scalar

SINGLE_TYPES = ("FI", "FII", "FIII", "FIV")
PAIR_TYPES = ("FI+FIII", "FI+FII", "FIV")


def _rational(text: str):
    return parse_scalar(text)


def _point3(text: str) -> Tuple[float, float, float]:
    parts = text.split(",")
    if len(parts) != 3:
        raise ValueError(f"expected x,y,z but got {text!r}")
    return tuple(float(Fraction(p.strip())) for p in parts)


def _add_param_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--a", type=_rational, default=Fraction(1), help="Darboux parameter a (rational, nonzero)")
    p.add_argument("--b", type=_rational, default=Fraction(2), help="Darboux parameter b (rational)")
    p.add_argument("--c", type=_rational, default=Fraction(0), help="Darboux parameter c (rational)")
    p.add_argument("--x", type=_rational, default=Fraction(0), help="free parameter x (FIII only)")
    p.add_argument("--y", type=_rational, default=Fraction(0), help="free parameter y (FIII only)")


def _add_output_flags(p: argparse.ArgumentParser, formats: Sequence[str]) -> None:
    p.add_argument("--out", default=None, help="output path (default: stdout)")
    p.add_argument("--format", choices=list(formats), default=formats[0])


def _add_sampling_flags(p: argparse.ArgumentParser, default_samples: int) -> None:
    p.add_argument("--samples", type=int, default=default_samples)
    p.add_argument("--t-min", dest="t_min", type=float, default=None)
    p.add_argument("--t-max", dest="t_max", type=float, default=None)


def _build_factorization(args) -> Factorization:
    params = DarbouxParams(args.a, args.b, args.c)
    if args.type == "FI":
        return factor_fi(params)
    if args.type == "FII":
        return factor_fii(params)
    if args.type == "FIII":
        return factor_fiii(params, args.x, args.y)
    return factor_fiv()


def _build_linkage(args) -> Linkage:
    if args.type == "FIV":
        return build_linkage(fiv_companion_fi(), factor_fiv())
    params = DarbouxParams(args.a, args.b, args.c)
    if args.type == "FI+FIII":
        return build_linkage(factor_fi(params), factor_fiii(params, args.x, args.y))
    return build_linkage(factor_fi(params), factor_fii(params))


def _sample_ts(args) -> List[float]:
    if args.samples < 1:
        raise KinematicsError("--samples must be at least 1")
    if (args.t_min is None) != (args.t_max is None):
        raise KinematicsError("--t-min and --t-max must be given together")
    if args.t_min is not None:
        if args.samples == 1:
            return [0.5 * (args.t_min + args.t_max)]
        step = (args.t_max - args.t_min) / (args.samples - 1)
        return [args.t_min + i * step for i in range(args.samples)]
    return list(t_grid(args.samples))


def _emit(text: str, out: Optional[str]) -> None:
    if out is None or out == "-":
        sys.stdout.write(text)
    else:
        with open(out, "w") as fh:
            fh.write(text)


def cmd_factor(args) -> int:
    f = _build_factorization(args)
    _emit(serialize.dump_json(serialize.factorization_to_json(f)), args.out)
    return 0


def _residual_abs_max(diff: MotionPoly):
    worst = 0
    for coeff in diff.coeffs:
        for v in coeff.coeffs():
            worst = max(worst, abs(v))
    return worst


def _verify_one(f: Factorization) -> Tuple[bool, object]:
    diff = f.product() - f.cofactor.to_motion() * f.target()
    residual = _residual_abs_max(diff)
    return residual == 0, residual


def _random_params(rng: random.Random) -> DarbouxParams:
    def q() -> Fraction:
        return Fraction(rng.randint(-9, 9), rng.randint(1, 9))

    a = q()
    while a == 0:
        a = q()
    return DarbouxParams(a, q(), q())


def _random_factorization(kind: str, rng: random.Random) -> Factorization:
    while True:
        params = _random_params(rng)
        try:
            if kind == "FI":
                return factor_fi(params)
            if kind == "FII":
                return factor_fii(params)
            if kind == "FIV":
                return factor_fiv()
            x = Fraction(rng.randint(-9, 9), rng.randint(1, 9))
            y = Fraction(rng.randint(-9, 9), rng.randint(1, 9))
            return factor_fiii(params, x, y)
        except SingularChoice:
            continue


def cmd_verify(args) -> int:
    if args.from_file is not None:
        with open(args.from_file) as fh:
            f = serialize.factorization_from_json(json.load(fh))
        ok, residual = _verify_one(f)
        print(f"max |residual coefficient|: {residual}")
        if ok:
            print(f"PASS: {f.label} factors multiply to cofactor * C exactly")
            return 0
        print(f"FAIL: {f.label} product differs from cofactor * C")
        return 1

    if args.random is not None:
        rng = random.Random(args.seed)
        failures = 0
        for _ in range(args.random):
            f = _random_factorization(args.type, rng)
            ok, _ = _verify_one(f)
            failures += 0 if ok else 1
        n = args.random
        if failures == 0:
            print(f"PASS: {args.type} exact for {n}/{n} random parameter sets (seed {args.seed})")
            return 0
        print(f"FAIL: {args.type} failed on {failures}/{n} random parameter sets (seed {args.seed})")
        return 1

    f = _build_factorization(args)
    ok, residual = _verify_one(f)
    print(f"max |residual coefficient|: {residual}")
    if ok:
        print(f"PASS: {f.label} factors multiply to cofactor * C exactly")
        return 0
    print(f"FAIL: {f.label} product differs from cofactor * C")
    return 1


def cmd_linkage(args) -> int:
    linkage = _build_linkage(args)
    groups = parallel_groups(linkage)
    sub = substructure_report(linkage)
    home = mobility_at(linkage, 0.0)
    doc = {
        "linkage": serialize.linkage_to_json(linkage),
        "parallel_groups": [list(g) for g in groups],
        "four_bar_runs": [list(r) for r in sub.four_bar_runs],
        "sarrus": [
            {"fixed_joint": s.fixed_joint, "arc_a": list(s.arc_a), "arc_b": list(s.arc_b)}
            for s in sub.sarrus
        ],
        "mobility_home": serialize.mobility_to_json(home),
    }
    _emit(serialize.dump_json(doc), args.out)
    return 0


def cmd_simulate(args) -> int:
    linkage = _build_linkage(args)
    samples = simulate(linkage, _sample_ts(args))
    if args.format == "csv":
        _emit(serialize.samples_to_csv(samples), args.out)
    else:
        _emit(serialize.dump_json(serialize.samples_to_json(samples)), args.out)
    return 0


def cmd_trace(args) -> int:
    linkage = _build_linkage(args)
    ts = _sample_ts(args)
    points = args.point or [(0.0, 0.0, 0.0)]
    reports = [
        trace_point(linkage, pt, ts, plane_rtol=args.tol) for pt in points
    ]
    docs = [serialize.trajectory_to_json(r) for r in reports]
    _emit(serialize.dump_json(docs[0] if len(docs) == 1 else docs), args.out)
    return 0


def _generic_ts(args) -> List[float]:
    """Seeded generic parameter draws (uniform in the rotation angle).

    Instantaneous mobility is a statement about generic configurations;
    deterministic grids can land exactly on the isolated special postures
    of a kinematotropic linkage, where the rank legitimately drops.
    """
    if args.t_min is not None or args.t_max is not None:
        return _sample_ts(args)
    if args.samples < 1:
        raise KinematicsError("--samples must be at least 1")
    rng = random.Random(args.seed)
    return [math.tan(rng.uniform(-math.pi, math.pi) / 2) for _ in range(args.samples)]


def cmd_mobility(args) -> int:
    linkage = _build_linkage(args)
    reports = [mobility_at(linkage, t, tol=args.tol) for t in _generic_ts(args)]
    if args.format == "csv":
        _emit(serialize.mobility_to_csv(reports), args.out)
    else:
        _emit(serialize.dump_json([serialize.mobility_to_json(r) for r in reports]), args.out)
    return 0


def cmd_plot(args) -> int:
    linkage = _build_linkage(args)
    ts = _sample_ts(args)
    point = args.point[0] if args.point else None
    svg = svgplot.render_linkage(linkage, ts, view=args.view, trace_point=point)
    _emit(svg, args.out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="darboux7r",
        description="Factor the general Darboux motion and analyze the resulting 7R linkages.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("factor", help="construct one factorization, emit JSON")
    p.add_argument("--type", choices=SINGLE_TYPES, required=True)
    _add_param_flags(p)
    _add_output_flags(p, ["json"])
    p.set_defaults(func=cmd_factor)

    p = sub.add_parser("verify", help="check a factorization multiplies back exactly")
    p.add_argument("--type", choices=SINGLE_TYPES, default=None)
    _add_param_flags(p)
    p.add_argument("--from-file", dest="from_file", default=None, help="verify a stored factorization JSON")
    p.add_argument("--random", type=int, default=None, metavar="N", help="verify N random parameter sets")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("linkage", help="build a closed 7R linkage, emit JSON with certificate")
    p.add_argument("--type", choices=PAIR_TYPES, default="FI+FIII")
    _add_param_flags(p)
    _add_output_flags(p, ["json"])
    p.set_defaults(func=cmd_linkage)

    p = sub.add_parser("simulate", help="sample closed configurations over a parameter range")
    p.add_argument("--type", choices=PAIR_TYPES, default="FI+FIII")
    _add_param_flags(p)
    _add_sampling_flags(p, default_samples=9)
    _add_output_flags(p, ["csv", "json"])
    p.set_defaults(func=cmd_simulate)

    p = sub.add_parser("trace", help="classify the orbit of a coupler point")
    p.add_argument("--type", choices=PAIR_TYPES, default="FI+FIII")
    _add_param_flags(p)
    _add_sampling_flags(p, default_samples=24)
    p.add_argument("--point", type=_point3, action="append", default=None, metavar="X,Y,Z")
    p.add_argument("--tol", type=float, default=1e-9, help="relative plane-fit tolerance")
    _add_output_flags(p, ["json"])
    p.set_defaults(func=cmd_trace)

    p = sub.add_parser("mobility", help="instantaneous mobility at sampled configurations")
    p.add_argument("--type", choices=PAIR_TYPES, default="FI+FIII")
    _add_param_flags(p)
    _add_sampling_flags(p, default_samples=10)
    p.add_argument("--seed", type=int, default=0,
                   help="seed for the default generic samples (ignored with --t-min/--t-max)")
    p.add_argument("--tol", type=float, default=1e-8, help="relative rank tolerance")
    _add_output_flags(p, ["json", "csv"])
    p.set_defaults(func=cmd_mobility)

    p = sub.add_parser("plot", help="render sampled configurations as an SVG grid")
    p.add_argument("--type", choices=PAIR_TYPES, default="FI+FIII")
    _add_param_flags(p)
    _add_sampling_flags(p, default_samples=9)
    p.add_argument("--view", choices=["xy", "xz", "yz"], default="xy")
    p.add_argument("--point", type=_point3, action="append", default=None, metavar="X,Y,Z",
                   help="overlay the orbit of this coupler point")
    p.add_argument("--out", default=None, help="output path (default: stdout)")
    p.set_defaults(func=cmd_plot)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "verify" and args.type is None and args.from_file is None:
        parser.error("verify needs --type or --from-file")
    try:
        return args.func(args)
    except KinematicsError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
