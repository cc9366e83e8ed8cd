"""curvectl: command-line front end for the curve toolkit.

Exit codes: 0 success, 1 mathematical failure (dependent basis,
degenerate configuration, unsupported operation), 2 usage error.
CURVECTL_TOL="atol,rtol" overrides the default comparison tolerances.
"""

import argparse
import json
import sys

from . import svgplot
from .bernstein import degree_elevate
from .curves import (
    HGammaCurve,
    make_interpolating_curve,
    midpoint_subdivision,
    polygon_deviation,
    subdivide,
)
from .errors import HGammaError
from .families import FamilySpec
from .service import basis_table, serve, validation_payload
from .verify import SUITES, run_suite, suite_passed


def _parse_family(args):
    spec = args.family
    if spec.strip().startswith("{"):
        return FamilySpec.from_json(json.loads(spec))
    inner = None
    if getattr(args, "inner", None):
        if args.inner.strip().startswith("{"):
            inner = FamilySpec.from_json(json.loads(args.inner))
        else:
            inner = FamilySpec(kind=args.inner, d_param=getattr(args, "inner_d", None))
    return FamilySpec(kind=spec, d_param=getattr(args, "d", None), inner=inner)


def _family_flags(parser):
    parser.add_argument("--family", required=True,
                        help="family kind or family JSON")
    parser.add_argument("--d", type=float, default=None,
                        help="d parameter (discrete kinds, exp_weighted weight)")
    parser.add_argument("--inner", default=None,
                        help="inner family for exp_weighted (kind or JSON)")
    parser.add_argument("--inner-d", dest="inner_d", type=float, default=None,
                        help="d parameter of the inner family")


def _emit(text, path):
    if path in (None, "-"):
        sys.stdout.write(text)
        if not text.endswith("\n"):
            sys.stdout.write("\n")
    else:
        with open(path, "w") as fh:
            fh.write(text)


def _dump(obj):
    return json.dumps(obj, indent=2, sort_keys=True)


def _load_curve(path):
    if path == "-":
        raw = sys.stdin.read()
    else:
        with open(path) as fh:
            raw = fh.read()
    return HGammaCurve.from_json(json.loads(raw))


def cmd_validate(args):
    family = _parse_family(args)
    payload = validation_payload(family, args.n, args.h, args.a, args.b)
    _emit(_dump(payload), args.output)
    return 0 if payload["valid"] else 1


def cmd_basis(args):
    family = _parse_family(args)
    table = basis_table(family, args.n, args.h, args.a, args.b, args.samples,
                        unity=args.unity)
    if args.format == "json":
        _emit(_dump(table), args.output)
    elif args.format == "csv":
        n_funcs = len(table["B"][0])
        header = ["x"] + [f"B{k}" for k in range(n_funcs)]
        if args.unity:
            header.append("unity_sum")
        lines = [",".join(header)]
        for i, x in enumerate(table["x"]):
            row = [repr(x)] + [repr(v) for v in table["B"][i]]
            if args.unity:
                row.append(repr(table["unity_sum"][i]))
            lines.append(",".join(row))
        _emit("\n".join(lines) + "\n", args.output)
    else:
        svg = svgplot.basis_chart(
            table["x"], table["B"],
            title=f"{family.kind} basis n={args.n} h={args.h}")
        _emit(svg, args.output)
    return 0


def cmd_curve(args):
    actions = [name for name in
               ("eval", "sample", "subdivide", "midpoint", "elevate", "interpolate")
               if getattr(args, name) not in (None, False)]
    if len(actions) != 1:
        raise UsageError(f"exactly one action required, got {actions or 'none'}")
    action = actions[0]
    curve = _load_curve(args.input)

    if action == "interpolate":
        built = make_interpolating_curve(
            curve.family, curve.n, curve.h, curve.interval[0], curve.controls)
        _emit(_dump({"curve": built.to_json()}), args.output)
        return 0
    if action == "eval":
        point = curve.eval(args.eval)
        _emit(_dump({"x": args.eval, "point": [float(v) for v in point]}), args.output)
        return 0
    if action == "sample":
        xs, pts = curve.sample(args.sample)
        if args.format == "csv":
            header = ["x"] + [f"p{i}" for i in range(curve.dim)]
            lines = [",".join(header)]
            for x, p in zip(xs, pts):
                lines.append(",".join([repr(float(x))] + [repr(float(v)) for v in p]))
            _emit("\n".join(lines) + "\n", args.output)
        elif args.format == "svg":
            _emit(svgplot.curve_chart(curve, title="curve"), args.output)
        else:
            _emit(_dump({"x": [float(x) for x in xs],
                         "points": [[float(v) for v in p] for p in pts]}), args.output)
        return 0
    if action == "subdivide":
        left, right = subdivide(curve, args.subdivide)
        if args.format == "svg":
            polys = [left.controls, right.controls]
            _emit(svgplot.curve_chart(curve, polygons=polys, title="subdivision"),
                  args.output)
        else:
            _emit(_dump({"left": left.to_json(), "right": right.to_json()}), args.output)
        return 0
    if action == "midpoint":
        tree = midpoint_subdivision(curve, args.midpoint)
        if args.format == "svg":
            polys = [seg.controls for seg in tree.segments]
            _emit(svgplot.curve_chart(curve, polygons=polys, title="midpoint subdivision"),
                  args.output)
        else:
            payload = tree.to_json()
            payload["deviation"] = polygon_deviation(curve, args.midpoint)
            _emit(_dump(payload), args.output)
        return 0
    # elevate
    elevated = degree_elevate(curve)
    _emit(_dump({"curve": elevated.to_json()}), args.output)
    return 0


def cmd_verify(args):
    family = _parse_family(args) if args.family else None
    report = run_suite(args.suite, seed=args.seed, family=family, n=args.n)
    for check in report["checks"]:
        status = "PASS" if check["passed"] else "FAIL"
        print(f"[{report['suite']}] {check['name']}: "
              f"max_residual={check['max_residual']:.3e} "
              f"tol={check['tolerance']:.3e} {status}")
    if "dependent_h" in report:
        shown = ", ".join(f"{h:.4f}" for h in report["dependent_h"]) or "none"
        print(f"[{report['suite']}] dependent h values: {shown}")
    return 0 if suite_passed(report) else 1


def cmd_serve(args):
    serve(args.port)
    return 0


class UsageError(Exception):
    pass


def build_parser():
    parser = argparse.ArgumentParser(
        prog="curvectl",
        description="evaluate, subdivide, verify and serve shifted-basis curves")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="independence + guard report")
    _family_flags(p)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--h", type=float, required=True)
    p.add_argument("--a", type=float, default=None)
    p.add_argument("--b", type=float, default=None)
    p.add_argument("-o", "--output", default=None)
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("basis", help="sample basis functions")
    _family_flags(p)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--h", type=float, required=True)
    p.add_argument("--a", type=float, required=True)
    p.add_argument("--b", type=float, required=True)
    p.add_argument("--samples", type=int, default=64)
    p.add_argument("--unity", action="store_true",
                   help="add partition-of-unity weighted sum")
    p.add_argument("--format", choices=("csv", "json", "svg"), default="json")
    p.add_argument("-o", "--output", default=None)
    p.set_defaults(func=cmd_basis)

    p = sub.add_parser("curve", help="operate on a curve JSON file")
    p.add_argument("--input", required=True, help="curve JSON path or - for stdin")
    p.add_argument("--eval", type=float, default=None)
    p.add_argument("--sample", type=int, default=None)
    p.add_argument("--subdivide", type=float, default=None)
    p.add_argument("--midpoint", type=int, default=None)
    p.add_argument("--elevate", action="store_true")
    p.add_argument("--interpolate", action="store_true",
                   help="reinterpret controls as interpolation targets over [a, a-nh]")
    p.add_argument("--format", choices=("json", "csv", "svg"), default="json")
    p.add_argument("-o", "--output", default=None)
    p.set_defaults(func=cmd_curve)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("--suite", choices=SUITES, required=True)
    p.add_argument("--seed", type=int, default=42)
    p.add_argument("--family", default=None,
                   help="family for independence-grid (kind or JSON)")
    p.add_argument("--d", type=float, default=None)
    p.add_argument("--inner", default=None)
    p.add_argument("--inner-d", dest="inner_d", type=float, default=None)
    p.add_argument("--n", type=int, default=None)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("serve", help="run the JSON service")
    p.add_argument("--port", type=int, default=8321)
    p.set_defaults(func=cmd_serve)
    return parser


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    try:
        return args.func(args)
    except HGammaError as exc:
        payload = {
            "error": exc.code,
            "detail": str(exc),
            "guards": [v.to_json() for v in exc.violations],
        }
        print(json.dumps(payload, indent=2, sort_keys=True))
        return 1
    except UsageError as exc:
        print(f"curvectl: {exc}", file=sys.stderr)
        return 2
    except (OSError, json.JSONDecodeError, ValueError) as exc:
        print(f"curvectl: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
