"""Command-line front end.

Subcommands: ``eval``, ``gram``, ``expand``, ``laurent``, ``verify`` and
``table``.  Output files are UTF-8 JSON or CSV; identical flags (and seed)
produce byte-identical files.  Exit codes: 0 success, 1 verification
failure, 2 usage error.  ``--plot`` additionally renders a PNG figure next
to the delimited output.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from pathlib import Path

import numpy as np

from . import __version__, basis, calculus, quadrature, series, verify
from .basis import BasisFamily, BasisIndex
from .funcspec import SpecParseError, parse_function_spec
from .quaternion import Point3

USAGE_ERROR = 2


def _write_text(path: Path, text: str) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(text, encoding="utf-8")


def _dump_json(doc) -> str:
    return json.dumps(doc, indent=2) + "\n"


def _labels(indices: list[BasisIndex]) -> list[str]:
    return [f"{i.k}:{i.l}" for i in indices]


def _parse_point(text: str) -> Point3:
    parts = text.split(",")
    if len(parts) != 3:
        raise argparse.ArgumentTypeError("point must be 'x0,x1,x2'")
    try:
        return Point3(*(float(p) for p in parts))
    except ValueError as err:
        raise argparse.ArgumentTypeError(str(err)) from None


def _gram_rule(domain: str, n_max: int, orders):
    if orders is not None:
        n_r, n_theta, n_phi = orders
        if domain == "ball":
            return quadrature.build_rule("ball", n_r, n_theta, n_phi)
        if domain == "sphere":
            return quadrature.build_rule("sphere", 1, n_theta, n_phi)
        return quadrature.build_rule(
            "shell", n_r, n_theta, n_phi, r_in=1.0,
            r_out=quadrature.EXTERIOR_RADIUS, reciprocal_radial=True,
        )
    if domain == "ball":
        return quadrature.ball_rule(n_max)
    if domain == "sphere":
        return quadrature.sphere_rule(2 * (n_max + 2) + 4)
    return quadrature.exterior_rule(2 * (n_max + 2))


def cmd_gram(args) -> int:
    indices = verify.gram_indices(args.domain, args.n_max)
    rule = _gram_rule(args.domain, args.n_max, args.orders)
    gram = verify.gram_matrix(indices, rule)
    labels = _labels(indices)
    magnitude = np.sqrt(np.sum(gram**2, axis=-1))
    off = magnitude - np.diag(np.diag(magnitude))
    max_off = float(off.max(initial=0.0))

    out = Path(args.output or f"gram_{args.domain}.{args.format}")
    if args.format == "json":
        doc = {
            "domain": args.domain,
            "n_max": args.n_max,
            "labels": labels,
            "entries": [[list(gram[i, j]) for j in range(len(labels))] for i in range(len(labels))],
            "max_off_diagonal": max_off,
        }
        _write_text(out, _dump_json(doc))
    else:
        # CSV cells carry the scalar part; entries of basis Gram matrices
        # are real up to quadrature noise (full values live in the JSON form)
        lines = [",".join([""] + labels)]
        for i, row_label in enumerate(labels):
            row = [row_label] + [repr(float(gram[i, j, 0])) for j in range(len(labels))]
            lines.append(",".join(row))
        _write_text(out, "\n".join(lines) + "\n")
    if args.plot:
        from . import plotting

        plotting.save_gram_heatmap(labels, magnitude, str(out.with_suffix(".png")))
    print(f"gram[{args.domain}] {len(labels)}x{len(labels)} -> {out}")
    print(f"max off-diagonal magnitude: {max_off:.3e}")
    return 0


def cmd_eval(args) -> int:
    idx = BasisIndex(args.k, args.l)
    try:
        idx.validate()
    except ValueError as err:
        print(f"error: {err}", file=sys.stderr)
        return USAGE_ERROR
    family = BasisFamily(args.family)
    fn = basis.basis_function(idx, family)
    rows = []
    for point in args.point:
        value = fn(point)
        rows.append(
            {
                "point": [point.x0, point.x1, point.x2],
                "value": [value.a0, value.a1, value.a2, value.a3],
            }
        )
    out = Path(args.output or f"eval.{args.format}")
    if args.format == "json":
        doc = {"family": args.family, "k": args.k, "l": args.l, "values": rows}
        _write_text(out, _dump_json(doc))
    else:
        lines = ["x0,x1,x2,c0,c1,c2,c3"]
        for row in rows:
            lines.append(",".join(repr(v) for v in row["point"] + row["value"]))
        _write_text(out, "\n".join(lines) + "\n")
    print(f"eval {args.family}({args.k},{args.l}) at {len(rows)} points -> {out}")
    return 0


def _expansion_and_errors(args, f):
    if args.kind == "fourier":
        rule = quadrature.ball_rule(2 * args.n_max)
        expansion = series.fourier_expand(f, args.n_max, rule)
        err_rule = quadrature.ball_rule(2 * args.n_max)
    elif args.kind == "taylor":
        sph = quadrature.sphere_rule(2 * (args.n_max + 2) + 16, radius=args.rho)
        expansion = series.taylor_coeffs(f, args.n_max, args.rho, sph)
        err_rule = quadrature.ball_rule(2 * args.n_max)
    else:
        k_lo, k_hi = args.k_min, args.k_max
        deg = max(abs(k_lo), abs(k_hi)) + 2
        sph = quadrature.sphere_rule(2 * deg + 16, radius=args.rho)
        expansion = series.laurent_expand(f, args.rho, k_lo, k_hi, rule=sph)
        err_rule = quadrature.shell_rule(
            2 * deg, 0.8 * args.rho, 1.2 * args.rho
        )
    errors = series.truncation_errors(f, expansion, err_rule)
    return expansion, errors


def cmd_expand(args) -> int:
    try:
        f = parse_function_spec(args.spec)
    except SpecParseError as err:
        print(f"error: {err}", file=sys.stderr)
        return USAGE_ERROR
    expansion, errors = _expansion_and_errors(args, f)
    base = Path(args.output or f"expansion_{args.kind}")
    if base.suffix == ".json":
        base = base.with_suffix("")
    stem = base.parent / base.name
    series_path = Path(f"{stem}.json")
    _write_text(series_path, expansion.dumps())
    errors_path = Path(f"{stem}.errors.csv")
    lines = ["truncation_degree,l2_residual"] + [
        f"{level},{repr(res)}" for level, res in errors
    ]
    _write_text(errors_path, "\n".join(lines) + "\n")
    if args.plot:
        from . import plotting

        plotting.save_decay_curve(
            [level for level, _ in errors],
            [res for _, res in errors],
            f"{stem}.png",
        )
    kept = len(expansion.to_json_dict()["entries"])
    print(f"{args.kind} expansion of '{args.spec}': {kept} nonzero coefficients -> {series_path}")
    if kept:
        top = max(expansion.coeffs, key=lambda i: float(expansion.coeffs[i].norm()))
        print(f"largest coefficient |c| = {float(expansion.coeffs[top].norm()):.6g} at (k={top.k}, l={top.l})")
    print(f"truncation errors -> {errors_path}")
    return 0


def cmd_verify(args) -> int:
    checks = verify.run_suite(n_max=args.n_max, seed=args.seed, deep=args.deep)
    report = verify.report_dict(args.n_max, args.seed, args.deep, checks)
    out = Path(args.output or "verify_report.json")
    _write_text(out, _dump_json(report))
    if args.plot:
        from . import plotting

        plotting.save_residual_chart(
            [c.name for c in checks],
            [c.residual for c in checks],
            [c.tolerance for c in checks],
            str(out.with_suffix(".png")),
        )
    width = max(len(c.name) for c in checks)
    for c in checks:
        status = "PASS" if c.passed else "FAIL"
        print(f"{status}  {c.name:<{width}}  residual {c.residual:.3e}  tol {c.tolerance:.1e}")
    print(f"report -> {out}")
    if not report["all_pass"]:
        print("verification FAILED", file=sys.stderr)
        return 1
    print("all checks passed")
    return 0


def cmd_table(args) -> int:
    rows = []
    for k in range(-(args.n_max + 2), args.n_max + 1):
        if k == -1:
            continue
        for l in range(abs(k + 1)):
            idx = BasisIndex(k, l)
            d_phi = calculus.basis_derivative(idx, BasisFamily.PHI)
            d_app = calculus.basis_derivative(idx, BasisFamily.APPELL)
            try:
                p_phi = calculus.basis_primitive(idx, BasisFamily.PHI)
                prim_target, prim_factor = f"{k + 1}:{l}", p_phi.factor
            except calculus.NoPrimitiveError:
                prim_target, prim_factor = "", math.nan
            rows.append(
                {
                    "k": k,
                    "l": l,
                    "derivative_target": f"{k - 1}:{l}" if d_phi.target else "",
                    "derivative_factor_phi": d_phi.factor,
                    "derivative_factor_appell": d_app.factor if d_app.target else 0.0,
                    "primitive_target": prim_target,
                    "primitive_factor_phi": prim_factor,
                    "kernel_depth": calculus.kernel_depth(idx) if k >= 0 else -1,
                    "appell_to_phi_factor": basis.family_convert(k, l),
                }
            )
    out = Path(args.output or f"operator_table.{args.format}")
    if args.format == "json":
        _write_text(out, _dump_json({"n_max": args.n_max, "rows": rows}))
    else:
        fields = list(rows[0].keys())
        lines = [",".join(fields)]
        for row in rows:
            lines.append(
                ",".join(
                    repr(v) if isinstance(v, float) else str(v) for v in row.values()
                )
            )
        _write_text(out, "\n".join(lines) + "\n")
    print(f"operator table ({len(rows)} indices) -> {out}")
    return 0


def _orders(text: str) -> tuple[int, int, int]:
    parts = text.split(",")
    if len(parts) != 3:
        raise argparse.ArgumentTypeError("orders must be 'n_r,n_theta,n_phi'")
    return tuple(int(p) for p in parts)  # type: ignore[return-value]


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="monogenica",
        description="Solid spherical monogenic bases, series expansions and verification.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gram", help="Gram matrix of basis functions over a domain")
    p.add_argument("--domain", choices=("ball", "sphere", "exterior"), default="ball")
    p.add_argument("--n-max", type=int, default=4)
    p.add_argument("--orders", type=_orders, default=None, help="n_r,n_theta,n_phi override")
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.add_argument("--output", default=None)
    p.add_argument("--plot", action="store_true", help="also render a PNG heatmap")
    p.set_defaults(fn=cmd_gram)

    p = sub.add_parser("eval", help="evaluate one basis function at points")
    p.add_argument("--family", choices=("phi", "appell"), default="appell")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--l", type=int, required=True)
    p.add_argument(
        "--point",
        type=_parse_point,
        action="append",
        required=True,
        help="x0,x1,x2 (repeatable)",
    )
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.add_argument("--output", default=None)
    p.set_defaults(fn=cmd_eval)

    for name in ("expand", "laurent"):
        p = sub.add_parser(
            name,
            help=(
                "expand a test function into series coefficients"
                if name == "expand"
                else "shorthand for expand --kind laurent"
            ),
        )
        if name == "expand":
            p.add_argument("--kind", choices=("fourier", "taylor", "laurent"), default="fourier")
        p.add_argument("--spec", required=True, help="e.g. \"A(2,1)\" or \"kernel(0,0,1.5)\"")
        p.add_argument("--n-max", type=int, default=6)
        p.add_argument("--rho", type=float, default=1.0)
        p.add_argument("--k-min", type=int, default=-6)
        p.add_argument("--k-max", type=int, default=6)
        p.add_argument("--output", default=None)
        p.add_argument("--plot", action="store_true", help="also render the decay curve")
        if name == "laurent":
            p.set_defaults(fn=cmd_expand, kind="laurent")
        else:
            p.set_defaults(fn=cmd_expand)

    p = sub.add_parser("verify", help="run the verification suite")
    p.add_argument("--n-max", type=int, default=6)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--deep", action="store_true", help="wider index ranges (slower)")
    p.add_argument("--output", default=None)
    p.add_argument("--plot", action="store_true", help="also render the residual chart")
    p.set_defaults(fn=cmd_verify)

    p = sub.add_parser("table", help="operator factor table over the index lattice")
    p.add_argument("--n-max", type=int, default=6)
    p.add_argument("--format", choices=("json", "csv"), default="csv")
    p.add_argument("--output", default=None)
    p.set_defaults(fn=cmd_table)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "n_max", 0) > 64:
        print("error: n_max must be <= 64", file=sys.stderr)
        return USAGE_ERROR
    if getattr(args, "rho", 1.0) <= 0:
        print("error: rho must be positive", file=sys.stderr)
        return USAGE_ERROR
    try:
        return args.fn(args)
    except (ValueError, OSError) as err:
        print(f"error: {err}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
