"""Command-line front end.

Verbs: parse, implicitize, puiseux, singular, area, damper-table, certify,
verify. Exit codes: 0 success, 1 domain error (message names the violated
condition), 2 usage error.
"""

from __future__ import annotations

import argparse
import math
import re
import sys
from dataclasses import dataclass
from fractions import Fraction

from . import certify as certify_mod
from . import curves as curves_mod
from . import quadrature as quad
from .algebra import Interval, as_fraction
from .curves import BezierControlPolygon, ParametricCurve, Point, validate_centered
from .errors import OvalkitError
from .parsing import parse_polynomial, parse_rational_function, render_polynomial
from .puiseux import expand_branch, render_series

_PARAM_RE = re.compile(
    r"^\s*x\s*=\s*(?P<x>[^;]+);\s*y\s*=\s*(?P<y>[^;]+);\s*(?P<var>[A-Za-z_]\w*)\s+in\s*"
    r"\[\s*(?P<lo>[^,\]]+)\s*,\s*(?P<hi>[^,\]]+)\s*\]\s*$"
)
_POINT_RE = re.compile(r"\(\s*([^,()]+)\s*,\s*([^,()]+)\s*\)")


def parse_curve_text(text: str) -> ParametricCurve:
    """Read a curve description.

    Accepted forms (a leading 'param'/'bezier' keyword is optional for the
    first form and mandatory for control polygons):

        param x=<expr(t)>; y=<expr(t)>; t in [a,b]
        bezier (x0,y0) (x1,y1) ...
    """
    body = text.strip()
    if body.startswith("bezier"):
        pts = [
            Point(as_fraction(a), as_fraction(b))
            for a, b in _POINT_RE.findall(body[len("bezier") :])
        ]
        return curves_mod.bezier_to_parametric(BezierControlPolygon(tuple(pts)))
    if body.startswith("param"):
        body = body[len("param") :]
    m = _PARAM_RE.match(body)
    if not m:
        raise OvalkitError(
            "curve text must look like 'x=<expr>; y=<expr>; t in [a,b]' or 'bezier (x0,y0) ...'"
        )
    var = m.group("var")
    g = parse_rational_function(m.group("x"), var)
    f = parse_rational_function(m.group("y"), var)
    interval = Interval(as_fraction(m.group("lo").strip()), as_fraction(m.group("hi").strip()))
    return ParametricCurve(g, f, interval)


@dataclass(frozen=True)
class TableRow:
    t_P: Fraction
    alpha_deg: float
    S2: float
    S2_exact: Fraction


def _fmt(x: float) -> str:
    return f"{x:.12g}"


def damper_rows(cp, t_range: Interval, steps: int) -> list[TableRow]:
    if steps < 2:
        raise OvalkitError("damper table needs at least 2 steps")
    s2 = quad.free_inlet_function(cp)
    slope = quad.slope_function(cp)
    rows = []
    for k in range(steps):
        t = t_range.lo + (t_range.hi - t_range.lo) * Fraction(k, steps - 1)
        den = slope.den.evaluate(t)
        if den == 0:
            alpha = 90.0
        else:
            alpha = math.degrees(math.atan(float(slope.num.evaluate(t) / den)))
        value = s2.evaluate(t)
        rows.append(TableRow(t_P=t, alpha_deg=alpha, S2=float(value), S2_exact=value))
    return rows


def emit_damper_table(cp, t_range: Interval, steps: int) -> str:
    lines = ["t_P,alpha_deg,S2,S2_exact"]
    for row in damper_rows(cp, t_range, steps):
        lines.append(
            f"{_fmt(float(row.t_P))},{_fmt(row.alpha_deg)},{_fmt(row.S2)},{row.S2_exact}"
        )
    return "\n".join(lines) + "\n"


def _svg_plot(xs: list[float], ys: list[float], xlabel: str, ylabel: str) -> str:
    width, height, margin = 640, 480, 60
    x0, x1 = min(xs), max(xs)
    y0, y1 = min(ys), max(ys)
    if x1 == x0:
        x1 = x0 + 1
    if y1 == y0:
        y1 = y0 + 1

    def sx(x: float) -> float:
        return margin + (x - x0) / (x1 - x0) * (width - 2 * margin)

    def sy(y: float) -> float:
        return height - margin - (y - y0) / (y1 - y0) * (height - 2 * margin)

    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">',
        f'<rect width="{width}" height="{height}" fill="white"/>',
        f'<line x1="{margin}" y1="{height - margin}" x2="{width - margin}" '
        f'y2="{height - margin}" stroke="black"/>',
        f'<line x1="{margin}" y1="{margin}" x2="{margin}" y2="{height - margin}" stroke="black"/>',
    ]
    for k in range(5):
        xt = x0 + (x1 - x0) * k / 4
        yt = y0 + (y1 - y0) * k / 4
        parts.append(
            f'<line x1="{sx(xt):.1f}" y1="{height - margin}" x2="{sx(xt):.1f}" '
            f'y2="{height - margin + 5}" stroke="black"/>'
        )
        parts.append(
            f'<text x="{sx(xt):.1f}" y="{height - margin + 20}" font-size="11" '
            f'text-anchor="middle">{xt:.3g}</text>'
        )
        parts.append(
            f'<line x1="{margin - 5}" y1="{sy(yt):.1f}" x2="{margin}" y2="{sy(yt):.1f}" stroke="black"/>'
        )
        parts.append(
            f'<text x="{margin - 8}" y="{sy(yt):.1f}" font-size="11" '
            f'text-anchor="end" dominant-baseline="middle">{yt:.3g}</text>'
        )
    points = " ".join(f"{sx(x):.2f},{sy(y):.2f}" for x, y in zip(xs, ys))
    parts.append(f'<polyline points="{points}" fill="none" stroke="steelblue" stroke-width="2"/>')
    parts.append(
        f'<text x="{width / 2:.0f}" y="{height - 15}" font-size="13" text-anchor="middle">{xlabel}</text>'
    )
    parts.append(f'<text x="18" y="{margin - 20}" font-size="13">{ylabel}</text>')
    parts.append("</svg>")
    return "\n".join(parts) + "\n"


def _read_input(args, flag_value: str | None) -> str:
    if flag_value:
        return flag_value
    if getattr(args, "infile", None):
        with open(args.infile, "r", encoding="utf-8") as fh:
            return fh.read()
    raise OvalkitError("no input given (use the flag or --in <path>)")


def _curve_from_args(args) -> ParametricCurve:
    return parse_curve_text(_read_input(args, getattr(args, "param", None)))


def _centered_origin(curve: ParametricCurve):
    return validate_centered(curve, Point(Fraction(0), Fraction(0)))


def _write_out(args, text: str):
    out = getattr(args, "out", None)
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _exact_with_decimal(value: Fraction) -> str:
    return f"{value} = {_fmt(float(value))}"


def _cmd_parse(args) -> int:
    variables = tuple(v.strip() for v in args.vars.split(",") if v.strip())
    poly = parse_polynomial(_read_input(args, args.expr), variables)
    print(render_polynomial(poly))
    return 0


def _cmd_implicitize(args) -> int:
    curve = _curve_from_args(args)
    if not curves_mod.convexity_probe(curve):
        print("warning: boundary fails a numeric convexity probe", file=sys.stderr)
    print(render_polynomial(curves_mod.implicitize(curve)))
    return 0


def _cmd_puiseux(args) -> int:
    poly = parse_polynomial(_read_input(args, args.curve), ("x", "y"))
    series = expand_branch(poly, args.terms)
    text = render_series(series)
    if not series.is_exact:
        text += " + ..."
    print(text)
    return 0


def _cmd_singular(args) -> int:
    poly = parse_polynomial(_read_input(args, args.curve), ("x", "y"))
    points = curves_mod.rational_singular_points(poly)
    if not points:
        print("no rational singular points")
    for p in points:
        print(f"({p.x}, {p.y})")
    return 0


def _cmd_area(args) -> int:
    curve = _curve_from_args(args)
    if args.chord is not None:
        cp = _centered_origin(curve)
        result = quad.origin_chord_segment_area(cp, as_fraction(args.chord))
    elif args.vertical is not None:
        t1_s, t2_s = args.vertical.split(",")
        cp = _centered_origin(curve)
        result = quad.vertical_segment_area(cp, as_fraction(t1_s), as_fraction(t2_s))
    else:
        result = quad.total_area(curve)
    print(_exact_with_decimal(result.value))
    return 0


def _cmd_damper_table(args) -> int:
    curve = _curve_from_args(args)
    cp = _centered_origin(curve)
    lo_s, hi_s = args.range.split(",")
    t_range = Interval(as_fraction(lo_s), as_fraction(hi_s))
    rows = damper_rows(cp, t_range, args.steps)
    _write_out(args, emit_damper_table(cp, t_range, args.steps))
    if args.svg:
        svg = _svg_plot(
            [float(r.t_P) for r in rows], [r.S2 for r in rows], "t_P", "S2"
        )
        with open(args.svg, "w", encoding="utf-8") as fh:
            fh.write(svg)
    return 0


def _cmd_certify(args) -> int:
    curve = _curve_from_args(args)
    cp = _centered_origin(curve)
    if args.family == "pencil":
        cert = certify_mod.pencil_certificate(cp)
    else:
        cert = certify_mod.vertical_certificate(cp)
    sys.stdout.write(certify_mod.serialize_certificate(cert))
    return 0


def _cmd_verify(args) -> int:
    if args.cert_file:
        with open(args.cert_file, "r", encoding="utf-8") as fh:
            cert_text = fh.read()
    elif args.cert:
        cert_text = args.cert
    else:
        raise OvalkitError("no certificate given (--cert or --cert-file)")
    cert = certify_mod.parse_certificate(cert_text)
    curve = _curve_from_args(args)
    report = certify_mod.verify_certificate(
        cert, curve, n_samples=args.samples, tol=args.tol
    )
    verdict = "PASS" if report.passed else "FAIL"
    print(f"sampled lines: {len(report.samples)}")
    print(f"max relative residual: {report.max_relative_residual:.3e}")
    print(f"tolerance: {report.tolerance:.3e} -> {verdict}")
    return 0 if report.passed else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ovalkit",
        description="Exact segment areas, branch expansions and squarability "
        "certificates for algebraic ovals.",
    )
    sub = parser.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("parse", help="parse a polynomial and print its canonical form")
    p.add_argument("--expr", help="polynomial expression")
    p.add_argument("--vars", default="x,y", help="comma-separated variable order")
    p.add_argument("--in", dest="infile", help="read the expression from a file")
    p.set_defaults(func=_cmd_parse)

    p = sub.add_parser("implicitize", help="implicit equation of a parametric curve")
    p.add_argument("--param", help="curve text: x=<expr>; y=<expr>; t in [a,b] (or bezier ...)")
    p.add_argument("--in", dest="infile", help="read the curve text from a file")
    p.set_defaults(func=_cmd_implicitize)

    p = sub.add_parser("puiseux", help="fractional power-series branch at the origin")
    p.add_argument("--curve", help="implicit polynomial in x and y")
    p.add_argument("--terms", type=int, default=5, help="number of series terms")
    p.add_argument("--in", dest="infile", help="read the polynomial from a file")
    p.set_defaults(func=_cmd_puiseux)

    p = sub.add_parser("singular", help="rational singular points of an implicit curve")
    p.add_argument("--curve", help="implicit polynomial in x and y")
    p.add_argument("--in", dest="infile", help="read the polynomial from a file")
    p.set_defaults(func=_cmd_singular)

    p = sub.add_parser("area", help="exact total or segment area")
    p.add_argument("--param", help="curve text")
    p.add_argument("--in", dest="infile", help="read the curve text from a file")
    p.add_argument("--chord", help="chord parameter t0 (origin-centered curves)")
    p.add_argument("--vertical", help="parameters t1,t2 of a vertical-line segment")
    p.set_defaults(func=_cmd_area)

    p = sub.add_parser("damper-table", help="free-section table S2(t_P) as CSV")
    p.add_argument("--param", help="curve text")
    p.add_argument("--in", dest="infile", help="read the curve text from a file")
    p.add_argument("--range", required=True, help="t_P range as 'a,b' (rationals)")
    p.add_argument("--steps", type=int, required=True, help="number of rows")
    p.add_argument("--out", help="write the CSV here instead of stdout")
    p.add_argument("--svg", help="also write an SVG plot of S2 vs t_P")
    p.set_defaults(func=_cmd_damper_table)

    p = sub.add_parser("certify", help="generate a squarability certificate")
    p.add_argument("--param", help="curve text")
    p.add_argument("--in", dest="infile", help="read the curve text from a file")
    p.add_argument(
        "--family",
        choices=("pencil", "vertical"),
        default="pencil",
        help="line family: chords through the center, or vertical lines",
    )
    p.set_defaults(func=_cmd_certify)

    p = sub.add_parser("verify", help="verify a certificate against sampled areas")
    p.add_argument("--cert", help="certificate text (polynomial + roles line)")
    p.add_argument("--cert-file", help="read the certificate from a file")
    p.add_argument("--param", help="curve text")
    p.add_argument("--in", dest="infile", help="read the curve text from a file")
    p.add_argument("--samples", type=int, default=50, help="number of sampled lines")
    p.add_argument("--tol", type=float, default=1e-6, help="residual tolerance")
    p.set_defaults(func=_cmd_verify)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return args.func(args)
    except OvalkitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (ValueError, ZeroDivisionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
