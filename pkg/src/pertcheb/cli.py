"""Command-line front end.

Subcommands: table, zeros, intersect, gershgorin, plot, verify.
Exit codes: 0 success, 1 verification failure, 2 usage error, 3 numeric
failure.  All output is deterministic for fixed flags.
"""

from __future__ import annotations

import argparse
import io
import json
import sys
from fractions import Fraction
from pathlib import Path

from . import figures, verify
from .connection import (
    cc_canonical_dilatation,
    cc_canonical_translation,
    cc_closed_dilatation,
    cc_closed_translation,
    cc_recurrence,
    format_affine_symbolic,
    render_table_text,
)
from .core import (
    PerturbationSpec,
    chebyshev_spec,
    closed_form_zeros,
    generate,
    perturbed_spec,
)
from .errors import NonPositiveGamma, PertChebError, PrecisionExhausted
from .intersections import intersection_points
from .scalars import parse_rational
from .zeros import all_roots, gershgorin, origin_report

EXIT_OK = 0
EXIT_VERIFY_FAIL = 1
EXIT_USAGE = 2
EXIT_NUMERIC = 3


def parse_param_list(text: str) -> list[Fraction]:
    """Comma list of rationals and integer ranges: '-5..-1,1..5' or '1/2,3'."""
    values: list[Fraction] = []
    for chunk in text.split(","):
        chunk = chunk.strip()
        if not chunk:
            continue
        if ".." in chunk:
            lo_text, hi_text = chunk.split("..", 1)
            lo, hi = int(lo_text), int(hi_text)
            if hi < lo:
                raise ValueError(f"empty range {chunk!r}")
            values.extend(Fraction(v) for v in range(lo, hi + 1))
        else:
            values.append(parse_rational(chunk))
    if not values:
        raise ValueError("no parameter values given")
    return values


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pertcheb",
        description="Exact analysis of perturbed second-kind Chebyshev polynomials",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, default_format):
        p.add_argument("--format", choices=["text", "json", "csv", "svg"],
                       default=default_format, help="output format")
        p.add_argument("--out", type=Path, default=None,
                       help="write to this file instead of stdout")
        p.add_argument("--bits", type=int, default=60,
                       help="interval precision target in bits")
        p.add_argument("--tol", type=float, default=1e-13,
                       help="complex root residual tolerance")

    p_table = sub.add_parser("table", help="render a connection table")
    p_table.add_argument("--kind", choices=["translation", "dilatation"],
                         required=True)
    p_table.add_argument("--r", type=int, required=True, help="perturbation order")
    p_table.add_argument("--n-max", type=int, required=True)
    p_table.add_argument("--basis", choices=["second", "canonical"],
                         default="second")
    p_table.add_argument("--method", choices=["closed", "recurrence"],
                         default="closed")
    p_table.add_argument("--param", type=parse_rational, default=None,
                         help="concrete parameter (default: formal)")
    common(p_table, "text")

    p_zeros = sub.add_parser("zeros", help="zero, origin and Gershgorin reports")
    _family_flags(p_zeros)
    p_zeros.add_argument("--n", type=int, required=True)
    common(p_zeros, "json")

    p_inter = sub.add_parser("intersect", help="interception points report")
    p_inter.add_argument("--kind", choices=["translation", "dilatation"],
                         required=True)
    p_inter.add_argument("--r", type=int, required=True)
    p_inter.add_argument("--n", type=int, required=True)
    common(p_inter, "json")

    p_gersh = sub.add_parser("gershgorin", help="Gershgorin interval union")
    _family_flags(p_gersh)
    p_gersh.add_argument("--n", type=int, required=True)
    common(p_gersh, "json")

    p_plot = sub.add_parser("plot", help="curve samples as CSV/SVG (+PNG)")
    p_plot.add_argument("--kind", choices=["translation", "dilatation"],
                        default=None)
    p_plot.add_argument("--r", type=int, default=None)
    p_plot.add_argument("--params", type=str, default=None,
                        help="parameter values, e.g. '-5..-1,1..5' or '1/2,3'")
    p_plot.add_argument("--base", choices=["second"], default=None,
                        help="plot the unperturbed family only")
    p_plot.add_argument("--n", type=int, required=True)
    p_plot.add_argument("--xmin", type=float, default=-1.2)
    p_plot.add_argument("--xmax", type=float, default=1.2)
    p_plot.add_argument("--samples", type=int, default=601)
    p_plot.add_argument("--no-figure", action="store_true",
                        help="skip the PNG companion when writing CSV")
    common(p_plot, "csv")

    p_verify = sub.add_parser("verify", help="run the verification suites")
    p_verify.add_argument("--suite", choices=sorted(verify.SUITES), default=None)
    p_verify.add_argument("--r-max", type=int, default=None)
    p_verify.add_argument("--n-max", type=int, default=None)
    common(p_verify, "text")
    return parser


def _family_flags(p) -> None:
    p.add_argument("--kind", choices=["translation", "dilatation"], default=None)
    p.add_argument("--r", type=int, default=None)
    p.add_argument("--param", type=parse_rational, default=None)
    p.add_argument("--base", choices=["second"], default=None,
                   help="use the unperturbed second-kind family")


def _perturbation_from_args(args) -> PerturbationSpec:
    if args.base == "second":
        return PerturbationSpec.translation(0, 0)
    if args.kind is None or args.r is None or args.param is None:
        raise SystemExit2("--kind, --r and --param are required without --base")
    return PerturbationSpec(args.kind, args.r, args.param)


class SystemExit2(Exception):
    """Usage error raised after argparse has already run."""


def _emit(args, text: str) -> None:
    if args.out is not None:
        args.out.write_text(text)
    else:
        sys.stdout.write(text)


def _json_dump(payload) -> str:
    return json.dumps(payload, indent=2) + "\n"


# ---------------------------------------------------------------------------
# subcommands

def cmd_table(args) -> int:
    builders = {
        ("second", "closed", "translation"): cc_closed_translation,
        ("second", "closed", "dilatation"): cc_closed_dilatation,
        ("canonical", "closed", "translation"): cc_canonical_translation,
        ("canonical", "closed", "dilatation"): cc_canonical_dilatation,
    }
    key = (args.basis, args.method, args.kind)
    if args.method == "recurrence":
        if args.basis != "second":
            raise SystemExit2("the recurrence method fills second-basis tables")
        tilde = perturbed_spec(PerturbationSpec(args.kind, args.r, args.param))
        table = cc_recurrence(tilde, chebyshev_spec("second"), args.n_max)
        table = type(table)(table.n_max, table.rows, table.basis_tag,
                            table.method_tag, args.kind, args.r)
    else:
        table = builders[key](args.r, args.n_max)
        if args.param is not None:
            table = table.instantiate(args.param)
    if args.format == "json":
        _emit(args, _json_dump(table.to_json()))
    elif args.format == "csv":
        buf = io.StringIO()
        buf.write("n," + ",".join(str(m) for m in range(args.n_max + 1)) + "\n")
        for n in range(args.n_max + 1):
            row = [format_affine_symbolic(table.entry(n, m), table.symbol)
                   for m in range(n + 1)]
            buf.write(f"{n}," + ",".join(row) + "\n")
        _emit(args, buf.getvalue())
    elif args.format == "text":
        _emit(args, render_table_text(table))
    else:
        raise SystemExit2("table supports text, json or csv output")
    return EXIT_OK


def cmd_zeros(args) -> int:
    pert = _perturbation_from_args(args)
    spec = perturbed_spec(pert)
    poly = generate(spec, args.n)[args.n]
    zero_report = (all_roots(poly, tol=args.tol, bits=args.bits)
                   if args.n >= 1 else None)
    origin = origin_report(pert, args.n)
    note = None
    try:
        region = gershgorin(spec, args.n).to_json()
    except (NonPositiveGamma, ValueError) as exc:
        region = None
        note = f"gershgorin undefined: {exc}"
    payload = {
        "degree": args.n,
        "zeros": zero_report.to_json() if zero_report else {"real": [], "complex": []},
        "origin": origin.to_json(),
        "gershgorin": region,
    }
    if note:
        payload["note"] = note
    if args.format == "json":
        _emit(args, _json_dump(payload))
    elif args.format == "text":
        lines = [f"degree {args.n}"]
        if zero_report:
            lines.append(f"real zeros ({zero_report.n_real}):")
            lines.extend(
                f"  [{iv.lo}, {iv.hi}] ~ {figures.format_float(approx)}"
                for iv, approx in zero_report.real_roots
            )
            lines.append(f"complex pairs ({zero_report.n_complex_pairs}):")
            lines.extend(
                f"  {figures.format_float(re)} +- {figures.format_float(im)}i"
                for re, im in zero_report.complex_pairs
            )
        lines.append(f"sum of zeros: {origin.sum_of_zeros}")
        lines.append(f"product of zeros: {origin.product_of_zeros}")
        lines.append(f"origin is a zero: {origin.origin_is_zero}")
        lines.append(f"gershgorin: {json.dumps(region) if region else note}")
        _emit(args, "\n".join(lines) + "\n")
    elif args.format == "csv":
        buf = io.StringIO()
        buf.write("type,lo,hi,approx_re,approx_im\n")
        if zero_report:
            for iv, approx in zero_report.real_roots:
                buf.write(
                    f"real,{iv.lo},{iv.hi},{figures.format_float(approx)},0\n"
                )
            for re, im in zero_report.complex_pairs:
                buf.write(
                    f"complex,,,{figures.format_float(re)},"
                    f"{figures.format_float(im)}\n"
                )
        _emit(args, buf.getvalue())
    else:
        raise SystemExit2("zeros supports json, text or csv output")
    return EXIT_OK


def cmd_intersect(args) -> int:
    report = intersection_points(args.kind, args.r, args.n)
    if args.format == "json":
        _emit(args, _json_dump(report.to_json()))
    elif args.format == "text":
        lines = [
            f"{report.n_distinct} distinct interception points "
            f"({args.kind}, r={args.r}, n={args.n})"
        ]
        for pt, double, common in report.points:
            flags = []
            if double:
                flags.append("double")
            if common:
                flags.append("common-zero")
            tag = f" [{', '.join(flags)}]" if flags else ""
            lines.append(
                f"  cos({pt.k}*pi/{pt.m}) ~ {figures.format_float(pt.approx())}{tag}"
            )
        lines.append(f"origin: {report.origin_class}")
        lines.append(f"predicates: {json.dumps(report.predicates)}")
        _emit(args, "\n".join(lines) + "\n")
    elif args.format == "csv":
        buf = io.StringIO()
        buf.write("k,m,x_approx,double,common,double_common\n")
        for pt, double, common in report.points:
            buf.write(
                f"{pt.k},{pt.m},{figures.format_float(pt.approx())},"
                f"{int(double)},{int(common)},{int(double and common)}\n"
            )
        _emit(args, buf.getvalue())
    else:
        raise SystemExit2("intersect supports json, text or csv output")
    return EXIT_OK


def cmd_gershgorin(args) -> int:
    pert = _perturbation_from_args(args)
    region = gershgorin(perturbed_spec(pert), args.n)
    if args.format == "json":
        _emit(args, _json_dump(region.to_json()))
    elif args.format == "text":
        parts = " u ".join(f"[{lo}, {hi}]" for lo, hi in region.intervals)
        _emit(args, parts + "\n")
    else:
        raise SystemExit2("gershgorin supports json or text output")
    return EXIT_OK


def cmd_plot(args) -> int:
    if args.base is None and (args.kind is None or args.r is None
                              or args.params is None):
        raise SystemExit2("plot needs --base second or --kind/--r/--params")
    if args.xmax <= args.xmin:
        raise SystemExit2("empty x range")
    xs = figures.sample_grid(args.xmin, args.xmax, args.samples)
    curves = []
    base_poly = generate(chebyshev_spec("second"), args.n)[args.n]
    if args.base is None:
        symbol = "mu" if args.kind == "translation" else "lam"
        neutral = Fraction(0) if args.kind == "translation" else Fraction(1)
        for value in parse_param_list(args.params):
            pert = PerturbationSpec(args.kind, args.r, value)
            poly = generate(perturbed_spec(pert), args.n)[args.n]
            regime = "neg" if value < neutral else "pos"
            curves.append(figures.Curve(
                f"{symbol}={value}",
                figures.sample_polynomial(poly.rational_coeffs(), xs),
                regime,
            ))
    curves.append(figures.Curve(
        "base", figures.sample_polynomial(base_poly.rational_coeffs(), xs), "base"
    ))
    zero_marks = [pt.approx() for pt in closed_form_zeros("second", args.n)] \
        if args.n >= 1 else []
    if args.format == "svg":
        _emit(args, figures.render_svg(xs, curves, zero_marks))
        return EXIT_OK
    if args.format != "csv":
        raise SystemExit2("plot supports csv or svg output")
    buf = io.StringIO()
    figures.write_csv(buf, xs, curves)
    _emit(args, buf.getvalue())
    if args.out is not None and not args.no_figure:
        figures.render_png(
            str(args.out.with_suffix(".png")), xs, curves, zero_marks,
            title=f"degree {args.n}",
        )
    return EXIT_OK


def cmd_verify(args) -> int:
    names = [args.suite] if args.suite else None
    buffer = io.StringIO()
    ok = verify.run_suites(names, r_max=args.r_max, n_max=args.n_max, out=buffer)
    _emit(args, buffer.getvalue())
    return EXIT_OK if ok else EXIT_VERIFY_FAIL


def _normalize_argv(argv: list[str]) -> list[str]:
    """Join '--param -1/2' style pairs so leading minus signs parse as values."""
    out: list[str] = []
    i = 0
    while i < len(argv):
        tok = argv[i]
        if tok in ("--param", "--params") and i + 1 < len(argv):
            out.append(f"{tok}={argv[i + 1]}")
            i += 2
        else:
            out.append(tok)
            i += 1
    return out


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(_normalize_argv(
        list(sys.argv[1:]) if argv is None else list(argv)
    ))
    handlers = {
        "table": cmd_table,
        "zeros": cmd_zeros,
        "intersect": cmd_intersect,
        "gershgorin": cmd_gershgorin,
        "plot": cmd_plot,
        "verify": cmd_verify,
    }
    try:
        return handlers[args.command](args)
    except SystemExit2 as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (PrecisionExhausted, NonPositiveGamma) as exc:
        print(f"numeric failure: {exc}", file=sys.stderr)
        return EXIT_NUMERIC
    except (PertChebError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
