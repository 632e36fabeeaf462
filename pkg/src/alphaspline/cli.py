"""Command line entry point.

Exit codes: 0 success, 1 validation error (bad flags, numbers or constraints),
2 internal error.
"""

from __future__ import annotations

import argparse
import sys
import traceback
from pathlib import Path

from . import checks
from .alpha import Alpha, Span
from .basis import BasisSpec
from .curve import ControlPolygon, CurveSpec
from .emit import emit_csv, emit_svg
from .figures import DEFAULT_SAMPLES, file_label, load_bundled, load_configs, write_figures
from .knots import make_knot_vector, parse_number
from .sampling import alpha_column, merge_series, sample_basis, sample_curve, sample_phi


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _alpha(text: str) -> Alpha:
    try:
        return Alpha.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _pair(text: str) -> tuple[float, float]:
    parts = text.split(",")
    if len(parts) != 2:
        raise argparse.ArgumentTypeError(f"expected 'a,b', got {text!r}")
    try:
        return parse_number(parts[0]), parse_number(parts[1])
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _positive_samples(text: str) -> int:
    try:
        n = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"malformed sample count {text!r}") from None
    if n < 2:
        raise argparse.ArgumentTypeError("samples must be >= 2")
    return n


def read_polygon(path) -> ControlPolygon:
    """Control points from a CSV file, one ``x,y[,z]`` per line; ``#`` starts a comment."""
    rows = []
    for line in Path(path).read_text().splitlines():
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        try:
            rows.append([parse_number(tok) for tok in line.split(",")])
        except ValueError:
            # tolerate a header row
            if rows:
                raise
    if len({len(r) for r in rows}) > 1:
        raise ValueError(f"{path}: points have mixed dimensions")
    return ControlPolygon(rows)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="alphaspline", description="Index-alpha rational B-splines")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(p, curve_like=True):
        p.add_argument("--alpha", action="append", type=_alpha, default=[],
                       help="index, 'inf' for the classical case; repeatable")
        p.add_argument("--samples", type=_positive_samples, default=DEFAULT_SAMPLES)
        p.add_argument("--out", help="output file (stem when several files are written)")
        p.add_argument("--format", choices=("csv", "svg"), default="csv")
        if curve_like:
            p.add_argument("--knots", help="comma-separated knot vector, e.g. 0,0,0,1,2,3,3,3")
            p.add_argument("--degree", type=int)
            p.add_argument("--config", help="TOML figure configuration file")

    p_phi = sub.add_parser("phi", help="sample the parametrization on a span")
    common(p_phi, curve_like=False)
    p_phi.add_argument("--span", type=_pair, default=(0.0, 1.0), help="a,b")
    p_phi.add_argument("--domain", type=_pair, help="lo,hi sampling range (default: the span)")

    p_basis = sub.add_parser("basis", help="sample the basis functions")
    common(p_basis)

    p_curve = sub.add_parser("curve", help="sample a curve")
    common(p_curve)
    p_curve.add_argument("--polygon", help="CSV file of control points")

    p_fig = sub.add_parser("figures", help="render figure configurations")
    p_fig.add_argument("--config", action="append", default=[],
                       help="TOML file; repeatable (default: all bundled figures)")
    p_fig.add_argument("--out", default="figures_out", help="output directory")

    p_check = sub.add_parser("check", help="run the invariant suites")
    p_check.add_argument("suites", nargs="*", metavar="SUITE",
                         help=f"subset of suites to run (default: all): {', '.join(checks.SUITES)}")
    p_check.add_argument("--out", help="write unimodality warnings to this file")
    return parser


def _write(data: bytes, path: str | None):
    if path is None:
        sys.stdout.buffer.write(data)
        sys.stdout.flush()
    else:
        Path(path).parent.mkdir(parents=True, exist_ok=True)
        Path(path).write_bytes(data)


def _encode(series, fmt: str, style: str, title: str) -> bytes:
    return emit_csv(series) if fmt == "csv" else emit_svg(series, style=style, title=title)


def _require(args, *names):
    missing = [f"--{n}" for n in names if getattr(args, n) is None]
    if missing:
        raise UsageError(f"missing {', '.join(missing)}")
    if not args.alpha:
        raise UsageError("at least one --alpha is required")


def _run_config(args, kind: str) -> int:
    configs = [c for c in load_configs(args.config) if c.kind == kind]
    if not configs:
        raise UsageError(f"{args.config}: no {kind} figures")
    out_dir = Path(args.out) if args.out else Path(".")
    for path in write_figures(configs, out_dir):
        print(path)
    return 0


def cmd_phi(args) -> int:
    if not args.alpha:
        raise UsageError("at least one --alpha is required")
    span = Span(*args.span)
    domain = args.domain or args.span
    series = merge_series([sample_phi(a, span, domain, args.samples) for a in args.alpha])
    _write(_encode(series, args.format, "graph", "phi"), args.out)
    return 0


def cmd_basis(args) -> int:
    if args.config:
        return _run_config(args, "basis")
    _require(args, "knots", "degree")
    knots = make_knot_vector(args.knots)
    specs = [BasisSpec(knots, args.degree, a) for a in args.alpha]
    if len(specs) == 1:
        series = sample_basis(specs[0], args.samples)
        _write(_encode(series, args.format, "graph", alpha_column(specs[0].alpha)), args.out)
        return 0
    stem = args.out or "basis"
    if stem.endswith("." + args.format):
        stem = stem[: -len(args.format) - 1]
    for spec in specs:
        path = f"{stem}_alpha_{file_label(spec.alpha)}.{args.format}"
        series = sample_basis(spec, args.samples)
        _write(_encode(series, args.format, "graph", alpha_column(spec.alpha)), path)
        print(path)
    return 0


def cmd_curve(args) -> int:
    if args.config:
        return _run_config(args, "curve")
    _require(args, "knots", "degree", "polygon")
    knots = make_knot_vector(args.knots)
    polygon = read_polygon(args.polygon)
    curves = [sample_curve(CurveSpec(BasisSpec(knots, args.degree, a), polygon), args.samples)
              for a in args.alpha]
    series = merge_series(curves, [alpha_column(a) for a in args.alpha])
    _write(_encode(series, args.format, "parametric", "curve"), args.out)
    return 0


def cmd_figures(args) -> int:
    configs = [c for p in args.config for c in load_configs(p)] if args.config else load_bundled()
    written = write_figures(configs, args.out)
    print(f"wrote {len(written)} files to {args.out}")
    return 0


def cmd_check(args) -> int:
    unknown = [s for s in args.suites if s not in checks.SUITES]
    if unknown:
        raise UsageError(f"unknown suite(s): {', '.join(unknown)}")
    results = checks.run_all(args.suites or None)
    for r in results:
        print(r.line())
    warnings = [w for r in results for w in r.warnings]
    if args.out:
        Path(args.out).write_text("".join(w + "\n" for w in warnings))
    failed = sum(not r.passed for r in results)
    print(f"{len(results) - failed}/{len(results)} suites passed")
    return 0 if failed == 0 else 1


COMMANDS = {"phi": cmd_phi, "basis": cmd_basis, "curve": cmd_curve,
            "figures": cmd_figures, "check": cmd_check}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return COMMANDS[args.command](args)
    except (UsageError, ValueError, IndexError, OSError) as exc:
        print(f"alphaspline: error: {exc}", file=sys.stderr)
        return 1
    except Exception:
        traceback.print_exc()
        return 2


if __name__ == "__main__":
    sys.exit(main())
