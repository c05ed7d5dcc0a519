"""Command-line front end: every quantitative claim is a subcommand.

Exit codes: 0 = all checks passed, 1 = a mathematical check failed,
2 = usage or I/O error.  JSON output always carries the keys
{"command", "inputs", "results", "pass"}; text mode prints numbers with
10 significant digits; CSV is header-first with '.' decimals.

The environment variable BALLAVOID_TOL overrides the default quadrature
tolerance; explicit --tol flags take precedence.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys

from .concentration import best_certificate, certifying_constants, concentration_bound
from .construction import (
    CANONICAL_OFFSET,
    ConstructionParams,
    equidistance_residual,
)
from .errors import CertificateError, DomainError, NumericError
from .figure import build_figure_spec, junction_csv, render_svg
from .sampling import SamplerConfig, mc_volume_ratio, pair_audit
from .specfun import slab_fraction
from .volume import DEFAULT_TOL, maximize_a, ratio_S, ratio_table

TOL_ENV_VAR = "BALLAVOID_TOL"


def _default_tol() -> float:
    raw = os.environ.get(TOL_ENV_VAR)
    if raw is None:
        return DEFAULT_TOL
    try:
        return float(raw)
    except ValueError as exc:
        raise DomainError(f"{TOL_ENV_VAR} must be a float, got {raw!r}") from exc


def _g10(x) -> str:
    if isinstance(x, float):
        return f"{x:.10g}"
    return str(x)


def _write_out(payload: str, out: str | None) -> int:
    if out is None:
        sys.stdout.write(payload)
        return 0
    try:
        with open(out, "w", encoding="utf-8", newline="") as fh:
            fh.write(payload)
    except OSError as exc:
        print(f"error: cannot write {out}: {exc}", file=sys.stderr)
        return 2
    return 0


def _csv_escape(v) -> str:
    s = repr(v) if isinstance(v, float) else str(v)
    if any(ch in s for ch in ',"\n'):
        s = '"' + s.replace('"', '""') + '"'
    return s


def _rows_to_csv(rows: list[dict]) -> str:
    header = list(rows[0].keys())
    lines = [",".join(header)]
    for row in rows:
        lines.append(",".join(_csv_escape(row[k]) for k in header))
    return "\n".join(lines) + "\n"


def _emit(doc: dict, fmt: str, out: str | None, text_lines: list[str], csv_rows: list[dict]) -> int:
    if fmt == "json":
        payload = json.dumps(doc, indent=2) + "\n"
    elif fmt == "csv":
        payload = _rows_to_csv(csv_rows)
    else:
        payload = "\n".join(text_lines) + "\n"
    return _write_out(payload, out)


def _kv_lines(pairs: list[tuple[str, object]]) -> list[str]:
    width = max(len(k) for k, _ in pairs)
    return [f"{k.ljust(width)}  {_g10(v)}" for k, v in pairs]


# --- subcommand handlers -------------------------------------------------


def cmd_ratio(args) -> int:
    row = ratio_S(args.n, args.a, args.method, args.tol)
    ok = row.margin > 0
    doc = {
        "command": "ratio",
        "inputs": {"n": args.n, "a": args.a, "method": args.method, "tol": args.tol},
        "results": {"ratio": row.ratio, "scaled": row.scaled, "margin": row.margin},
        "pass": ok,
    }
    text = _kv_lines(
        [("n", row.n), ("a", args.a), ("method", args.method),
         ("ratio", row.ratio), ("scaled", row.scaled), ("margin", row.margin)]
    )
    csv_rows = [{"n": row.n, "ratio": row.ratio, "scaled": row.scaled, "margin": row.margin}]
    rc = _emit(doc, args.format, args.out, text, csv_rows)
    return rc if rc else (0 if ok else 1)


def cmd_table(args) -> int:
    rows = ratio_table(2, args.max_n, args.a)
    ok = all(r.margin > 0 for r in rows)
    csv_rows = [{"n": r.n, "ratio": r.ratio, "scaled": r.scaled, "margin": r.margin} for r in rows]
    doc = {
        "command": "table",
        "inputs": {"max_n": args.max_n, "a": args.a},
        "results": {"rows": csv_rows},
        "pass": ok,
    }
    text = [f"{'n':>5}  {'ratio':>16}  {'scaled':>16}  {'margin':>16}"]
    for r in rows:
        text.append(f"{r.n:>5}  {r.ratio:>16.10g}  {r.scaled:>16.10g}  {r.margin:>16.10g}")
    rc = _emit(doc, args.format, args.out, text, csv_rows)
    return rc if rc else (0 if ok else 1)


def cmd_verify(args) -> int:
    params = ConstructionParams(args.n, args.a)
    report = pair_audit(SamplerConfig(args.seed, args.pairs, params))
    mc = mc_volume_ratio(SamplerConfig(args.seed, args.samples, params))
    analytic = ratio_S(args.n, args.a).ratio
    mc_ratio = mc.log_value.linear()
    sigma = math.sqrt(analytic * (1.0 - analytic) / args.samples)
    mc_ok = abs(mc_ratio - analytic) <= 3.0 * sigma
    ok = report.violations == 0 and mc_ok
    results = {
        "pairs_tested": report.pairs_tested,
        "violations": report.violations,
        "min_cross_distance": report.min_cross_distance,
        "max_same_distance": report.max_same_distance,
        "mc_ratio": mc_ratio,
        "mc_ci99_half_width": mc.error_bound,
        "analytic_ratio": analytic,
        "mc_within_3_sigma": mc_ok,
    }
    doc = {
        "command": "verify",
        "inputs": {
            "n": args.n, "a": args.a, "pairs": args.pairs,
            "samples": args.samples, "seed": args.seed,
        },
        "results": results,
        "pass": ok,
    }
    text = _kv_lines([(k, v) for k, v in results.items()])
    for x, y, tag, dist in report.violating_pairs:
        text.append(f"VIOLATION {tag} distance={dist!r} x={x!r} y={y!r}")
        doc["results"].setdefault("violating_pairs", []).append(
            {"tag": tag, "distance": dist, "x": list(x), "y": list(y)}
        )
    rc = _emit(doc, args.format, args.out, text, [results])
    return rc if rc else (0 if ok else 1)


def cmd_optimize_a(args) -> int:
    try:
        argmax = maximize_a(args.n, args.tol)
    except NumericError as exc:
        print(f"error: optimizer failed: {exc}", file=sys.stderr)
        return 1
    canonical = CANONICAL_OFFSET
    diff = argmax - canonical
    ok = abs(diff) <= 1e-7
    results = {
        "argmax": argmax,
        "canonical": canonical,
        "difference": diff,
        "equidistance_residual": equidistance_residual(argmax),
    }
    doc = {
        "command": "optimize-a",
        "inputs": {"n": args.n, "tol": args.tol},
        "results": results,
        "pass": ok,
    }
    rc = _emit(doc, args.format, args.out, _kv_lines(list(results.items())), [results])
    return rc if rc else (0 if ok else 1)


def cmd_threshold(args) -> int:
    try:
        best = best_certificate(args.a, args.c_min, args.c_max, args.resolution)
    except CertificateError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    certs = certifying_constants(args.a, args.c_min, args.c_max, args.resolution)
    same_n = [c.c for c in certs if c.n_min == best.n_min]
    direct = ratio_table(2, best.n_min - 1, args.a) if best.n_min > 2 else []
    direct_rows = [{"n": r.n, "ratio": r.ratio, "scaled": r.scaled, "margin": r.margin} for r in direct]
    ok = best.n_min <= 15 and all(r.margin > 0 for r in direct)
    results = {
        "c": best.c,
        "n_min": best.n_min,
        "bound_factor": best.bound_factor,
        "width_ok_from": best.width_ok_from,
        "certifying_c_min": min(same_n),
        "certifying_c_max": max(same_n),
        "direct_checks": direct_rows,
    }
    doc = {
        "command": "threshold",
        "inputs": {
            "a": args.a, "c_min": args.c_min, "c_max": args.c_max,
            "resolution": args.resolution,
        },
        "results": results,
        "pass": ok,
    }
    text = _kv_lines([(k, v) for k, v in results.items() if k != "direct_checks"])
    text.append("direct checks:")
    for r in direct:
        text.append(f"  n={r.n:<3} ratio={r.ratio:.10g} scaled={r.scaled:.10g} margin={r.margin:.10g}")
    rc = _emit(doc, args.format, args.out, text, direct_rows or [results])
    return rc if rc else (0 if ok else 1)


def cmd_figure(args) -> int:
    params = ConstructionParams(2, args.a)
    spec = build_figure_spec(params, args.scale, args.epsilon)
    svg = render_svg(spec)
    rc = _write_out(svg, args.out)
    if rc:
        return rc
    base, _ = os.path.splitext(args.out)
    csv_path = base + ".points.csv"
    rc = _write_out(junction_csv(spec), csv_path)
    if rc:
        return rc
    w_seg = math.sqrt(spec.small_radius**2 - (spec.threshold - spec.offset) ** 2)
    w_chord = math.sqrt(spec.outer_radius**2 - spec.chord**2)
    equal_widths = abs(w_seg - w_chord) <= 1e-9
    print(f"wrote {args.out} and {csv_path}")
    print(f"chord half-widths: segment {w_seg:.10g}, plane {w_chord:.10g}")
    if args.epsilon == 0.0 and not equal_widths:
        print("error: chord half-widths differ at epsilon = 0", file=sys.stderr)
        return 1
    return 0


def cmd_concentration_check(args) -> int:
    c_values = [float(tok) for tok in args.c_list.split(",") if tok.strip()]
    rows = []
    ok = True
    for n in range(3, args.n_max + 1):
        for c in c_values:
            width = c / math.sqrt(n - 1.0)
            if width > 1.0:
                rows.append({"n": n, "c": c, "exact": "", "bound": "", "slack": "",
                             "status": "skipped: width > 1"})
                continue
            exact = slab_fraction(n, -width, width)
            bound = concentration_bound(c)
            slack = exact - bound
            ok = ok and slack >= 0
            rows.append({"n": n, "c": c, "exact": exact, "bound": bound,
                         "slack": slack, "status": "ok" if slack >= 0 else "VIOLATED"})
    doc = {
        "command": "concentration-check",
        "inputs": {"n_max": args.n_max, "c_list": c_values},
        "results": {"rows": rows},
        "pass": ok,
    }
    text = [f"{'n':>4} {'c':>6} {'exact':>16} {'bound':>16} {'slack':>16}  status"]
    for r in rows:
        text.append(
            f"{r['n']:>4} {r['c']:>6.3g} {_g10(r['exact']):>16} "
            f"{_g10(r['bound']):>16} {_g10(r['slack']):>16}  {r['status']}"
        )
    rc = _emit(doc, args.format, args.out, text, rows)
    return rc if rc else (0 if ok else 1)


def cmd_check_all(args) -> int:
    runs = [
        ["ratio", "--n", "2"],
        ["ratio", "--n", "3"],
        ["table", "--max-n", "64"],
        ["verify", "--n", "2"],
        ["optimize-a", "--n", "2"],
        ["threshold"],
        ["figure", "--out", args.figure_out],
        ["concentration-check"],
    ]
    worst = 0
    for argv in runs:
        print(f"== {' '.join(argv)}")
        rc = main(argv)
        print(f"== exit {rc}")
        worst = max(worst, rc)
    return worst


# --- parser --------------------------------------------------------------


def _add_output_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--format", choices=["json", "csv", "text"], default="text")
    p.add_argument("--out", default=None, help="write output to this path instead of stdout")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ballavoid",
        description="Certify the unit-distance-avoiding set that beats the (1/2)^n volume bound.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    tol = _default_tol()

    p = sub.add_parser("ratio", help="vol S / vol B at one dimension")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--a", type=float, default=CANONICAL_OFFSET)
    p.add_argument("--method", choices=["closed_form", "quadrature"], default="closed_form")
    p.add_argument("--tol", type=float, default=tol)
    _add_output_flags(p)
    p.set_defaults(handler=cmd_ratio)

    p = sub.add_parser("table", help="per-dimension ratio table with margins")
    p.add_argument("--max-n", type=int, default=64)
    p.add_argument("--a", type=float, default=CANONICAL_OFFSET)
    _add_output_flags(p)
    p.set_defaults(handler=cmd_table)

    p = sub.add_parser("verify", help="seeded pair audit plus Monte Carlo ratio check")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--a", type=float, default=CANONICAL_OFFSET)
    p.add_argument("--pairs", type=int, default=10**6)
    p.add_argument("--samples", type=int, default=10**6)
    p.add_argument("--seed", type=int, default=0)
    _add_output_flags(p)
    p.set_defaults(handler=cmd_verify)

    p = sub.add_parser("optimize-a", help="certify the volume-maximizing offset")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--tol", type=float, default=1e-10)
    _add_output_flags(p)
    p.set_defaults(handler=cmd_optimize_a)

    p = sub.add_parser("threshold", help="best concentration certificate plus direct checks")
    p.add_argument("--a", type=float, default=CANONICAL_OFFSET)
    p.add_argument("--c-min", type=float, default=1.0)
    p.add_argument("--c-max", type=float, default=3.0)
    p.add_argument("--resolution", type=float, default=1e-3)
    _add_output_flags(p)
    p.set_defaults(handler=cmd_threshold)

    p = sub.add_parser("figure", help="SVG of S_2 plus junction-point CSV")
    p.add_argument("--out", default="s2.svg")
    p.add_argument("--a", type=float, default=CANONICAL_OFFSET)
    p.add_argument("--scale", type=float, default=256.0)
    p.add_argument("--epsilon", type=float, default=0.0,
                   help="draw the closed inner approximation tightened by this much")
    p.set_defaults(handler=cmd_figure)

    p = sub.add_parser("concentration-check", help="validate the slab inequality on a grid")
    p.add_argument("--n-max", type=int, default=50)
    p.add_argument("--c-list", default="1,1.5,2,3")
    _add_output_flags(p)
    p.set_defaults(handler=cmd_concentration_check)

    p = sub.add_parser("check-all", help="run every subcommand with defaults")
    p.add_argument("--figure-out", default="s2.svg")
    p.set_defaults(handler=cmd_check_all)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except DomainError as exc:
        parser.exit(2, f"{parser.prog}: error: {exc}\n")
    except NumericError as exc:
        print(f"error: numerical failure: {exc}", file=sys.stderr)
        return 1


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
