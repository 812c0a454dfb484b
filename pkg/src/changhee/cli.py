"""Command-line interface: ``changhee table | verify | expand``."""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from changhee.algebra import Polynomial
from changhee.coeffs import closed_form_table, coeff_table
from changhee.sequences import changhee_poly, euler_poly, stirling1_row, stirling2_row
from changhee.series import ts_2F, ts_F
from changhee.verify import SUITES, run_suites

FAMILIES = ("changhee", "euler", "stirling1", "stirling2", "coeffs")
FORMATS = ("csv", "json", "latex")

_SEQUENCE_LABEL = {"changhee": "Ch_n(x)", "euler": "E_n(x)"}


def _csv(rows) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerows(rows)
    return buf.getvalue()


def _json(data) -> str:
    return json.dumps(data) + "\n"


def render_sequence(polys, fmt: str, label: str = "p_n(x)") -> str:
    if fmt == "csv":
        return _csv([[str(p)] for p in polys])
    if fmt == "json":
        return _json([str(p) for p in polys])
    lines = [r"\begin{array}{r|l}", rf"n & {label} \\", r"\hline"]
    lines += [rf"{n} & {p.latex()} \\" for n, p in enumerate(polys)]
    lines.append(r"\end{array}")
    return "\n".join(lines) + "\n"


def render_triangle(rows, fmt: str) -> str:
    """Rows of polynomials (or integers) as csv, json or a LaTeX matrix."""
    rows = [[c if isinstance(c, Polynomial) else Polynomial((c,)) for c in r] for r in rows]
    if fmt == "csv":
        return _csv([[str(c) for c in r] for r in rows])
    if fmt == "json":
        return _json([[str(c) for c in r] for r in rows])
    width = max(len(r) for r in rows)
    lines = [r"\begin{pmatrix}"]
    for n, r in enumerate(rows):
        cells = [c.latex() for c in r] + ["0"] * (width - len(r))
        lines.append(" & ".join(cells) + (r" \\" if n < len(rows) - 1 else ""))
    lines.append(r"\end{pmatrix}")
    return "\n".join(lines) + "\n"


def cmd_table(family: str, max_index: int, method: str | None, fmt: str, raw: bool = False) -> str:
    if family == "coeffs":
        table = closed_form_table(max_index) if method == "closed" else coeff_table(max_index)
        if raw:
            return _json(table.to_json())
        if fmt == "latex":
            return table.latex() + "\n"
        return render_triangle(table.rows, fmt)
    if raw:
        raise ValueError("--raw applies only to the coeffs family")
    if family in _SEQUENCE_LABEL:
        gen = changhee_poly if family == "changhee" else euler_poly
        return render_sequence([gen(n) for n in range(max_index + 1)], fmt, _SEQUENCE_LABEL[family])
    row = stirling1_row if family == "stirling1" else stirling2_row
    return render_triangle([row(n) for n in range(max_index + 1)], fmt)


def cmd_expand(target: str, order: int, fmt: str, raw: bool = False) -> str:
    series = ts_F(order) if target == "F" else ts_2F(order)
    if raw:
        return _json(series.to_json())
    if fmt == "latex":
        lines = [r"\begin{array}{r|l}", r"k & [t^k] \\", r"\hline"]
        lines += [rf"{k} & {c.latex()} \\" for k, c in enumerate(series.coefficients)]
        lines.append(r"\end{array}")
        return "\n".join(lines) + "\n"
    return render_sequence(series.coefficients, fmt)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="changhee",
        description="Exact Changhee/Euler polynomials, ODE coefficient tables and identity checks.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("table", help="emit a sequence or triangle")
    p.add_argument("family", choices=FAMILIES)
    p.add_argument("--max", type=int, required=True, dest="max_index")
    p.add_argument("--method", choices=("recurrence", "closed"))
    p.add_argument("--format", choices=FORMATS, default="csv")
    p.add_argument("--raw", action="store_true", help="coeffs only: JSON {n_max, rows} with ascending rational arrays")

    p = sub.add_parser("verify", help="run identity checks, JSON report on stdout")
    p.add_argument("suite", nargs="*", default="all", choices=("all",) + SUITES)
    p.add_argument("--n-max", type=int, default=8)
    p.add_argument("--k-max", type=int, default=8)
    p.add_argument("--order", type=int, default=16)
    p.add_argument("--variant", choices=("corrected", "printed"))

    p = sub.add_parser("expand", help="coefficients of F or 2F in t")
    p.add_argument("target", choices=("F", "2F"))
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--format", choices=FORMATS, default="json")
    p.add_argument("--raw", action="store_true", help="JSON {order, coefficients} with ascending rational arrays")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)

    if args.command == "table":
        if args.max_index < 0:
            parser.error("--max must be >= 0")
        if args.method is not None and args.family != "coeffs":
            parser.error("--method applies only to the coeffs family")
        if args.raw and args.family != "coeffs":
            parser.error("--raw applies only to the coeffs family")
        sys.stdout.write(cmd_table(args.family, args.max_index, args.method, args.format, args.raw))
        return 0

    if args.command == "expand":
        if args.order < 0:
            parser.error("--order must be >= 0")
        sys.stdout.write(cmd_expand(args.target, args.order, args.format, args.raw))
        return 0

    suites = (args.suite,) if isinstance(args.suite, str) else tuple(args.suite)
    if min(args.n_max, args.k_max, args.order) < 0:
        parser.error("bounds must be >= 0")
    if args.variant is not None and not ({"all", "thm22"} & set(suites)):
        parser.error("--variant applies only to the thm22 suite")
    variant = "as_printed" if args.variant == "printed" else "corrected"
    try:
        report = run_suites(suites, args.n_max, args.k_max, args.order, variant)
    except ValueError as exc:
        parser.error(str(exc))
    sys.stdout.write(report.to_json())
    print(report.summary(), file=sys.stderr)
    return 0 if report.ok else 1


if __name__ == "__main__":
    sys.exit(main())
