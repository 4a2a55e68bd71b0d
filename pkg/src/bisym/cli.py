"""Command-line front end: ``bisym eval``, ``bisym autfn``, ``bisym table1``."""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from typing import List, Optional

from .applications import PipelineError, VariantSpec, albanese_counts, decomposition_report
from .bases import DecompositionReport, schur_pair_expansion
from .exprlang import EvalError, ParseError, evaluate, parse, render
from .partitions import to_text
from .series import BiSymSeries, Truncation, TruncationError


def _nonneg(text: str) -> int:
    v = int(text)
    if v < 0:
        raise argparse.ArgumentTypeError(f"must be nonnegative, got {v}")
    return v


def _positive(text: str) -> int:
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError(f"must be positive, got {v}")
    return v


def _common() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--deg-x", type=_nonneg, default=6, help="x-degree bound (default 6)")
    p.add_argument("--deg-y", type=_nonneg, default=6, help="y-degree bound (default 6)")
    p.add_argument("--hbar-min", type=int, default=-8, help="lowest hbar exponent kept (default -8)")
    p.add_argument("--hbar-max", type=int, default=8, help="highest hbar exponent kept (default 8)")
    p.add_argument("--basis", choices=("p", "schur"), default="schur")
    p.add_argument("--format", choices=("text", "json", "csv"), default="text")
    p.add_argument("--threads", type=_positive, default=1, help="worker processes for per-cell work")
    return p


def build_parser() -> argparse.ArgumentParser:
    common = _common()
    ap = argparse.ArgumentParser(prog="bisym", description="Exact symmetric and bisymmetric function calculus.")
    sub = ap.add_subparsers(dest="command", required=True)

    ev = sub.add_parser("eval", parents=[common], help="evaluate an expression")
    ev.add_argument("expr", help="expression text, or '-' to read stdin")

    au = sub.add_parser("autfn", parents=[common], help="Schur-pair decomposition of a cohomology prop")
    au.add_argument("--variant", default="Q", help="Q, Qtilde or Qprime")
    au.add_argument("--d", type=_nonneg, required=True, help="cohomological degree")
    au.add_argument("--q-max", type=_nonneg, default=None, help="output arity bound")
    au.add_argument("--p-max", type=_nonneg, default=None, help="input arity bound")

    tb = sub.add_parser("table1", parents=[common], help="irreducible counts of the Albanese cohomology")
    tb.add_argument("--d-max", type=_positive, default=6)
    return ap


def _trunc(args) -> Truncation:
    if args.hbar_min > args.hbar_max:
        raise argparse.ArgumentTypeError("--hbar-min exceeds --hbar-max")
    return Truncation(args.deg_x, args.deg_y, args.hbar_min, args.hbar_max)


def _rows_csv(header: List[str], rows: List[List]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue().rstrip("\n")


def _report_csv(rep: DecompositionReport) -> str:
    return _rows_csv(
        ["x_part", "y_part", "hbar_deg", "mult"],
        [[to_text(r.x_part), to_text(r.y_part), r.hbar_deg, r.to_json()["mult"]] for r in rep],
    )


def _format_series(f: BiSymSeries, basis: str, fmt: str) -> str:
    if fmt == "text":
        return render(f, basis)
    if basis == "schur":
        rep = schur_pair_expansion(f)
        if fmt == "json":
            return json.dumps(rep.to_json(), indent=1)
        return _report_csv(rep)
    if fmt == "json":
        return json.dumps(f.to_json(), indent=1)
    data = f.to_json()["terms"]
    return _rows_csv(["x", "y", "t", "c"], [[to_text(tuple(t["x"])), to_text(tuple(t["y"])), t["t"], t["c"]] for t in data])


def cmd_eval(args) -> str:
    text = sys.stdin.read() if args.expr == "-" else args.expr
    value = evaluate(parse(text), _trunc(args), text)
    return _format_series(value, args.basis, args.format)


def _format_report(rep: DecompositionReport, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(rep.to_json(), indent=1)
    if fmt == "csv":
        return _report_csv(rep)
    lines = [f"# {len(rep)} irreducibles, total multiplicity {rep.total_multiplicity()}"]
    lines.append("# hbar_deg\tx_part\ty_part\tmult")
    lines.append(rep.to_text())
    return "\n".join(l for l in lines if l)


def cmd_autfn(args) -> str:
    spec = VariantSpec(args.variant, args.d, args.q_max, args.p_max)
    if not args.hbar_min <= spec.d <= args.hbar_max:
        raise TruncationError(
            f"degree {spec.d} lies outside the hbar window [{args.hbar_min}, {args.hbar_max}]; "
            f"rerun with --hbar-min <= {spec.d} <= --hbar-max"
        )
    rep = decomposition_report(spec.variant, spec.d, spec.q_max, spec.p_max, threads=args.threads)
    out = _format_report(rep, args.format)
    if spec.variant == "Qtilde" and args.format == "text":
        out = "# derived: computed by the pipeline, no reference list to compare against\n" + out
    return out


def cmd_table1(args) -> str:
    rows = albanese_counts(args.d_max, threads=args.threads)
    if args.format == "json":
        return json.dumps([{"d": d, "n_irr": n, "sum_mult": s} for d, n, s in rows], indent=1)
    return _rows_csv(["d", "n_irr", "sum_mult"], [list(r) for r in rows])


def main(argv: Optional[List[str]] = None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        _trunc(args)
    except (argparse.ArgumentTypeError, ValueError) as exc:
        ap.error(str(exc))
    handlers = {"eval": cmd_eval, "autfn": cmd_autfn, "table1": cmd_table1}
    try:
        out = handlers[args.command](args)
    except (ParseError, EvalError, PipelineError, TruncationError, ValueError) as exc:
        print(f"bisym {args.command}: error: {exc}", file=sys.stderr)
        return 1
    print(out)
    return 0


if __name__ == "__main__":
    sys.exit(main())
