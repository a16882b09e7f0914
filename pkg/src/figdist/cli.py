"""Command line interface: ``figdist compare | matrix | nearest``.

Exit status is 0 on success, 1 when the distance is undefined (or no
comparable neighbour exists) and 2 on parse or validation errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Sequence

from .corpus import (
    INCOMPARABLE,
    distance_matrix,
    emit_scatter,
    format_number,
    load_figures,
    matrix_csv,
    nearest,
    trace_csv,
)
from .distance import DEFAULT_BETA, DistanceReport, distance
from .figure import load_figure
from .ipfp import ConvergenceError, DEFAULT_TOLERANCE

EXIT_OK = 0
EXIT_UNDEFINED = 1
EXIT_INVALID = 2

_TRACE_LABELS = {
    "target": "IPFP-1 target table",
    "seed": "IPFP-2 initial table",
}


def _trace_label(label: str) -> str:
    if label in _TRACE_LABELS:
        return _TRACE_LABELS[label]
    # row fit k -> IPFP-(2k+1), column fit k -> IPFP-(2k+2)
    kind, _, k = label.rpartition(" ")
    offset = 1 if kind == "row fit" else 2
    return f"IPFP-{2 * int(k) + offset} {kind} {k}"


def _precision(value: str) -> str:
    if value not in ("4", "full"):
        raise argparse.ArgumentTypeError("precision must be 4 or full")
    return value


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="figdist", description="Distances between straight-edge planar figures."
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser, tolerance: bool = True) -> None:
        p.add_argument("--beta", type=float, default=DEFAULT_BETA,
                       help="weight of angular dissimilarity (default %(default)s)")
        if tolerance:
            p.add_argument("--tolerance", type=float, default=DEFAULT_TOLERANCE,
                           help="IPF stopping tolerance (default %(default)s)")
        p.add_argument("--precision", type=_precision, default="4")
        p.add_argument("--format", choices=("text", "json"), default="text")

    p = sub.add_parser("compare", help="distance between two figure documents")
    p.add_argument("a")
    p.add_argument("b")
    common(p)
    p.add_argument("--trace-ipfp", action="store_true",
                   help="include the IPF table sequence in the report")
    p.add_argument("--emit-scatter", metavar="PREFIX",
                   help="write PREFIX_angles.csv and PREFIX_edges.csv")

    p = sub.add_parser("matrix", help="pairwise distances over a directory")
    p.add_argument("dir")
    p.add_argument("-o", "--output", help="write the CSV here instead of stdout")
    common(p)

    p = sub.add_parser("nearest", help="rank corpus figures by distance to a query")
    p.add_argument("query")
    p.add_argument("dir")
    p.add_argument("-k", type=int, default=5)
    common(p)
    return parser


def _report_dict(report: DistanceReport, precision: str, trace: bool) -> dict:
    def num(x):
        return float(x) if precision == "full" else float(format_number(x, precision))

    line = report.edge_result.line
    out = {
        "first": report.first,
        "second": report.second,
        "defined": True,
        "beta": report.beta,
        "alpha": num(report.alpha),
        "rho": num(report.rho),
        "d": num(report.d),
        "m": num(line.slope),
        "angular_shift_sum": num(report.alpha_result.shift_sum),
        "angular_shifts": [num(x) for x in report.alpha_result.shifts],
        "deviation_sum": num(report.edge_result.deviation_sum),
        "deviations": [num(x) for x in report.edge_result.deviations],
        "fitted": [[num(a), num(b)] for a, b in line.fitted],
        "ipfp_iterations": line.iterations,
    }
    if trace:
        out["ipfp_trace"] = [
            {
                "table": _trace_label(label),
                "rows": [
                    {"h": h, "left": num(a), "right": num(b), "total": num(a + b)}
                    for h, (a, b) in enumerate(table, start=1)
                ],
            }
            for label, table in line.trace
        ]
    return out


def _report_text(report: DistanceReport, precision: str, trace: bool) -> str:
    f = lambda x: format_number(x, precision)  # noqa: E731
    line = report.edge_result.line
    lines = [
        f"first:  {report.first}",
        f"second: {report.second}",
        f"alpha = {f(report.alpha)}  (shift sum {f(report.alpha_result.shift_sum)})",
        f"rho   = {f(report.rho)}  (deviation sum {f(report.edge_result.deviation_sum)}, "
        f"n = {report.edge_result.edge_count})",
        f"d     = {f(report.d)}  (beta = {report.beta:g})",
        f"m     = {f(line.slope)}  (IPF iterations: {line.iterations})",
        "Lambda: " + ", ".join(f(x) for x in report.alpha_result.shifts),
        "Delta:  " + ", ".join(f(x) for x in report.edge_result.deviations),
    ]
    if trace:
        for label, table in line.trace:
            lines.append("")
            lines.append(f"# {_trace_label(label)}")
            lines.append(trace_csv(table, precision).rstrip("\n"))
    return "\n".join(lines) + "\n"


def _cmd_compare(args) -> int:
    a, b = load_figure(args.a), load_figure(args.b)
    outcome = distance(a, b, args.beta, args.tolerance, trace=args.trace_ipfp)
    if not isinstance(outcome, DistanceReport):
        msg = f"distance undefined: {outcome.reason}"
        if args.format == "json":
            print(json.dumps({
                "first": outcome.first, "second": outcome.second, "defined": False,
                "reason": outcome.reason,
                "first_graph": outcome.first_graph, "second_graph": outcome.second_graph,
            }, indent=2))
        print(f"{msg} ({outcome.first}: {outcome.first_graph}; "
              f"{outcome.second}: {outcome.second_graph})", file=sys.stderr)
        return EXIT_UNDEFINED
    if args.format == "json":
        print(json.dumps(_report_dict(outcome, args.precision, args.trace_ipfp), indent=2))
    else:
        sys.stdout.write(_report_text(outcome, args.precision, args.trace_ipfp))
    if args.emit_scatter:
        emit_scatter(outcome, a, b, args.emit_scatter, args.precision)
    return EXIT_OK


def _json_cell(d: float | None, precision: str):
    if d is None:
        return INCOMPARABLE
    return d if precision == "full" else float(format_number(d, precision))


def _cmd_matrix(args) -> int:
    corpus = distance_matrix(args.dir, args.beta, args.tolerance)
    if args.format == "json":
        names = corpus.names
        doc = {
            "names": names,
            "beta": corpus.beta,
            "iso_classes": [list(c) for c in corpus.iso_classes],
            "matrix": [[_json_cell(corpus.d(a, b), args.precision) for b in names] for a in names],
        }
        text = json.dumps(doc, indent=2) + "\n"
    else:
        text = matrix_csv(corpus, args.precision)
    if args.output:
        Path(args.output).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)
    return EXIT_OK


def _cmd_nearest(args) -> int:
    query_path = Path(args.query).resolve()
    query = load_figure(query_path)
    root = Path(args.dir)
    candidates = load_figures(root)
    # a query that lives inside the corpus directory is not its own neighbour
    in_dir = query_path.parent == root.resolve()
    if in_dir:
        candidates = [f for f in candidates if f.name != query.name]
    ranked = nearest(query, candidates, args.beta, args.k, args.tolerance)
    if args.format == "json":
        print(json.dumps([
            {"name": name, "d": d if args.precision == "full" else float(format_number(d))}
            for name, d in ranked
        ], indent=2))
    else:
        for name, d in ranked:
            print(f"{name},{format_number(d, args.precision)}")
    if not ranked:
        print("warning: no comparable figure in corpus", file=sys.stderr)
        return EXIT_UNDEFINED
    return EXIT_OK


def main(argv: Sequence[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    handler = {"compare": _cmd_compare, "matrix": _cmd_matrix, "nearest": _cmd_nearest}[args.command]
    try:
        return handler(args)
    except (ValueError, ConvergenceError, OSError) as exc:
        # parse, schema, validation, correspondence and corpus errors are ValueErrors
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
