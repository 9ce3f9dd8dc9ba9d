"""Command-line front end: poly | bounds | verify | cover | report."""

from __future__ import annotations

import argparse
import json
import sys
import time
from fractions import Fraction

from . import harness
from .cover import CoverCertificate, verify_cover
from .graphs import GraphError, mask_of
from .harness import RunConfig


def _add_config_flags(parser: argparse.ArgumentParser):
    parser.add_argument(
        "--lambda",
        dest="lambdas",
        action="append",
        metavar="P/Q",
        help="activity as an exact rational, repeatable (default: 1/2 1 2)",
    )
    parser.add_argument("--phi", type=int, default=None, help="cover threshold (default: per-graph)")
    parser.add_argument("--const-C", dest="const_C", type=float, default=2.0)
    parser.add_argument("--const-c", dest="const_c", type=float, default=1.0)
    parser.add_argument("--const-Clambda", dest="const_clambda", type=float, default=None)
    parser.add_argument("--const-calpha", dest="const_calpha", type=float, default=None)
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--cap", type=int, default=28, help="vertex cap for exact runs")
    parser.add_argument("--orders", type=int, default=20, help="random orders per graph")
    parser.add_argument(
        "--checks", default=None, help="comma-separated check names (default: all)"
    )
    parser.add_argument("--jobs", type=int, default=1, help="worker processes")
    parser.add_argument("--format", choices=("json", "csv"), default="json")
    parser.add_argument("--out", default=None, metavar="PATH")


def _config_from_args(args) -> RunConfig:
    lambdas = tuple(Fraction(s) for s in args.lambdas) if args.lambdas else harness.DEFAULT_LAMBDAS
    checks = tuple(s for s in args.checks.split(",") if s) if args.checks else None
    return RunConfig(
        lambdas=lambdas,
        phi=args.phi,
        C=args.const_C,
        c=args.const_c,
        c_lambda=args.const_clambda,
        c_alpha=args.const_calpha,
        seed=args.seed,
        cap=args.cap,
        orders=args.orders,
        checks=checks,
        jobs=args.jobs,
    )


def _single_graph(spec: str):
    pairs = harness.load_inputs([spec])
    if len(pairs) != 1:
        raise GraphError(f"expected exactly one graph, got {len(pairs)} from {spec!r}")
    return pairs[0]


def _emit(text: str, out_path: str | None):
    if out_path:
        with open(out_path, "w", encoding="ascii") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
        if not text.endswith("\n"):
            sys.stdout.write("\n")


def cmd_poly(args) -> int:
    cfg = _config_from_args(args)
    graph_id, g = _single_graph(args.input)
    summary = harness.poly_summary(g, cfg)
    summary["graph_id"] = graph_id
    _emit(json.dumps(summary, indent=2, sort_keys=True), args.out)
    return 0


def cmd_bounds(args) -> int:
    cfg = _config_from_args(args)
    graph_id, g = _single_graph(args.input)
    stats, reports, notices = harness.bounds_for_graph(g, cfg)
    for notice in notices:
        print(f"note: {notice}", file=sys.stderr)
    if args.format == "csv":
        lines = ["name,log2_value,exact_value,holds_exact,margin_log2"]
        for rep in reports:
            lines.append(
                ",".join(
                    [
                        rep.name,
                        repr(rep.log2_value),
                        str(rep.exact_value) if rep.exact_value is not None else "",
                        "" if rep.holds_exact is None else str(rep.holds_exact).lower(),
                        "" if rep.margin_log2 is None else repr(rep.margin_log2),
                    ]
                )
            )
        _emit("\n".join(lines) + "\n", args.out)
    else:
        doc = {
            "graph_id": graph_id,
            "stats": {
                "n": stats.n,
                "d": stats.d,
                "alpha": stats.alpha,
                "edge_count": stats.edge_count,
            },
            "reports": [rep.to_dict() for rep in reports],
        }
        _emit(json.dumps(doc, indent=2, sort_keys=True), args.out)
    return 0


def cmd_verify(args) -> int:
    cfg = _config_from_args(args)
    pairs = harness.load_inputs(args.inputs)
    start = time.monotonic()
    records, code = harness.run_verify(pairs, cfg)
    elapsed = time.monotonic() - start
    for line in harness.summary_lines(records):
        print(line)
    print(f"elapsed={elapsed:.2f}s", file=sys.stderr)
    if args.out:
        with open(args.out, "w", encoding="ascii") as fh:
            fh.write(harness.report_json(records, cfg))
    return code


def cmd_cover(args) -> int:
    cfg = _config_from_args(args)
    graph_id, g = _single_graph(args.input)
    if args.certificate:
        with open(args.certificate, "r", encoding="ascii") as fh:
            cert = CoverCertificate.from_json(fh.read())
        ok, reason = verify_cover(g, cert)
        _emit(json.dumps({"graph_id": graph_id, "verified": ok, "reason": reason}), args.out)
        return 0 if ok else 1
    try:
        vertices = [int(s) for s in args.set.split(",")] if args.set else []
    except ValueError as exc:
        raise GraphError(f"malformed --set value {args.set!r}") from exc
    summary = harness.cover_summary(g, mask_of(vertices), args.phi, cfg)
    summary["graph_id"] = graph_id
    _emit(json.dumps(summary, indent=2, sort_keys=True), args.out)
    return 0 if summary["verified"] else 1


def cmd_report(args) -> int:
    with open(args.records, "r", encoding="ascii") as fh:
        doc = json.load(fh)
    records = doc.get("records", [])
    if args.format == "csv":
        _emit(harness.records_to_csv(records), args.out)
    else:
        doc["records"] = harness.sort_records_for_report(records)
        _emit(json.dumps(doc, indent=2, sort_keys=True), args.out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="indsets",
        description="Exact independent-set counting and bound certification for regular graphs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_poly = sub.add_parser("poly", help="independence polynomial of one graph")
    p_poly.add_argument("input", help="graph6 line, gen: descriptor, or file with one graph")
    _add_config_flags(p_poly)
    p_poly.set_defaults(func=cmd_poly)

    p_bounds = sub.add_parser("bounds", help="every applicable bound for one graph")
    p_bounds.add_argument("input")
    _add_config_flags(p_bounds)
    p_bounds.set_defaults(func=cmd_bounds)

    p_verify = sub.add_parser("verify", help="batch verification over a corpus")
    p_verify.add_argument("inputs", nargs="+", help="corpus files and/or gen: descriptors")
    _add_config_flags(p_verify)
    p_verify.set_defaults(func=cmd_verify)

    p_cover = sub.add_parser("cover", help="build and verify a cover certificate")
    p_cover.add_argument("input")
    p_cover.add_argument("--set", default="", help="independent set, e.g. 0,2,5")
    p_cover.add_argument(
        "--certificate", default=None, help="verify an existing certificate JSON instead"
    )
    _add_config_flags(p_cover)
    p_cover.set_defaults(func=cmd_cover)

    p_report = sub.add_parser("report", help="render a verify report as CSV or sorted JSON")
    p_report.add_argument("records", help="JSON report written by verify --out")
    _add_config_flags(p_report)
    p_report.set_defaults(func=cmd_report)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (GraphError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
