"""Command-line interface.

JSON results go to stdout, a short human summary to stderr. Exit codes:
0 success (and gallery/crosscheck PASS), 1 engine error, 2 expectation
FAIL.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import analysis, gallery, oracle, solver
from .errors import GraphconError, InvalidPointError
from .instances import load_instance, point_json
from .spaces import FiniteSpace, SequenceSpace


def _parse_start(space, text: str):
    if isinstance(space, FiniteSpace):
        return space.index_of(text)
    return space.point_named(text)


def _sample_json(space, s: analysis.RatioSample) -> dict:
    return {
        "point": point_json(space, s.point),
        "numer": float(s.numer),
        "denom": float(s.denom),
        "status": s.status,
        "value": None if s.trivial else float(s.value),
    }


def _cmd_analyze(args):
    space, map_ = load_instance(args.input)
    if isinstance(space, FiniteSpace):
        report = analysis.alpha_exact(space, map_, args.order)
    else:
        report = analysis.alpha_sampled(space, map_, args.order, index_cap=args.index_cap)
    doc = {
        "order": report.order,
        "alpha_min": float(report.alpha_min),
        "exact": report.exact,
        "verdict": report.verdict.value,
        "witness": None if report.witness is None else point_json(space, report.witness),
    }
    if args.emit_samples:
        doc["samples"] = [_sample_json(space, s) for s in report.samples]
    mode = "exact" if report.exact else f"sampled, cap={args.index_cap}"
    summary = [
        f"order {report.order}: {report.verdict.value}, "
        f"alpha_min={float(report.alpha_min)} ({mode})"
    ]
    return doc, 0, summary


def _cmd_solve(args):
    space, map_ = load_instance(args.input)
    start = _parse_start(space, args.start)
    sol = solver.solve(
        space,
        map_,
        args.order,
        start,
        tol=args.tol,
        cluster_tol=args.cluster_tol,
        max_outer=args.max_outer,
    )
    doc = {
        "order": sol.order,
        "case": sol.case.value,
        "period": sol.period,
        "representative": point_json(space, sol.representative),
        "cycle": [point_json(space, p) for p in sol.cycle],
        "residual": sol.residual,
        "iterations": sol.iterations_used,
    }
    summary = [
        f"order {sol.order}: case {sol.case.value}, period {sol.period}, "
        f"residual {sol.residual:.3e}, {sol.iterations_used} map applications"
    ]
    return doc, 0, summary


def _cmd_oracle(args):
    space, map_ = load_instance(args.input)
    if not isinstance(space, FiniteSpace):
        raise GraphconError("the oracle enumerates finite spaces only")
    res = oracle.enumerate_periodic(space, map_, args.order, full_scan=args.full_scan)
    doc = {
        "periodic": [
            {"point": point_json(space, p), "period": per} for p, per in res.periodic
        ],
        "orbits": [[point_json(space, p) for p in cyc] for cyc in res.orbits],
        "divisor_ok": res.divisor_ok,
    }
    summary = [
        f"order {args.order}: {len(res.periodic)} periodic points in "
        f"{len(res.orbits)} orbits, divisor_ok={res.divisor_ok}"
    ]
    return doc, 0, summary


def _cmd_gallery(args):
    report = gallery.run_gallery(args.id, a=args.a, b=args.b)
    doc = {
        "id": report.id,
        "params": report.params,
        "checks": [
            {"name": c.name, "ok": c.ok, "detail": c.detail} for c in report.checks
        ],
        "pass": report.passed,
    }
    summary = [
        f"{'PASS' if c.ok else 'FAIL'} {c.name}: {c.detail}" for c in report.checks
    ]
    summary.append(
        f"gallery {report.id}: {'PASS' if report.passed else 'FAIL'} "
        f"({sum(c.ok for c in report.checks)}/{len(report.checks)} checks)"
    )
    return doc, 0 if report.passed else 2, summary


def _cmd_crosscheck(args):
    space, map_ = load_instance(args.input)
    if not isinstance(space, FiniteSpace):
        raise GraphconError("crosscheck needs a finite instance")
    start = _parse_start(space, args.start)
    sol = solver.solve(space, map_, args.order, start)
    cc = oracle.crosscheck(space, map_, args.order, sol)
    doc = {
        "result": cc.label,
        "detail": cc.detail,
        "solver": {
            "period": sol.period,
            "representative": point_json(space, sol.representative),
            "cycle": [point_json(space, p) for p in sol.cycle],
        },
    }
    return doc, 0 if cc.agree else 2, [f"crosscheck: {cc.label} ({cc.detail})"]


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="graphcon",
        description="Contraction-order analysis and periodic-point solving "
        "on metric-space instances.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="minimal contraction constant per order")
    p.add_argument("--input", required=True)
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--index-cap", type=int, default=200)
    p.add_argument("--emit-samples", action="store_true")
    p.set_defaults(fn=_cmd_analyze)

    p = sub.add_parser("solve", help="find a periodic point by iteration")
    p.add_argument("--input", required=True)
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--start", required=True)
    p.add_argument("--tol", type=float, default=solver.DEFAULT_TOL)
    p.add_argument("--cluster-tol", type=float, default=solver.DEFAULT_CLUSTER_TOL)
    p.add_argument("--max-outer", type=int, default=solver.DEFAULT_MAX_OUTER)
    p.set_defaults(fn=_cmd_solve)

    p = sub.add_parser("oracle", help="exhaustive periodic-point enumeration")
    p.add_argument("--input", required=True)
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--full-scan", action="store_true")
    p.set_defaults(fn=_cmd_oracle)

    p = sub.add_parser("gallery", help="run a built-in case against its expectations")
    p.add_argument("--id", required=True, choices=gallery.GALLERY_IDS)
    p.add_argument("--a", type=float, default=0.0)
    p.add_argument("--b", type=float, default=1.0)
    p.set_defaults(fn=_cmd_gallery)

    p = sub.add_parser("crosscheck", help="solver vs oracle on a finite instance")
    p.add_argument("--input", required=True)
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--start", required=True)
    p.set_defaults(fn=_cmd_crosscheck)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        doc, code, summary = args.fn(args)
    except GraphconError as exc:
        print(json.dumps({"error": {"type": type(exc).__name__, "message": str(exc)}}))
        print(f"error: {exc}", file=sys.stderr)
        return 1
    print(json.dumps(doc, indent=2))
    for line in summary:
        print(line, file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
