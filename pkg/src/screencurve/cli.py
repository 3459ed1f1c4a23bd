"""Command-line interface: ``screencurve <subcommand> ...``.

Exit codes: 0 success, 1 invalid input, 2 math error.  Data goes to
``--out`` (default stdout); diagnostics and summaries go to stderr.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .catalog import parse_catalog
from .core import ConfusionMatrix, TestCharacteristics, metrics_from_counts
from .curvature import threshold_report
from .errors import (CatalogError, DegenerateTestError, LinearCurveError,
                     LogSingularityError, OutOfRangeError, UndefinedMetricError)
from .integrals import auc
from .paradox import ParadoxScenario, run
from .render import render_svg, sample_curve
from .report import UNDEFINED, build_report, plain_records, to_csv, to_json

MATH_ERRORS = (DegenerateTestError, LinearCurveError, LogSingularityError,
               OutOfRangeError, UndefinedMetricError, ArithmeticError)

SCENARIO_KEYS = ("sensitivity", "specificity", "initial_prevalence",
                 "treatment_efficacy", "screening_coverage", "rounds")


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _emit(text: str, out: str | None) -> None:
    if out is None or out == "-":
        sys.stdout.write(text)
    else:
        Path(out).write_text(text, encoding="utf-8")


def _render(records: list[dict], args) -> str:
    if args.format == "csv":
        return to_csv(records, precision=args.precision)
    return to_json(records, precision=args.precision)


def _test_from_args(args) -> TestCharacteristics:
    return TestCharacteristics(args.sensitivity, args.specificity)


def cmd_metrics(args) -> int:
    m = ConfusionMatrix(args.tp, args.fp, args.fn, args.tn)
    res = metrics_from_counts(m, strict=False)
    rec = {"prevalence": res.prevalence, "sensitivity": res.sensitivity,
           "specificity": res.specificity, "ppv": res.ppv, "npv": res.npv}
    for k in ("ppv", "npv"):
        if rec[k] is None:
            print(f"warning: {k} is undefined (zero denominator)", file=sys.stderr)
            rec[k] = UNDEFINED
    _emit(_render([rec], args), args.out)
    return 0


def cmd_threshold(args) -> int:
    t = _test_from_args(args)
    th = threshold_report(t)
    rec = {"sensitivity": t.a, "specificity": t.b, "epsilon": t.epsilon,
           "concavity": str(th.concavity)}
    for k in ("threshold", "ppv_at_threshold", "oracle_threshold", "oracle_residual"):
        v = getattr(th, k)
        rec[k] = UNDEFINED if v is None else v
    _emit(_render([rec], args), args.out)
    return 0


def cmd_auc(args) -> int:
    t = _test_from_args(args)
    r = auc(t)
    rec = {"sensitivity": t.a, "specificity": t.b, "epsilon": r.epsilon,
           "auc_closed": r.auc_closed, "auc_numeric": r.auc_numeric, "residual": r.residual}
    _emit(_render([rec], args), args.out)
    return 0


def cmd_curve(args) -> int:
    t = _test_from_args(args)
    samples = sample_curve(t, args.samples, name=args.name or "")
    if args.svg:
        Path(args.svg).write_text(render_svg(samples), encoding="utf-8")
    records = [{"phi": p, "ppv": r, "dppv_dphi": s, "curvature": k}
               for p, r, s, k in samples.rows()]
    _emit(_render(records, args), args.out)
    return 0


def load_scenario(path: str) -> ParadoxScenario:
    try:
        doc = json.loads(Path(path).read_text(encoding="utf-8"))
    except OSError as exc:
        raise CatalogError(str(exc), path) from None
    except json.JSONDecodeError as exc:
        raise CatalogError(exc.msg, f"{path} line {exc.lineno} column {exc.colno}") from None
    if not isinstance(doc, dict):
        raise CatalogError("scenario must be a JSON object", path)
    for key in SCENARIO_KEYS:
        if key not in doc:
            raise CatalogError("missing key", path, key)
        v = doc[key]
        if isinstance(v, bool) or not isinstance(v, (int, float)):
            raise CatalogError(f"expected a number, got {v!r}", path, key)
    unknown = sorted(set(doc) - set(SCENARIO_KEYS))
    if unknown:
        raise CatalogError("unknown key", path, unknown[0])
    if not isinstance(doc["rounds"], int):
        raise CatalogError(f"expected an integer, got {doc['rounds']!r}", path, "rounds")
    for key in ("sensitivity", "specificity"):
        if not 0.0 <= doc[key] <= 1.0:
            raise CatalogError(f"must lie in [0, 1], got {doc[key]!r}", path, key)
    try:
        return ParadoxScenario(
            TestCharacteristics(doc["sensitivity"], doc["specificity"]),
            float(doc["initial_prevalence"]), float(doc["treatment_efficacy"]),
            float(doc["screening_coverage"]), doc["rounds"])
    except ValueError as exc:
        field = next((k for k in SCENARIO_KEYS if k in str(exc)), None)
        raise CatalogError(str(exc), path, field) from None


def cmd_simulate(args) -> int:
    traj = run(load_scenario(args.scenario))
    records = [{"round": p.round, "prevalence": p.prevalence, "ppv": p.ppv}
               for p in traj.series]
    if args.format == "json":
        head = {"threshold": UNDEFINED if traj.threshold is None else traj.threshold,
                "crossing_round": traj.crossing_round}
        body = plain_records([head], args.precision)[0]
        body["series"] = plain_records(records, args.precision)
        _emit(json.dumps(body, indent=2, ensure_ascii=False) + "\n", args.out)
    else:
        _emit(to_csv(records, precision=args.precision), args.out)
    th = UNDEFINED if traj.threshold is None else f"{traj.threshold:.6g}"
    crossing = "none" if traj.crossing_round is None else traj.crossing_round
    print(f"threshold: {th}, crossing: {crossing}", file=sys.stderr)
    return 0


def cmd_report(args) -> int:
    fmt = args.catalog_format
    if fmt is None:
        fmt = "csv" if args.catalog.lower().endswith(".csv") else "json"
    try:
        if args.catalog == "-":
            entries = parse_catalog(sys.stdin.buffer, fmt)
        else:
            with open(args.catalog, "rb") as fh:
                entries = parse_catalog(fh, fmt)
    except OSError as exc:
        raise CatalogError(str(exc), args.catalog) from None
    _emit(_render(build_report(entries), args), args.out)
    return 0


def _add_test_args(p):
    p.add_argument("-a", "--sensitivity", type=float, required=True)
    p.add_argument("-b", "--specificity", type=float, required=True)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--out", default=None, help="output path (default: stdout)")
    common.add_argument("--precision", choices=("6", "full"), default="6",
                        help="significant digits in numeric output (default 6)")

    def fmt(p, default):
        p.add_argument("--format", choices=("json", "csv"), default=default)

    parser = _Parser(prog="screencurve", description="Prevalence-dependent screening curve analysis.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("metrics", parents=[common], help="ratios from confusion-matrix counts")
    for name in ("tp", "fp", "fn", "tn"):
        p.add_argument(f"--{name}", type=int, required=True)
    fmt(p, "json")
    p.set_defaults(func=cmd_metrics)

    p = sub.add_parser("threshold", parents=[common], help="prevalence threshold")
    _add_test_args(p)
    fmt(p, "json")
    p.set_defaults(func=cmd_threshold)

    p = sub.add_parser("auc", parents=[common], help="area under the screening curve")
    _add_test_args(p)
    fmt(p, "json")
    p.set_defaults(func=cmd_auc)

    p = sub.add_parser("curve", parents=[common], help="sample the curve, optionally render SVG")
    _add_test_args(p)
    p.add_argument("--samples", type=int, default=101)
    p.add_argument("--svg", default=None, help="write an SVG plot to this path")
    p.add_argument("--name", default=None)
    fmt(p, "csv")
    p.set_defaults(func=cmd_curve)

    p = sub.add_parser("simulate", parents=[common], help="screening-paradox trajectory")
    p.add_argument("scenario", help="scenario JSON file")
    fmt(p, "csv")
    p.set_defaults(func=cmd_simulate)

    p = sub.add_parser("report", parents=[common], help="full report for a catalog")
    p.add_argument("catalog", help="catalog file (JSON or CSV), '-' for stdin")
    p.add_argument("--catalog-format", choices=("json", "csv"), default=None)
    fmt(p, "json")
    p.set_defaults(func=cmd_report)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except MATH_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (CatalogError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
