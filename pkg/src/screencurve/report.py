"""Per-entry screening reports and their JSON/CSV renderings."""

from __future__ import annotations

import csv
import io
import json

from .catalog import TestCatalogEntry
from .core import npv, ppv
from .curvature import threshold_report
from .errors import ScreeningError
from .integrals import auc

UNDEFINED = "undefined"

FIELDS = (
    "name", "sensitivity", "specificity", "epsilon", "concavity",
    "threshold", "ppv_at_threshold", "oracle_threshold", "oracle_residual",
    "auc", "auc_numeric", "auc_residual",
    "prevalence", "ppv", "npv", "below_threshold", "error",
)


def _undef(x):
    return UNDEFINED if x is None else x


def report_entry(entry: TestCatalogEntry) -> dict:
    """All metrics for one entry; math failures land in the ``error`` field."""
    t = entry.test
    rec = dict.fromkeys(FIELDS)
    rec.update(name=entry.name, sensitivity=t.a, specificity=t.b, epsilon=t.epsilon,
               prevalence=entry.prevalence)
    try:
        th = threshold_report(t)
        rec.update(
            concavity=str(th.concavity),
            threshold=_undef(th.threshold),
            ppv_at_threshold=_undef(th.ppv_at_threshold),
            oracle_threshold=_undef(th.oracle_threshold),
            oracle_residual=_undef(th.oracle_residual),
        )
        ar = auc(t)
        rec.update(auc=ar.auc_closed, auc_numeric=ar.auc_numeric, auc_residual=ar.residual)
        if entry.prevalence is not None:
            rec["ppv"] = ppv(t, entry.prevalence)
            rec["npv"] = npv(t, entry.prevalence)
            if th.threshold is not None:
                rec["below_threshold"] = entry.prevalence < th.threshold
    except (ScreeningError, ArithmeticError) as exc:
        rec["error"] = f"{type(exc).__name__}: {exc}"
    return rec


def build_report(entries: list[TestCatalogEntry]) -> list[dict]:
    return [report_entry(e) for e in entries]


def format_number(x: float, precision: str = "6") -> float:
    """Round to 6 significant digits, or keep every bit with ``"full"``."""
    if precision == "full":
        return x
    return float(f"{x:.{int(precision)}g}")


def _plain(value, precision):
    if isinstance(value, bool) or value is None or isinstance(value, str):
        return value
    if isinstance(value, int):
        return value
    return format_number(float(value), precision)


def plain_records(records: list[dict], precision: str = "6") -> list[dict]:
    return [{k: _plain(r.get(k), precision) for k in r} for r in records]


def to_json(records: list[dict], precision: str = "6") -> str:
    rows = plain_records(records, precision)
    return json.dumps(rows, indent=2, ensure_ascii=False, allow_nan=False) + "\n"


def _cell(value, precision) -> str:
    value = _plain(value, precision)
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    return str(value) if not isinstance(value, float) else repr(value)


def to_csv(records: list[dict], fields=None, precision: str = "6") -> str:
    fields = list(fields or (records[0].keys() if records else FIELDS))
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(fields)
    for r in records:
        writer.writerow([_cell(r.get(k), precision) for k in fields])
    return buf.getvalue()
