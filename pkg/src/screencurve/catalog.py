"""Catalog ingestion and rendering (JSON and CSV).

JSON: an array of objects with ``name`` and either ``sensitivity`` +
``specificity`` or ``tp``, ``fp``, ``fn``, ``tn``, plus optional
``prevalence``.  CSV: UTF-8, comma separated, header
``name,sensitivity,specificity[,prevalence]`` or
``name,tp,fp,fn,tn[,prevalence]``.
"""

from __future__ import annotations

import csv
import io
import json
import math
from dataclasses import dataclass
from typing import IO

from .core import ConfusionMatrix, TestCharacteristics
from .errors import CatalogError, DuplicateNameError

RATE_KEYS = ("sensitivity", "specificity")
COUNT_KEYS = ("tp", "fp", "fn", "tn")


@dataclass(frozen=True)
class TestCatalogEntry:
    __test__ = False

    name: str
    test: TestCharacteristics
    counts: ConfusionMatrix | None = None
    prevalence: float | None = None


def _read_text(stream: IO | bytes | str) -> str:
    data = stream if isinstance(stream, (bytes, str)) else stream.read()
    if isinstance(data, bytes):
        try:
            data = data.decode("utf-8-sig")
        except UnicodeDecodeError as exc:
            raise CatalogError(f"input is not UTF-8: {exc}") from None
    return data


def _number(value, where: str, key: str) -> float:
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise CatalogError(f"expected a number, got {value!r}", where, key)
    return float(value)


def _probability(value, where: str, key: str) -> float:
    v = _number(value, where, key)
    if not (0.0 <= v <= 1.0) or math.isnan(v):
        raise CatalogError(f"must lie in [0, 1], got {value!r}", where, key)
    return v


def _count(value, where: str, key: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int) or value < 0:
        raise CatalogError(f"expected a non-negative integer, got {value!r}", where, key)
    return value


def _build_entry(record: dict, where: str) -> TestCatalogEntry:
    name = record.get("name")
    if not isinstance(name, str) or not name.strip():
        raise CatalogError("name must be a non-empty string", where, "name")
    allowed = {"name", "prevalence", *RATE_KEYS, *COUNT_KEYS}
    unknown = sorted(set(record) - allowed)
    if unknown:
        raise CatalogError(f"unknown key(s) {', '.join(unknown)}", where, unknown[0])

    has_rates = [k for k in RATE_KEYS if k in record]
    has_counts = [k for k in COUNT_KEYS if k in record]
    if has_rates and has_counts:
        raise CatalogError("give either sensitivity/specificity or tp/fp/fn/tn, not both", where)
    counts = None
    if has_counts:
        missing = [k for k in COUNT_KEYS if k not in record]
        if missing:
            raise CatalogError("missing count", where, missing[0])
        vals = [_count(record[k], where, k) for k in COUNT_KEYS]
        try:
            counts = ConfusionMatrix(*vals)
        except ValueError as exc:
            raise CatalogError(str(exc), where) from None
        test = counts.characteristics()
    elif has_rates:
        missing = [k for k in RATE_KEYS if k not in record]
        if missing:
            raise CatalogError("missing rate", where, missing[0])
        test = TestCharacteristics(
            _probability(record["sensitivity"], where, "sensitivity"),
            _probability(record["specificity"], where, "specificity"))
    else:
        raise CatalogError("needs sensitivity/specificity or tp/fp/fn/tn", where)

    prevalence = record.get("prevalence")
    if prevalence is not None:
        prevalence = _probability(prevalence, where, "prevalence")
    return TestCatalogEntry(name, test, counts, prevalence)


def _check_unique(entries: list[TestCatalogEntry], locations: list[str]) -> None:
    seen: dict[str, str] = {}
    for entry, where in zip(entries, locations):
        if entry.name in seen:
            raise DuplicateNameError(
                f"duplicate name {entry.name!r} (first seen at {seen[entry.name]})", where, "name")
        seen[entry.name] = where


def _parse_json(text: str) -> list[TestCatalogEntry]:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise CatalogError(exc.msg, f"line {exc.lineno} column {exc.colno}") from None
    if not isinstance(doc, list):
        raise CatalogError("top-level JSON value must be an array")
    entries, locations = [], []
    for i, record in enumerate(doc, start=1):
        where = f"entry {i}"
        if not isinstance(record, dict):
            raise CatalogError("expected an object", where)
        entries.append(_build_entry(record, where))
        locations.append(where)
    _check_unique(entries, locations)
    return entries


def _csv_cell(key: str, raw: str, where: str):
    if key == "name":
        return raw
    raw = raw.strip()
    if raw == "":
        if key == "prevalence":
            return None
        raise CatalogError("empty cell", where, key)
    try:
        return int(raw) if key in COUNT_KEYS else float(raw)
    except ValueError:
        raise CatalogError(f"cannot parse {raw!r}", where, key) from None


def _parse_csv(text: str) -> list[TestCatalogEntry]:
    reader = csv.reader(io.StringIO(text, newline=""))
    try:
        header = [h.strip() for h in next(reader)]
    except StopIteration:
        raise CatalogError("empty CSV: header row required", "line 1") from None
    shapes = [["name", *RATE_KEYS], ["name", *COUNT_KEYS]]
    if header not in shapes and header not in [s + ["prevalence"] for s in shapes]:
        raise CatalogError(
            "header must be name,sensitivity,specificity[,prevalence] "
            "or name,tp,fp,fn,tn[,prevalence]", "line 1")
    entries, locations = [], []
    for row in reader:
        where = f"line {reader.line_num}"
        if not row or all(not cell.strip() for cell in row):
            continue
        if len(row) != len(header):
            raise CatalogError(f"expected {len(header)} fields, got {len(row)}", where)
        record = {k: _csv_cell(k, v, where) for k, v in zip(header, row)}
        if record.get("prevalence", 0) is None:
            del record["prevalence"]
        entries.append(_build_entry(record, where))
        locations.append(where)
    _check_unique(entries, locations)
    return entries


def parse_catalog(stream: IO | bytes | str, fmt: str) -> list[TestCatalogEntry]:
    """Parse and validate a catalog; raise :class:`CatalogError` on the first problem."""
    text = _read_text(stream)
    if fmt == "json":
        return _parse_json(text)
    if fmt == "csv":
        return _parse_csv(text)
    raise ValueError(f"unknown catalog format {fmt!r}")


def _entry_record(e: TestCatalogEntry, use_counts: bool) -> dict:
    rec: dict = {"name": e.name}
    if use_counts:
        rec.update(tp=e.counts.tp, fp=e.counts.fp, fn=e.counts.fn, tn=e.counts.tn)
    else:
        rec.update(sensitivity=e.test.a, specificity=e.test.b)
    if e.prevalence is not None:
        rec["prevalence"] = e.prevalence
    return rec


def render_catalog(entries: list[TestCatalogEntry], fmt: str) -> str:
    """Write entries back out as a catalog; floats keep full precision."""
    if fmt == "json":
        recs = [_entry_record(e, e.counts is not None) for e in entries]
        return json.dumps(recs, indent=2) + "\n"
    if fmt != "csv":
        raise ValueError(f"unknown catalog format {fmt!r}")
    # CSV holds one source form; mixed catalogs are written as rates.
    use_counts = bool(entries) and all(e.counts is not None for e in entries)
    header = ["name", *(COUNT_KEYS if use_counts else RATE_KEYS), "prevalence"]
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    for e in entries:
        rec = _entry_record(e, use_counts)
        writer.writerow(["" if rec.get(k) is None else repr(rec[k]) if isinstance(rec[k], float)
                         else rec[k] for k in header])
    return buf.getvalue()
