"""Dataset loaders (UCR TSV, plain CSV) and result documents."""

from __future__ import annotations

import csv
import io as _io
import json
import math
import numbers
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any

from . import __version__
from .core import Dataset, TimeSeries, znormalize
from .exceptions import DomainError, ParseError

__all__ = [
    "ResultDocument",
    "load_ucr_tsv",
    "load_csv_series",
    "load_dataset",
    "write_result",
    "read_result",
    "render_result",
    "format_number",
]


def format_number(x) -> str:
    """CSV cell text. Floats use their shortest round-trip repr, so ``1.0``
    stays distinguishable from the integer ``1``."""
    if x is None:
        return ""
    if isinstance(x, (bool, str, numbers.Integral)):
        return str(x)
    if isinstance(x, numbers.Real):
        return repr(float(x))
    return str(x)


def _parse_values(fields, path, lineno):
    try:
        values = [float(f) for f in fields]
    except ValueError as exc:
        raise ParseError(f"non-numeric field ({exc})", path, lineno) from None
    if any(not math.isfinite(v) for v in values):
        raise ParseError("non-finite value", path, lineno)
    return values


def _build(rows, path, znorm):
    if not rows:
        raise DomainError(f"{path}: no series found")
    length = len(rows[0][1])
    series = []
    for lineno, values, label, sid in rows:
        if len(values) != length:
            raise ParseError(
                f"row has {len(values)} values, expected {length}", path, lineno
            )
        if not values:
            raise ParseError("row has no values", path, lineno)
        ts = TimeSeries(values, id=sid, label=label)
        series.append(znormalize(ts) if znorm else ts)
    return Dataset(series)


def load_ucr_tsv(path, znorm: bool = False) -> Dataset:
    """Read a UCR archive split: ``label<TAB>v1<TAB>...<TAB>vm`` per line.

    Labels are kept as strings; ids are 0-based row positions.
    """
    path = Path(path)
    rows = []
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            line = line.rstrip("\r\n")
            if not line.strip():
                continue
            fields = line.split("\t")
            label = fields[0].strip()
            values = _parse_values(fields[1:], path, lineno)
            rows.append((lineno, values, label, len(rows)))
    return _build(rows, path, znorm)


def load_csv_series(path, header: bool = False, id_column: bool = False,
                    label_column: bool = False, znorm: bool = False) -> Dataset:
    """Read comma-separated numeric rows, one series per row.

    ``id_column`` takes the first field as the series id; ``label_column``
    takes the next one as its class label.
    """
    path = Path(path)
    rows = []
    with open(path, encoding="utf-8", newline="") as fh:
        for lineno, fields in enumerate(csv.reader(fh), start=1):
            if header and lineno == 1:
                continue
            if not fields or all(not f.strip() for f in fields):
                continue
            sid = len(rows)
            label = None
            if id_column:
                sid, fields = fields[0].strip(), fields[1:]
            if label_column:
                if not fields:
                    raise ParseError("missing label field", path, lineno)
                label, fields = fields[0].strip(), fields[1:]
            values = _parse_values(fields, path, lineno)
            rows.append((lineno, values, label, sid))
    return _build(rows, path, znorm)


def load_dataset(path, header: bool = False, id_column: bool = False,
                 labels: bool = False, znorm: bool = False) -> Dataset:
    """Dispatch on the file: ``.tsv`` files are UCR splits, anything else CSV."""
    path = Path(path)
    if path.suffix.lower() == ".tsv":
        return load_ucr_tsv(path, znorm=znorm)
    return load_csv_series(path, header=header, id_column=id_column,
                           label_column=labels, znorm=znorm)


_RECORDS_KEY = {"cluster": "assignments", "bench": "rows"}
_CSV_HEADER = {"id": "series_id"}


@dataclass
class ResultDocument:
    """A command's output: a header plus a free-form payload.

    ``records`` is the tabular part written one row per record in CSV
    (``assignments`` for clustering, ``rows`` for benchmarks). Without
    records the payload itself is the single CSV row.
    """

    command: str
    measure: dict | None = None
    payload: dict[str, Any] = field(default_factory=dict)
    records: list[dict[str, Any]] = field(default_factory=list)
    tool_version: str = __version__

    def to_dict(self) -> dict:
        doc = {"tool_version": self.tool_version, "command": self.command}
        if self.measure is not None:
            doc["measure"] = self.measure
        doc.update(self.payload)
        if self.records:
            doc[_RECORDS_KEY.get(self.command, "records")] = self.records
        return doc

    @classmethod
    def from_dict(cls, doc: dict) -> "ResultDocument":
        doc = dict(doc)
        tool_version = doc.pop("tool_version")
        command = doc.pop("command")
        measure = doc.pop("measure", None)
        records = doc.pop(_RECORDS_KEY.get(command, "records"), [])
        return cls(command, measure, doc, records, tool_version)


def _json_default(obj):
    # numpy scalars and arrays
    if hasattr(obj, "tolist"):
        return obj.tolist()
    raise TypeError(f"{type(obj).__name__} is not JSON serializable")


def render_result(doc: ResultDocument, format: str = "json") -> str:
    if format == "json":
        return json.dumps(doc.to_dict(), indent=2, default=_json_default, allow_nan=False) + "\n"
    if format == "csv":
        records = doc.records or [doc.payload]
        columns = list(records[0])
        buf = _io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow([_CSV_HEADER.get(c, c) for c in columns])
        for rec in records:
            writer.writerow([format_number(rec.get(c)) for c in columns])
        return buf.getvalue()
    raise DomainError(f"unknown output format {format!r}")


def write_result(doc: ResultDocument, path, format: str = "json") -> None:
    text = render_result(doc, format)
    try:
        Path(path).write_text(text, encoding="utf-8")
    except OSError as exc:
        raise OSError(f"cannot write result to {path}: {exc.strerror or exc}") from exc


def read_result(path, format: str = "json"):
    """Inverse of :func:`write_result`.

    JSON gives back the :class:`ResultDocument`; CSV gives the list of
    records with numeric fields converted back to int or float.
    """
    text = Path(path).read_text(encoding="utf-8")
    if format == "json":
        return ResultDocument.from_dict(json.loads(text))
    if format == "csv":
        reader = csv.DictReader(_io.StringIO(text))
        return [{k: _parse_cell(v) for k, v in row.items()} for row in reader]
    raise DomainError(f"unknown output format {format!r}")


def _parse_cell(text: str):
    if text == "":
        return None
    for conv in (int, float):
        try:
            return conv(text)
        except ValueError:
            pass
    return text
