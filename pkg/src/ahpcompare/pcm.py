"""Pairwise comparison matrices: the labeled rating grid both methods consume.

Matrices are stored at full float precision. Reciprocity (a_ji == 1/a_ij) is
deliberately not required, since the max-min method is built for matrices
where both directions of a pair are rated independently.
"""
from __future__ import annotations

import csv
import io
import json
import re
from dataclasses import dataclass, field
from typing import Iterable, Literal, Sequence

import numpy as np

__all__ = [
    "PairwiseMatrix",
    "RatingScale",
    "Issue",
    "ValidationReport",
    "PcmError",
    "ParseError",
    "RaggedRow",
    "HeaderMismatch",
    "InvalidMatrix",
    "validate",
    "parse_matrix",
    "serialize_matrix",
    "load_matrix",
    "from_rows",
]

Format = Literal["csv", "json"]

MATURITY_LEVELS = {
    1: "Low maturity",
    3: "Moderate maturity",
    5: "High maturity",
    7: "Very high maturity",
    9: "Extra high maturity",
}
INTERMEDIATE = "Intermediate values between levels"


class PcmError(ValueError):
    """Base class for matrix construction, parsing and validation failures."""


class ParseError(PcmError):
    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        self.line = line
        self.column = column
        where = ""
        if line is not None:
            where = f"line {line}" + (f", column {column}" if column is not None else "")
            where += ": "
        super().__init__(where + message)


class RaggedRow(ParseError):
    pass


class HeaderMismatch(ParseError):
    pass


class InvalidMatrix(PcmError):
    def __init__(self, report: "ValidationReport"):
        self.report = report
        super().__init__("; ".join(str(i) for i in report.errors))


@dataclass(frozen=True, eq=False)
class PairwiseMatrix:
    """Labeled square grid of ratings ``a_ij`` (row i rated against column j).

    The constructor only checks that the data is a 2-D grid with one label per
    row; every other invariant is reported by :func:`validate`.
    """

    labels: tuple[str, ...]
    entries: np.ndarray

    def __post_init__(self):
        labels = tuple(str(x) for x in self.labels)
        entries = np.array(self.entries, dtype=float, copy=True)
        if entries.ndim != 2:
            raise PcmError(f"entries must be a 2-D grid, got {entries.ndim}-D")
        if len(labels) != entries.shape[0]:
            raise PcmError(f"{len(labels)} labels for {entries.shape[0]} rows")
        entries.setflags(write=False)
        object.__setattr__(self, "labels", labels)
        object.__setattr__(self, "entries", entries)

    @property
    def n(self) -> int:
        return len(self.labels)

    def index(self, label: str) -> int:
        return self.labels.index(label)

    def __getitem__(self, key: tuple[str, str]) -> float:
        row, col = key
        return float(self.entries[self.index(row), self.index(col)])

    def permuted(self, order: Sequence[int]) -> "PairwiseMatrix":
        """Reorder criteria; rows and columns move together."""
        order = list(order)
        return PairwiseMatrix(
            tuple(self.labels[i] for i in order),
            self.entries[np.ix_(order, order)],
        )

    def __eq__(self, other):
        if not isinstance(other, PairwiseMatrix):
            return NotImplemented
        return self.labels == other.labels and np.array_equal(self.entries, other.entries)

    def __hash__(self):
        return hash((self.labels, self.entries.tobytes()))

    def __repr__(self):
        return f"PairwiseMatrix(n={self.n}, labels={list(self.labels)})"


@dataclass(frozen=True)
class RatingScale:
    """The 1-9 maturity grading scale.

    ``strictness="warn"`` reports off-scale ratings as warnings, ``"enforce"``
    makes them errors.
    """

    strictness: Literal["warn", "enforce"] = "warn"
    minimum: int = 1
    maximum: int = 9

    def __post_init__(self):
        if self.strictness not in ("warn", "enforce"):
            raise ValueError(f"unknown strictness {self.strictness!r}")

    def contains(self, value: float) -> bool:
        return float(value).is_integer() and self.minimum <= value <= self.maximum

    def describe(self, value: int) -> str:
        if not self.contains(value):
            raise ValueError(f"{value} is not on the scale")
        return MATURITY_LEVELS.get(int(value), INTERMEDIATE)


@dataclass(frozen=True)
class Issue:
    code: str
    message: str
    row: int | None = None  # 1-based
    col: int | None = None

    def __str__(self):
        at = f" at ({self.row},{self.col})" if self.row is not None else ""
        return f"{self.code}{at}: {self.message}"


@dataclass(frozen=True)
class ValidationReport:
    errors: tuple[Issue, ...] = field(default_factory=tuple)
    warnings: tuple[Issue, ...] = field(default_factory=tuple)

    @property
    def valid(self) -> bool:
        return not self.errors

    def codes(self) -> list[str]:
        return [i.code for i in self.errors + self.warnings]


def validate(matrix: PairwiseMatrix, scale: RatingScale | None = None) -> ValidationReport:
    """Check every matrix invariant and return all violations found."""
    scale = scale or RatingScale()
    errors: list[Issue] = []
    warnings: list[Issue] = []
    a = matrix.entries
    rows, cols = a.shape

    seen: dict[str, int] = {}
    for i, label in enumerate(matrix.labels, start=1):
        if not label.strip():
            errors.append(Issue("EmptyLabel", "criterion label is empty", i, None))
        if label in seen:
            errors.append(Issue("DuplicateLabel", f"{label!r} repeats label {seen[label]}", i, None))
        else:
            seen[label] = i

    if rows != cols:
        errors.append(Issue("NonSquare", f"matrix is {rows}x{cols}"))
        return ValidationReport(tuple(errors), tuple(warnings))
    if rows < 2:
        errors.append(Issue("TooSmall", f"need at least 2 criteria, got {rows}"))

    for i in range(rows):
        for j in range(cols):
            v = float(a[i, j])
            if not np.isfinite(v) or v <= 0:
                errors.append(Issue("NonPositiveEntry", f"rating {v!r} must be positive", i + 1, j + 1))
                continue
            if i == j and v != 1.0:
                errors.append(Issue("DiagonalNotOne", f"diagonal rating is {v!r}", i + 1, j + 1))
                continue
            if not scale.contains(v):
                issue = Issue("OffScaleEntry", f"rating {v!r} outside {scale.minimum}..{scale.maximum}", i + 1, j + 1)
                (errors if scale.strictness == "enforce" else warnings).append(issue)
    return ValidationReport(tuple(errors), tuple(warnings))


_NUMBER = re.compile(r"[+-]?(?:\d+(?:\.\d*)?|\.\d+)(?:[eE][+-]?\d+)?")


def _parse_number(text: str, line: int, column: int) -> float:
    if not _NUMBER.fullmatch(text):
        raise ParseError(f"not a number: {text!r}", line, column)
    return float(text)


def _parse_csv(text: str) -> PairwiseMatrix:
    lines = [row for row in csv.reader(io.StringIO(text))]
    numbered = [(k, row) for k, row in enumerate(lines, start=1) if any(c.strip() for c in row)]
    if not numbered:
        raise ParseError("empty input", 1, 1)
    _, header = numbered[0]
    col_labels = [c.strip() for c in header[1:]]
    if not col_labels:
        raise ParseError("header has no column labels", 1, 2)
    row_labels: list[str] = []
    grid: list[list[float]] = []
    for lineno, row in numbered[1:]:
        if len(row) != len(header):
            raise RaggedRow(f"expected {len(header) - 1} ratings, got {len(row) - 1}", lineno, len(row))
        row_labels.append(row[0].strip())
        grid.append([_parse_number(c.strip(), lineno, k) for k, c in enumerate(row[1:], start=2)])
    if row_labels != col_labels:
        raise HeaderMismatch(
            f"row labels {row_labels} differ from column labels {col_labels}",
            numbered[1][0] if len(numbered) > 1 else 1,
            1,
        )
    return PairwiseMatrix(tuple(row_labels), np.array(grid, dtype=float).reshape(len(grid), len(col_labels)))


def _parse_json(text: str) -> PairwiseMatrix:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, exc.lineno, exc.colno) from None
    if not isinstance(doc, dict) or "labels" not in doc or "rows" not in doc:
        raise ParseError("expected an object with 'labels' and 'rows'")
    labels, rows = doc["labels"], doc["rows"]
    if not isinstance(labels, list) or not all(isinstance(s, str) for s in labels):
        raise ParseError("'labels' must be an array of strings")
    if not isinstance(rows, list) or not all(isinstance(r, list) for r in rows):
        raise ParseError("'rows' must be an array of arrays")
    if len(rows) != len(labels):
        raise HeaderMismatch(f"{len(labels)} labels but {len(rows)} rows")
    for i, r in enumerate(rows, start=1):
        if len(r) != len(labels):
            raise RaggedRow(f"row {i} has {len(r)} ratings, expected {len(labels)}")
        for j, v in enumerate(r, start=1):
            if isinstance(v, bool) or not isinstance(v, (int, float)):
                raise ParseError(f"rating at ({i},{j}) is not a number: {v!r}")
    return PairwiseMatrix(tuple(labels), np.array(rows, dtype=float).reshape(len(rows), len(labels)))


def parse_matrix(text: str, format: Format = "csv", scale: RatingScale | None = None) -> PairwiseMatrix:
    """Parse a matrix and validate it; raises on any validation error."""
    if format == "csv":
        matrix = _parse_csv(text)
    elif format == "json":
        matrix = _parse_json(text)
    else:
        raise ValueError(f"unknown format {format!r}")
    report = validate(matrix, scale)
    if not report.valid:
        raise InvalidMatrix(report)
    return matrix


def _number_out(v: float) -> int | float:
    return int(v) if v.is_integer() and abs(v) < 2**53 else v


def _fmt(v: float) -> str:
    return str(_number_out(float(v)))


def serialize_matrix(matrix: PairwiseMatrix, format: Format = "csv") -> str:
    if format == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow([""] + list(matrix.labels))
        for label, row in zip(matrix.labels, matrix.entries):
            writer.writerow([label] + [_fmt(v) for v in row])
        return buf.getvalue()
    if format == "json":
        doc = {
            "labels": list(matrix.labels),
            "rows": [[_number_out(float(v)) for v in row] for row in matrix.entries],
        }
        return json.dumps(doc, indent=2) + "\n"
    raise ValueError(f"unknown format {format!r}")


def load_matrix(path, scale: RatingScale | None = None) -> PairwiseMatrix:
    """Read a matrix file; the format follows the extension (.json, else CSV)."""
    path = str(path)
    with open(path, encoding="utf-8") as fh:
        text = fh.read()
    fmt: Format = "json" if path.lower().endswith(".json") else "csv"
    return parse_matrix(text, fmt, scale)


def from_rows(labels: Iterable[str], rows) -> PairwiseMatrix:
    return PairwiseMatrix(tuple(labels), np.asarray(rows, dtype=float))
