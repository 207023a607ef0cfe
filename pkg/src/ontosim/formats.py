"""Number formatting and square-matrix CSV/JSON I/O."""
from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass
from decimal import ROUND_HALF_UP, Decimal
from os import PathLike
from pathlib import Path
from typing import Sequence

import numpy as np

from .errors import FormatError

__all__ = [
    "format_number",
    "round_half_away",
    "LabeledMatrix",
    "read_matrix_csv",
    "load_matrix_csv",
    "matrix_to_csv",
    "matrix_to_json",
    "CellDelta",
    "ComparisonReport",
    "compare_matrices",
]


def round_half_away(x: float, precision: int) -> Decimal:
    """Round to ``precision`` decimals, ties away from zero.

    Works on the shortest decimal repr of ``x`` so 0.0005 rounds to 0.001
    rather than following its binary expansion.
    """
    q = Decimal(1).scaleb(-precision)
    return Decimal(repr(float(x))).quantize(q, rounding=ROUND_HALF_UP)


def format_number(x: float, precision: int = 3) -> str:
    s = str(round_half_away(x, precision))
    return "0" + s[2:] if s.startswith("-0") and Decimal(s) == 0 else s


@dataclass(frozen=True)
class LabeledMatrix:
    labels: tuple[str, ...]
    values: np.ndarray
    # decimals printed in each cell of the source text; None for computed matrices
    decimals: np.ndarray | None = None


def read_matrix_csv(text: str) -> LabeledMatrix:
    rows = [r for r in csv.reader(io.StringIO(text)) if any(c.strip() for c in r)]
    if not rows:
        raise FormatError("empty matrix CSV")
    header = [c.strip() for c in rows[0][1:]]
    body = rows[1:]
    if len(body) != len(header):
        raise FormatError(f"matrix is not square: {len(header)} columns, {len(body)} rows")
    row_labels = [r[0].strip() for r in body]
    if set(row_labels) != set(header) or len(set(header)) != len(header):
        raise FormatError("row and column labels differ")
    order = [row_labels.index(h) for h in header]
    values = np.empty((len(header), len(header)))
    decimals = np.zeros((len(header), len(header)), dtype=int)
    for i, ri in enumerate(order):
        cells = body[ri][1:]
        if len(cells) != len(header):
            raise FormatError(f"row {row_labels[ri]!r} has {len(cells)} cells")
        for j, cell in enumerate(cells):
            cell = cell.strip()
            try:
                values[i, j] = float(cell)
            except ValueError:
                raise FormatError(f"bad number {cell!r} in row {row_labels[ri]!r}") from None
            decimals[i, j] = len(cell.partition(".")[2])
    return LabeledMatrix(tuple(header), values, decimals)


def load_matrix_csv(path: str | PathLike[str]) -> LabeledMatrix:
    return read_matrix_csv(Path(path).read_text(encoding="utf-8"))


def matrix_to_csv(labels: Sequence[str], values: np.ndarray, precision: int = 3) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["", *labels])
    for label, row in zip(labels, values):
        w.writerow([label, *(format_number(v, precision) for v in row)])
    return buf.getvalue()


def matrix_to_json(
    labels: Sequence[str], values: np.ndarray, precision: int = 3, **meta
) -> str:
    doc = {
        **meta,
        "nodes": list(labels),
        "matrix": [[float(format_number(v, precision)) for v in row] for row in values],
    }
    return json.dumps(doc, indent=2) + "\n"


@dataclass(frozen=True)
class CellDelta:
    row: str
    col: str
    ours: Decimal
    baseline: Decimal

    @property
    def delta(self) -> Decimal:
        return self.ours - self.baseline


@dataclass(frozen=True)
class ComparisonReport:
    cells: tuple[CellDelta, ...]

    @property
    def max_abs_delta(self) -> Decimal:
        return max((abs(c.delta) for c in self.cells), default=Decimal(0))

    def cell(self, row: str, col: str) -> CellDelta:
        for c in self.cells:
            if (c.row, c.col) == (row, col):
                return c
        raise KeyError((row, col))

    def render(self) -> str:
        lines = ["row,col,ours,baseline,delta"]
        for c in self.cells:
            lines.append(f"{c.row},{c.col},{c.ours},{c.baseline},{c.delta}")
        worst = max(self.cells, key=lambda c: abs(c.delta), default=None)
        where = f" at ({worst.row}, {worst.col})" if worst is not None and worst.delta else ""
        lines.append(f"max_abs_delta={self.max_abs_delta}{where}")
        return "\n".join(lines) + "\n"


def compare_matrices(
    ours: LabeledMatrix, baseline: LabeledMatrix, precision: int = 3
) -> ComparisonReport:
    """Cell-by-cell difference, in the baseline's label order.

    Our value is rounded to the finer of ``precision`` and the decimals the
    baseline printed for that cell; the baseline is taken as printed.
    """
    pos = {label: i for i, label in enumerate(ours.labels)}
    missing = [lb for lb in baseline.labels if lb not in pos]
    if missing:
        raise FormatError(f"baseline labels not in our matrix: {', '.join(missing)}")
    cells = []
    for i, r in enumerate(baseline.labels):
        for j, c in enumerate(baseline.labels):
            printed = int(baseline.decimals[i, j]) if baseline.decimals is not None else precision
            places = max(precision, printed)
            mine = round_half_away(ours.values[pos[r], pos[c]], places)
            theirs = round_half_away(baseline.values[i, j], printed)
            cells.append(CellDelta(r, c, mine, theirs))
    return ComparisonReport(tuple(cells))
