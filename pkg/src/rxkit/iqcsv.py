"""IQ sample CSV files: header ``i,q``, one sample per line."""

from __future__ import annotations

import csv
import io
import math

import numpy as np

from .errors import FormatError
from .units import iq_frame

_HEADER = ("i", "q")


def read_iq_csv(text) -> np.ndarray:
    """Parse an IQ CSV string or text file object into a symbol frame."""
    if hasattr(text, "read"):
        text = text.read()
    lines = text.splitlines()
    if not lines:
        raise FormatError("empty file: missing i,q header", line=1)
    header = tuple(next(csv.reader(io.StringIO(lines[0]))))
    if header != _HEADER:
        raise FormatError(f"header must be exactly 'i,q', got {lines[0]!r}", line=1)
    i_vals: list[float] = []
    q_vals: list[float] = []
    for lineno, row in enumerate(csv.reader(lines[1:]), start=2):
        if not row:
            continue
        if len(row) != 2:
            raise FormatError(f"expected 2 fields, got {len(row)}", line=lineno)
        for column, cell, dest in (("i", row[0], i_vals), ("q", row[1], q_vals)):
            try:
                value = float(cell)
            except ValueError:
                raise FormatError(f"non-numeric {column} value {cell!r}", line=lineno) from None
            if not math.isfinite(value):
                raise FormatError(f"non-finite {column} value {cell!r}", line=lineno)
            dest.append(value)
    return iq_frame(i_vals, q_vals)


def write_iq_csv(frame) -> str:
    """Render a symbol frame as IQ CSV text at full precision."""
    out = ["i,q"]
    for sample in np.asarray(frame, dtype=np.complex128):
        out.append(f"{float(sample.real)!r},{float(sample.imag)!r}")
    return "\n".join(out) + "\n"
