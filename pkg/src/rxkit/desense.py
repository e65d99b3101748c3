"""Receiver sensitivity logs and per-antenna desense (ON - OFF deltas).

Sensitivity CSV schema: header ``scenario,band,freq_mhz,<antenna>_dbm[,...]``
with one record per line, decimal point '.', UTF-8, LF or CRLF. A positive
delta means the aggressor scenario degraded the receiver (its sensitivity
level rose toward 0 dBm).

Computation is carried in full precision; rounding to the 2 decimals used
in the emitted desense CSV is presentation only.
"""

from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass

from .errors import FormatError, InputError, PairingError

_FIXED_COLUMNS = ("scenario", "band", "freq_mhz")
_ANTENNA_SUFFIX = "_dbm"

# Exact-match tolerance for pairing frequencies: 1e-6 MHz, implemented by
# keying on integer micro-MHz.
_FREQ_QUANTUM_MHZ = 1e-6


@dataclass(frozen=True)
class SensitivityRecord:
    scenario: str
    band: str
    freq_mhz: float
    antenna_dbm: dict[str, float]

    def __post_init__(self):
        if not (math.isfinite(self.freq_mhz) and self.freq_mhz > 0):
            raise InputError(f"freq_mhz must be finite and > 0, got {self.freq_mhz}")
        if not self.antenna_dbm:
            raise InputError("record needs at least one antenna entry")


@dataclass(frozen=True)
class DesenseRow:
    band: str
    freq_mhz: float
    delta_db: dict[str, float]


@dataclass(frozen=True)
class AntennaSummary:
    min_db: float
    max_db: float
    mean_db: float
    worst_freq_mhz: float


@dataclass(frozen=True)
class DesenseSummary:
    per_antenna: dict[str, AntennaSummary]
    worst_antenna: str


def _freq_key(freq_mhz: float) -> int:
    return round(freq_mhz / _FREQ_QUANTUM_MHZ)


def _fmt_key(band: str, freq_mhz: float) -> str:
    return f"{band}@{freq_mhz:g}"


def parse_sensitivity_csv(text) -> list[SensitivityRecord]:
    """Parse sensitivity records from a CSV string or text file object."""
    if hasattr(text, "read"):
        text = text.read()
    lines = text.splitlines()
    if not lines:
        raise FormatError("empty file: missing header", line=1)

    header = next(csv.reader(io.StringIO(lines[0])))
    if tuple(header[: len(_FIXED_COLUMNS)]) != _FIXED_COLUMNS:
        raise FormatError(
            f"header must start with {','.join(_FIXED_COLUMNS)}, got {lines[0]!r}", line=1
        )
    antenna_cols = header[len(_FIXED_COLUMNS) :]
    antennas = []
    for col in antenna_cols:
        if not col.endswith(_ANTENNA_SUFFIX) or col == _ANTENNA_SUFFIX:
            raise FormatError(f"antenna column {col!r} must be named <antenna>{_ANTENNA_SUFFIX}", line=1)
        antennas.append(col[: -len(_ANTENNA_SUFFIX)])
    if not antennas:
        raise FormatError("header declares no antenna columns", line=1)

    records: list[SensitivityRecord] = []
    seen: set[tuple[str, str, int]] = set()
    for lineno, row in enumerate(csv.reader(lines[1:]), start=2):
        if not row:
            continue
        if len(row) != len(header):
            raise FormatError(
                f"expected {len(header)} fields, got {len(row)}", line=lineno
            )
        scenario, band = row[0], row[1]
        freq_mhz = _parse_number(row[2], "freq_mhz", lineno)
        levels = {
            name: _parse_number(cell, f"{name}{_ANTENNA_SUFFIX}", lineno)
            for name, cell in zip(antennas, row[3:])
        }
        key = (scenario, band, _freq_key(freq_mhz))
        if key in seen:
            raise FormatError(
                f"duplicate record for ({scenario}, {band}, {freq_mhz:g})", line=lineno
            )
        seen.add(key)
        try:
            records.append(
                SensitivityRecord(scenario=scenario, band=band, freq_mhz=freq_mhz, antenna_dbm=levels)
            )
        except InputError as exc:
            raise FormatError(str(exc), line=lineno) from exc
    return records


def _parse_number(cell: str, column: str, lineno: int) -> float:
    try:
        value = float(cell)
    except ValueError:
        raise FormatError(f"non-numeric {column} value {cell!r}", line=lineno) from None
    if not math.isfinite(value):
        raise FormatError(f"non-finite {column} value {cell!r}", line=lineno)
    return value


def emit_sensitivity_csv(records: list[SensitivityRecord]) -> str:
    """Render records back to CSV at full precision (parse round-trips)."""
    if not records:
        raise InputError("no records to emit")
    antennas = list(records[0].antenna_dbm)
    out = [",".join(_FIXED_COLUMNS + tuple(f"{a}{_ANTENNA_SUFFIX}" for a in antennas))]
    for rec in records:
        if list(rec.antenna_dbm) != antennas:
            raise InputError(
                f"record {_fmt_key(rec.band, rec.freq_mhz)} has antennas "
                f"{list(rec.antenna_dbm)}, expected {antennas}"
            )
        cells = [rec.scenario, rec.band, repr(rec.freq_mhz)]
        cells += [repr(rec.antenna_dbm[a]) for a in antennas]
        out.append(",".join(cells))
    return "\n".join(out) + "\n"


def compute_desense(
    off: list[SensitivityRecord], on: list[SensitivityRecord]
) -> list[DesenseRow]:
    """Per-antenna ON - OFF sensitivity deltas, matched on (band, freq)."""
    off_map = _index_by_key(off, "off")
    on_map = _index_by_key(on, "on")
    missing_in_on = sorted(set(off_map) - set(on_map))
    missing_in_off = sorted(set(on_map) - set(off_map))
    if missing_in_on or missing_in_off:
        parts = []
        for band, fkey in missing_in_on:
            parts.append(f"{_fmt_key(band, fkey * _FREQ_QUANTUM_MHZ)} missing in on")
        for band, fkey in missing_in_off:
            parts.append(f"{_fmt_key(band, fkey * _FREQ_QUANTUM_MHZ)} missing in off")
        raise PairingError("unmatched keys: " + "; ".join(parts))

    rows = []
    for key in sorted(off_map):
        rec_off, rec_on = off_map[key], on_map[key]
        if set(rec_off.antenna_dbm) != set(rec_on.antenna_dbm):
            raise PairingError(
                f"{_fmt_key(rec_off.band, rec_off.freq_mhz)}: antenna sets differ "
                f"(off has {sorted(rec_off.antenna_dbm)}, on has {sorted(rec_on.antenna_dbm)})"
            )
        delta = {
            name: rec_on.antenna_dbm[name] - rec_off.antenna_dbm[name]
            for name in rec_off.antenna_dbm
        }
        rows.append(DesenseRow(band=rec_off.band, freq_mhz=rec_off.freq_mhz, delta_db=delta))
    return rows


def _index_by_key(
    records: list[SensitivityRecord], side: str
) -> dict[tuple[str, int], SensitivityRecord]:
    indexed: dict[tuple[str, int], SensitivityRecord] = {}
    for rec in records:
        key = (rec.band, _freq_key(rec.freq_mhz))
        if key in indexed:
            raise PairingError(
                f"duplicate (band, freq) {_fmt_key(rec.band, rec.freq_mhz)} in {side} records"
            )
        indexed[key] = rec
    return indexed


def summarize(rows: list[DesenseRow]) -> DesenseSummary:
    """Per-antenna min/max/mean delta and the worst-case frequency."""
    if not rows:
        raise InputError("no desense rows to summarize")
    antennas: list[str] = []
    for row in rows:
        for name in row.delta_db:
            if name not in antennas:
                antennas.append(name)
    per_antenna = {}
    for name in antennas:
        deltas = [(row.delta_db[name], row.freq_mhz) for row in rows if name in row.delta_db]
        values = [d for d, _ in deltas]
        max_db = max(values)
        worst_freq = min(freq for value, freq in deltas if value == max_db)
        per_antenna[name] = AntennaSummary(
            min_db=min(values),
            max_db=max_db,
            mean_db=sum(values) / len(values),
            worst_freq_mhz=worst_freq,
        )
    worst = max(per_antenna, key=lambda name: (per_antenna[name].max_db, name))
    return DesenseSummary(per_antenna=per_antenna, worst_antenna=worst)


def emit_desense_csv(rows: list[DesenseRow]) -> str:
    """Render desense rows to CSV with deltas rounded to 2 decimals."""
    if not rows:
        raise InputError("no desense rows to emit")
    antennas = list(rows[0].delta_db)
    out = [",".join(["band", "freq_mhz"] + [f"{a}_desense_db" for a in antennas])]
    for row in rows:
        if list(row.delta_db) != antennas:
            raise InputError(
                f"row {_fmt_key(row.band, row.freq_mhz)} has antennas "
                f"{list(row.delta_db)}, expected {antennas}"
            )
        cells = [row.band, f"{row.freq_mhz:g}"]
        cells += [f"{row.delta_db[a]:.2f}" for a in antennas]
        out.append(",".join(cells))
    return "\n".join(out) + "\n"
