"""Power and ratio conversions, plus the complex baseband frame convention.

Conventions used throughout the package:

* absolute powers are floats in dBm (``*_dbm``), ratios are floats in dB
  (``*_db``); linear values appear only inside computations,
* an IQ sample is a Python/numpy complex number with I on the real axis
  and Q on the imaginary axis,
* a symbol frame is a 1-D complex128 ndarray of IQ samples.
"""

from __future__ import annotations

import numpy as np

from .errors import InputError


def dbm_to_mw(power_dbm: float) -> float:
    """Absolute power in dBm to milliwatts."""
    _require_finite(power_dbm, "power_dbm")
    return 10.0 ** (power_dbm / 10.0)


def mw_to_dbm(power_mw: float) -> float:
    """Milliwatts to dBm; power must be strictly positive."""
    if not power_mw > 0:
        raise ValueError(f"power_mw must be > 0, got {power_mw}")
    return 10.0 * np.log10(power_mw)


def db_to_linear(ratio_db: float) -> float:
    """dB ratio to linear power ratio."""
    _require_finite(ratio_db, "ratio_db")
    return 10.0 ** (ratio_db / 10.0)


def linear_to_db(ratio: float) -> float:
    """Linear power ratio to dB; ratio must be strictly positive."""
    if not ratio > 0:
        raise ValueError(f"ratio must be > 0, got {ratio}")
    return 10.0 * np.log10(ratio)


def _require_finite(value: float, name: str) -> None:
    if not np.isfinite(value):
        raise ValueError(f"{name} must be finite, got {value}")


def as_symbol_frame(samples, *, allow_empty: bool = True) -> np.ndarray:
    """Coerce `samples` to a 1-D complex128 frame and validate it.

    Accepts any sequence of complex values (or a (i, q) pair of real
    sequences zipped by the caller). Rejects non-finite samples.
    """
    frame = np.asarray(samples, dtype=np.complex128)
    if frame.ndim != 1:
        raise InputError(f"symbol frame must be 1-D, got shape {frame.shape}")
    if frame.size == 0 and not allow_empty:
        raise InputError("symbol frame must be non-empty")
    if frame.size and not np.all(np.isfinite(frame)):
        raise InputError("symbol frame contains non-finite samples")
    return frame


def iq_frame(i, q) -> np.ndarray:
    """Build a symbol frame from separate in-phase and quadrature arrays."""
    i = np.asarray(i, dtype=np.float64)
    q = np.asarray(q, dtype=np.float64)
    if i.shape != q.shape:
        raise InputError(f"i and q lengths differ: {i.shape} vs {q.shape}")
    return as_symbol_frame(i + 1j * q)
