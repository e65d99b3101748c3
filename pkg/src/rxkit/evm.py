"""Error vector magnitude over measured vs reference symbol frames.

The per-symbol error is the Euclidean distance between a measured IQ
sample and its reference point; ``evm_rms`` is the RMS of those
distances. The percentage form divides by the reference RMS magnitude,
which for the raw (+/-1, +/-1) QPSK lattice is sqrt(2) and for a
unit-power constellation is 1.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from . import _kernels
from .errors import InputError
from .modulation import ConstellationSpec, hard_decision_labels
from .units import as_symbol_frame


class EvmMode(enum.Enum):
    DATA_AIDED = "data-aided"
    DECISION_DIRECTED = "decision-directed"


@dataclass(frozen=True, eq=False)
class EvmReport:
    per_symbol_error: np.ndarray
    evm_rms: float
    evm_percent: float
    evm_db: float
    num_symbols: int
    mode: EvmMode
    ref_rms: float


def error_vector_magnitudes(meas, ref) -> np.ndarray:
    """Per-symbol error distances sqrt((dI)^2 + (dQ)^2)."""
    meas = as_symbol_frame(meas, allow_empty=False)
    ref = as_symbol_frame(ref, allow_empty=False)
    if meas.size != ref.size:
        raise InputError(f"frame lengths differ: meas has {meas.size}, ref has {ref.size}")
    return _kernels.error_magnitudes(meas, ref)


def evm_report(meas, ref, ref_rms: float, mode: EvmMode = EvmMode.DATA_AIDED) -> EvmReport:
    """Full EVM figures for a measured frame against a reference frame."""
    if not (math.isfinite(ref_rms) and ref_rms > 0):
        raise ValueError(f"ref_rms must be finite and > 0, got {ref_rms}")
    mags = error_vector_magnitudes(meas, ref)
    evm_rms = float(np.sqrt(np.mean(mags * mags)))
    evm_percent = evm_rms / ref_rms * 100.0
    evm_db = 20.0 * math.log10(evm_rms / ref_rms) if evm_percent > 0 else -math.inf
    return EvmReport(
        per_symbol_error=mags,
        evm_rms=evm_rms,
        evm_percent=evm_percent,
        evm_db=evm_db,
        num_symbols=mags.size,
        mode=mode,
        ref_rms=ref_rms,
    )


def evm_decision_directed(meas, spec: ConstellationSpec) -> EvmReport:
    """EVM against hard decisions, as a receiver without ground truth sees it."""
    meas = as_symbol_frame(meas, allow_empty=False)
    decided = spec.points[hard_decision_labels(meas, spec)]
    return evm_report(meas, decided, spec.ref_rms, mode=EvmMode.DECISION_DIRECTED)
