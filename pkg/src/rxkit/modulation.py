"""Square-lattice constellations with per-axis Gray bit mapping.

A symbol label is an integer in [0, order) equal to the symbol's bit
group read MSB-first. The first half of the group selects the in-phase
level, the second half the quadrature level; each half is the
binary-reflected Gray code of the level index, so lattice neighbours
differ in exactly one bit. Level indices run in ascending amplitude over
{-(L-1), ..., -1, +1, ..., +(L-1)} where L is the number of levels per
axis.

Two normalizations are provided: ``RAW`` keeps the integer lattice
(QPSK at (+/-1, +/-1)), ``UNIT_POWER`` rescales so the mean symbol power
is exactly 1.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from . import _kernels
from .errors import InputError
from .units import as_symbol_frame


class ModulationScheme(enum.Enum):
    QPSK = 2
    QAM16 = 4
    QAM64 = 6
    QAM256 = 8

    @property
    def bits_per_symbol(self) -> int:
        return self.value

    @property
    def order(self) -> int:
        return 1 << self.value

    @property
    def levels_per_axis(self) -> int:
        return 1 << (self.value // 2)

    @classmethod
    def from_name(cls, name: str) -> "ModulationScheme":
        try:
            return cls[name.strip().upper()]
        except KeyError:
            valid = ", ".join(m.name for m in cls)
            raise InputError(f"unknown modulation scheme {name!r} (expected one of {valid})")


class NormalizationMode(enum.Enum):
    RAW = "raw"
    UNIT_POWER = "unit_power"


@dataclass(frozen=True, eq=False)
class ConstellationSpec:
    """An ideal constellation: points indexed by symbol label.

    ``points[label]`` is the ideal IQ point for the bit group whose
    MSB-first integer value is ``label``; ``ref_rms`` is the RMS
    magnitude over all points (the EVM normalization reference).
    """

    scheme: ModulationScheme
    mode: NormalizationMode
    points: np.ndarray
    ref_rms: float
    scale: float

    @property
    def order(self) -> int:
        return self.scheme.order

    @property
    def bits_per_symbol(self) -> int:
        return self.scheme.bits_per_symbol

    def labels_for_bits(self, bits: np.ndarray) -> np.ndarray:
        """Pack groups of bits_per_symbol bits (MSB first) into labels."""
        k = self.bits_per_symbol
        bits = _check_bits(bits, k)
        weights = 1 << np.arange(k - 1, -1, -1, dtype=np.int64)
        return bits.reshape(-1, k) @ weights

    def bits_for_labels(self, labels: np.ndarray) -> np.ndarray:
        """Unpack labels back into a flat MSB-first bit array."""
        k = self.bits_per_symbol
        labels = np.asarray(labels, dtype=np.int64)
        shifts = np.arange(k - 1, -1, -1, dtype=np.int64)
        return ((labels[:, None] >> shifts) & 1).astype(np.uint8).reshape(-1)


def _check_bits(bits, bits_per_symbol: int) -> np.ndarray:
    bits = np.asarray(bits)
    if bits.ndim != 1:
        raise InputError(f"bit sequence must be 1-D, got shape {bits.shape}")
    if bits.size % bits_per_symbol != 0:
        raise InputError(
            f"bit count {bits.size} is not divisible by {bits_per_symbol} bits per symbol"
        )
    bits = bits.astype(np.int64, copy=False)
    if bits.size and not np.all((bits == 0) | (bits == 1)):
        raise InputError("bit sequence may contain only 0 and 1")
    return bits


def _gray_decode(g: np.ndarray) -> np.ndarray:
    out = g.copy()
    shift = 1
    while (out >> shift).any():
        out ^= out >> shift
        shift *= 2
    return out


@lru_cache(maxsize=None)
def ideal_points(
    scheme: ModulationScheme, mode: NormalizationMode = NormalizationMode.UNIT_POWER
) -> ConstellationSpec:
    """Construct the ideal constellation for a scheme and normalization."""
    L = scheme.levels_per_axis
    half_bits = scheme.bits_per_symbol // 2
    labels = np.arange(scheme.order, dtype=np.int64)
    level_i = _gray_decode(labels >> half_bits)
    level_q = _gray_decode(labels & (L - 1))
    points = (2 * level_i - (L - 1)) + 1j * (2 * level_q - (L - 1))
    if mode is NormalizationMode.UNIT_POWER:
        raw_rms = math.sqrt(2.0 * (L * L - 1) / 3.0)
        scale = 1.0 / raw_rms
        points = points * scale
    else:
        scale = 1.0
    points.flags.writeable = False
    ref_rms = float(np.sqrt(np.mean(points.real**2 + points.imag**2)))
    return ConstellationSpec(scheme=scheme, mode=mode, points=points, ref_rms=ref_rms, scale=scale)


def modulate(bits, spec: ConstellationSpec) -> np.ndarray:
    """Map a bit sequence onto ideal constellation points."""
    labels = spec.labels_for_bits(bits)
    return spec.points[labels]


def hard_decision_labels(frame, spec: ConstellationSpec) -> np.ndarray:
    """Nearest-point decision per sample, returned as symbol labels.

    Exact ties (a sample equidistant from several points) resolve to the
    lowest label.
    """
    frame = as_symbol_frame(frame)
    return _kernels.demap_square(frame, spec.scheme.levels_per_axis, spec.scale)


def demodulate_hard(frame, spec: ConstellationSpec) -> tuple[np.ndarray, np.ndarray]:
    """Hard-decide every sample; returns (bits, decided ideal points)."""
    labels = hard_decision_labels(frame, spec)
    return spec.bits_for_labels(labels), spec.points[labels]
