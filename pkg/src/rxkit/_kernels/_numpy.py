"""Vectorized numpy implementations of the hot kernels.

This backend is the reference implementation; the compiled extension in
``_native.pyx`` mirrors it operation-for-operation. Both must produce
identical outputs for identical inputs (integer labels exactly, float
arrays to the last bit, since the scalar arithmetic is the same), so any
reductions built on top of them are backend-independent.

Kernel contract
---------------
demap_square(frame, levels, scale)
    Nearest-point hard decision on a square lattice with per-axis
    amplitudes {-(L-1), ..., -1, +1, ..., L-1} * scale. Returns the int64
    symbol label per sample, where a label's high bit-half is the
    Gray-coded I level index and its low half the Gray-coded Q level
    index. Exact per-axis distance ties pick the smaller Gray code, which
    yields the smallest symbol label among equidistant points.

error_magnitudes(meas, ref)
    Euclidean distance |meas[k] - ref[k]| per symbol, float64.

count_bit_errors(a, b)
    Total number of differing bits between two int64 label arrays
    (labels < 256, i.e. at most 8 bits per symbol).
"""

from __future__ import annotations

import numpy as np

_POPCOUNT8 = np.array([bin(v).count("1") for v in range(256)], dtype=np.uint8)


def demap_square(frame: np.ndarray, levels: int, scale: float) -> np.ndarray:
    gray = np.arange(levels, dtype=np.int64)
    gray ^= gray >> 1
    half_bits = int(levels - 1).bit_length()
    gi = _nearest_gray(frame.real, levels, scale, gray)
    gq = _nearest_gray(frame.imag, levels, scale, gray)
    return (gi << half_bits) | gq


def _nearest_gray(u: np.ndarray, levels: int, scale: float, gray: np.ndarray) -> np.ndarray:
    # Level index coordinate: level j sits at t == j, decision ties at *.5.
    t = (u / scale + (levels - 1)) * 0.5
    lo = np.clip(np.floor(t), 0, levels - 1).astype(np.int64)
    hi = np.minimum(lo + 1, levels - 1)
    d_lo = np.abs(t - lo)
    d_hi = np.abs(hi - t)
    pick_hi = (d_hi < d_lo) | ((d_hi == d_lo) & (gray[hi] < gray[lo]))
    return np.where(pick_hi, gray[hi], gray[lo])


def error_magnitudes(meas: np.ndarray, ref: np.ndarray) -> np.ndarray:
    # sqrt(di^2 + dq^2) rather than np.hypot: identical rounding to the
    # native kernel's scalar arithmetic.
    d = meas - ref
    return np.sqrt(d.real * d.real + d.imag * d.imag)


def count_bit_errors(a: np.ndarray, b: np.ndarray) -> int:
    return int(_POPCOUNT8[(a ^ b)].sum())
