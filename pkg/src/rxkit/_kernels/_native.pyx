# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled implementations of the hot kernels.

Mirrors rxkit._kernels._numpy operation-for-operation; see that module
for the kernel contract. Single streaming pass per kernel, no temporary
arrays.
"""

import numpy as np

from libc.math cimport fabs, floor, sqrt


def demap_square(const double complex[::1] frame, int levels, double scale):
    cdef Py_ssize_t n = frame.shape[0]
    out = np.empty(n, dtype=np.int64)
    cdef long long[::1] labels = out
    cdef int half_bits = _bit_length(levels - 1)
    cdef Py_ssize_t k
    for k in range(n):
        labels[k] = (_nearest_gray(frame[k].real, levels, scale) << half_bits) | \
            _nearest_gray(frame[k].imag, levels, scale)
    return out


cdef inline long long _nearest_gray(double u, int levels, double scale) noexcept:
    cdef double t = (u / scale + (levels - 1)) * 0.5
    cdef double top = levels - 1
    # Clip in the float domain before casting: t can exceed integer range.
    cdef double f = floor(t)
    if f < 0:
        f = 0
    elif f > top:
        f = top
    cdef long long lo = <long long> f
    cdef long long hi = lo + 1
    if hi > levels - 1:
        hi = levels - 1
    cdef double d_lo = fabs(t - lo)
    cdef double d_hi = fabs(hi - t)
    cdef long long g_lo = lo ^ (lo >> 1)
    cdef long long g_hi = hi ^ (hi >> 1)
    if d_hi < d_lo or (d_hi == d_lo and g_hi < g_lo):
        return g_hi
    return g_lo


cdef inline int _bit_length(int v) noexcept:
    cdef int bits = 0
    while v > 0:
        bits += 1
        v >>= 1
    return bits


def error_magnitudes(const double complex[::1] meas, const double complex[::1] ref):
    cdef Py_ssize_t n = meas.shape[0]
    if ref.shape[0] != n:
        raise ValueError("meas and ref lengths differ")
    out = np.empty(n, dtype=np.float64)
    cdef double[::1] mags = out
    cdef double di, dq
    cdef Py_ssize_t k
    for k in range(n):
        di = meas[k].real - ref[k].real
        dq = meas[k].imag - ref[k].imag
        mags[k] = sqrt(di * di + dq * dq)
    return out


cdef unsigned char _POPCOUNT8[256]
cdef int _entry
for _entry in range(256):
    _POPCOUNT8[_entry] = (
        (_entry & 1) + ((_entry >> 1) & 1) + ((_entry >> 2) & 1) + ((_entry >> 3) & 1)
        + ((_entry >> 4) & 1) + ((_entry >> 5) & 1) + ((_entry >> 6) & 1) + ((_entry >> 7) & 1)
    )


def count_bit_errors(const long long[::1] a, const long long[::1] b):
    # labels carry at most 8 bits, so the xor always indexes the table
    cdef Py_ssize_t n = a.shape[0]
    if b.shape[0] != n:
        raise ValueError("label arrays differ in length")
    cdef long long total = 0
    cdef Py_ssize_t k
    for k in range(n):
        total += _POPCOUNT8[(a[k] ^ b[k]) & 0xFF]
    return int(total)
