# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled kernels mirroring ``_kernels_py`` with checked 64-bit arithmetic.

Any intermediate that leaves int64 raises OverflowError rather than wrapping.
"""
from libc.stdint cimport int64_t

cdef extern from *:
    """
    static inline int r2c_add(int64_t a, int64_t b, int64_t *out) {
        return __builtin_add_overflow(a, b, out);
    }
    static inline int r2c_sub(int64_t a, int64_t b, int64_t *out) {
        return __builtin_sub_overflow(a, b, out);
    }
    static inline int r2c_mul(int64_t a, int64_t b, int64_t *out) {
        return __builtin_mul_overflow(a, b, out);
    }
    """
    int r2c_add(int64_t a, int64_t b, int64_t *out) nogil
    int r2c_sub(int64_t a, int64_t b, int64_t *out) nogil
    int r2c_mul(int64_t a, int64_t b, int64_t *out) nogil

import math


def prefix_scan(terms):
    cdef Py_ssize_t n = len(terms), idx
    cdef int64_t best = 0, running = 0, e
    cdef Py_ssize_t first = -1, last = -1
    for idx in range(n):
        e = terms[idx][1]
        if r2c_add(running, e, &running):
            raise OverflowError("prefix sum exceeds int64")
        if running > best:
            best = running
            first = idx
            last = idx
        elif running == best:
            last = idx
    n_f = terms[first][0] if first >= 0 else -math.inf
    n_e = terms[last + 1][0] - 1 if last + 1 < n else math.inf
    return best, n_f, n_e


def height_scan(slopes, nums):
    cdef Py_ssize_t r = len(slopes), l
    cdef int64_t y = 0, low = 0, width, step, lo, hi, slope
    cdef Py_ssize_t first = 0, last = 0
    Y = [0]
    hi = nums[0]
    for l in range(r):
        lo = hi
        hi = nums[l + 1]
        slope = slopes[l]
        if r2c_sub(hi, lo, &width) or r2c_mul(slope, width, &step) or r2c_add(y, step, &y):
            raise OverflowError("breakpoint height exceeds int64")
        Y.append(y)
        if y < low:
            low = y
            first = l + 1
            last = l + 1
        elif y == low:
            last = l + 1
    return Y, low, first, last
