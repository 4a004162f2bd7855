# cython: boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled fixed-point kernels. Mirrors ``_pykernels`` exactly, including summation order."""

import numpy as np
from libc.math cimport sqrt
from libc.stdint cimport int64_t


cdef inline void _apply(const int64_t[::1] indptr, const int64_t[::1] indices,
                        const double[::1] v, double[::1] out) noexcept nogil:
    cdef Py_ssize_t i, k, n = out.shape[0]
    cdef double s
    for i in range(n):
        s = 0.0
        for k in range(indptr[i], indptr[i + 1]):
            s += v[indices[k]]
        out[i] = 1.0 / (1.0 + s)


cdef inline double _maxdiff(const double[::1] a, const double[::1] b) noexcept nogil:
    cdef Py_ssize_t i
    cdef double d, m = 0.0
    for i in range(a.shape[0]):
        d = a[i] - b[i]
        if d < 0.0:
            d = -d
        if d > m:
            m = d
    return m


cdef inline double _stepnorm(const double[::1] a, const double[::1] b, int norm) noexcept nogil:
    # norm: 0 = max, 1 = Euclidean, 2 = sum of absolute values
    cdef Py_ssize_t i
    cdef double d, acc = 0.0
    if norm == 0:
        return _maxdiff(a, b)
    for i in range(a.shape[0]):
        d = a[i] - b[i]
        if d < 0.0:
            d = -d
        if norm == 1:
            acc += d * d
        else:
            acc += d
    return sqrt(acc) if norm == 1 else acc


def apply_f(const int64_t[::1] indptr, const int64_t[::1] indices, const double[::1] v):
    out = np.empty(v.shape[0], dtype=np.float64)
    cdef double[::1] o = out
    with nogil:
        _apply(indptr, indices, v, o)
    return out


def fixed_point(const int64_t[::1] indptr, const int64_t[::1] indices,
                const double[::1] v0, double tol, Py_ssize_t max_iter, int norm=0):
    cdef Py_ssize_t n = v0.shape[0], k = 0
    a = np.array(v0, dtype=np.float64, copy=True)
    b = np.empty(n, dtype=np.float64)
    cdef double[::1] cur = a
    cdef double[::1] nxt = b
    cdef double[::1] tmp
    cdef double step = 0.0
    cdef bint converged = False
    with nogil:
        while k < max_iter:
            k += 1
            _apply(indptr, indices, cur, nxt)
            step = _stepnorm(nxt, cur, norm)
            tmp = cur
            cur = nxt
            nxt = tmp
            if step <= tol:
                converged = True
                break
    return np.asarray(cur).copy(), k, step, converged


def sandwich(const int64_t[::1] indptr, const int64_t[::1] indices, Py_ssize_t n,
             double tol, Py_ssize_t max_iter, bint record):
    lower_a = np.zeros(n, dtype=np.float64)
    upper_a = np.ones(n, dtype=np.float64)
    cdef double[::1] lower = lower_a
    cdef double[::1] upper = upper_a
    widths = []
    lows = []
    ups = []
    if n == 0:
        return lower_a, upper_a, 0, np.zeros(0), None, None, True
    cdef Py_ssize_t k = 1
    cdef double width = 1.0
    cdef bint converged = False
    widths.append(width)
    if record:
        lows.append(lower_a.copy())
        ups.append(upper_a.copy())
    while k < max_iter:
        k += 1
        with nogil:
            if k % 2 == 0:
                _apply(indptr, indices, upper, lower)
            else:
                _apply(indptr, indices, lower, upper)
            width = _maxdiff(upper, lower)
        widths.append(width)
        if record:
            lows.append(lower_a.copy())
            ups.append(upper_a.copy())
        if width <= tol:
            converged = True
            break
    hist_lo = np.array(lows) if record else None
    hist_up = np.array(ups) if record else None
    return lower_a, upper_a, k, np.array(widths), hist_lo, hist_up, converged
