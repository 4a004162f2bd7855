"""Pure numpy fixed-point kernels, used when the compiled extension is unavailable.

Row sums are accumulated with ``np.bincount``, which adds weights sequentially in
input order; this matches the compiled loop bit for bit.
"""

import numpy as np


def _rows(indptr):
    return np.repeat(np.arange(len(indptr) - 1), np.diff(indptr))


def _apply(rows, indices, v, n):
    return 1.0 / (1.0 + np.bincount(rows, weights=v[indices], minlength=n))


def apply_f(indptr, indices, v):
    v = np.asarray(v, dtype=np.float64)
    return _apply(_rows(indptr), indices, v, len(v))


def _stepnorm(d, norm):
    # cumsum accumulates sequentially, matching the compiled loop
    if len(d) == 0:
        return 0.0
    if norm == 0:
        return float(np.max(np.abs(d)))
    if norm == 1:
        return float(np.sqrt(np.cumsum(d * d)[-1]))
    return float(np.cumsum(np.abs(d))[-1])


def fixed_point(indptr, indices, v0, tol, max_iter, norm=0):
    cur = np.array(v0, dtype=np.float64, copy=True)
    n = len(cur)
    rows = _rows(indptr)
    k, step, converged = 0, 0.0, False
    while k < max_iter:
        k += 1
        nxt = _apply(rows, indices, cur, n)
        step = _stepnorm(nxt - cur, norm)
        cur = nxt
        if step <= tol:
            converged = True
            break
    return cur, k, step, converged


def sandwich(indptr, indices, n, tol, max_iter, record):
    lower = np.zeros(n)
    upper = np.ones(n)
    if n == 0:
        return lower, upper, 0, np.zeros(0), None, None, True
    rows = _rows(indptr)
    k, width, converged = 1, 1.0, False
    widths = [width]
    lows, ups = ([lower.copy()], [upper.copy()]) if record else ([], [])
    while k < max_iter:
        k += 1
        if k % 2 == 0:
            lower = _apply(rows, indices, upper, n)
        else:
            upper = _apply(rows, indices, lower, n)
        width = float(np.max(np.abs(upper - lower)))
        widths.append(width)
        if record:
            lows.append(lower.copy())
            ups.append(upper.copy())
        if width <= tol:
            converged = True
            break
    hist_lo = np.array(lows) if record else None
    hist_up = np.array(ups) if record else None
    return lower, upper, k, np.array(widths), hist_lo, hist_up, converged
