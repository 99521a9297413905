"""Compiled inner loops.

Every kernel accumulates in the same order (cost + min(up, left, diag),
left to right, top to bottom) so that results are bit-identical to a plain
Python evaluation of the same recursion.
"""

import math

import numba as nb
import numpy as np

_jit = nb.njit(cache=True, nogil=True, fastmath=False, error_model="numpy")

INF = np.inf


@_jit
def window_cumulative(cost, row_start, m, n, radius):
    """Terminal cumulative cost over rows ``row_start .. row_start + m - 1`` of ``cost``.

    ``radius < 0`` disables the band. Returns (terminal value, visited cells).
    Two rows are kept, shifted by one column so that column -1 reads as +inf.
    """
    prev = np.full(n + 1, INF)
    cur = np.full(n + 1, INF)
    visited = 0
    for i in range(m):
        if radius < 0:
            jlo = 0
            jhi = n - 1
        else:
            jlo = max(0, i - radius)
            jhi = min(n - 1, i + radius)
        row = cost[row_start + i]
        cur[jlo] = INF
        if jhi + 2 <= n:
            cur[jhi + 2] = INF
        left = INF
        for j in range(jlo, jhi + 1):
            c = row[j]
            if i == 0 and j == 0:
                v = c
            else:
                best = prev[j + 1]
                diag = prev[j]
                if left < best:
                    best = left
                if diag < best:
                    best = diag
                v = c + best
            cur[j + 1] = v
            left = v
        visited += jhi - jlo + 1
        prev, cur = cur, prev
    return prev[n], visited


@_jit
def series_cumulative(t, s, radius):
    """Same recursion as :func:`window_cumulative`, costs computed on the fly."""
    m = t.shape[0]
    n = s.shape[0]
    prev = np.full(n + 1, INF)
    cur = np.full(n + 1, INF)
    visited = 0
    for i in range(m):
        if radius < 0:
            jlo = 0
            jhi = n - 1
        else:
            jlo = max(0, i - radius)
            jhi = min(n - 1, i + radius)
        ti = t[i]
        cur[jlo] = INF
        if jhi + 2 <= n:
            cur[jhi + 2] = INF
        left = INF
        for j in range(jlo, jhi + 1):
            d = ti - s[j]
            c = d * d
            if i == 0 and j == 0:
                v = c
            else:
                best = prev[j + 1]
                diag = prev[j]
                if left < best:
                    best = left
                if diag < best:
                    best = diag
                v = c + best
            cur[j + 1] = v
            left = v
        visited += jhi - jlo + 1
        prev, cur = cur, prev
    return prev[n], visited


@_jit
def full_cumulative(cost, radius):
    """Whole cumulative matrix, +inf outside the band. Returns (matrix, visited)."""
    m, n = cost.shape
    acc = np.full((m, n), INF)
    visited = 0
    for i in range(m):
        if radius < 0:
            jlo = 0
            jhi = n - 1
        else:
            jlo = max(0, i - radius)
            jhi = min(n - 1, i + radius)
        for j in range(jlo, jhi + 1):
            c = cost[i, j]
            if i == 0 and j == 0:
                acc[i, j] = c
            else:
                best = INF
                if i > 0:
                    best = acc[i - 1, j]
                if j > 0:
                    left = acc[i, j - 1]
                    if left < best:
                        best = left
                    if i > 0:
                        diag = acc[i - 1, j - 1]
                        if diag < best:
                            best = diag
                acc[i, j] = c + best
            visited += 1
    return acc, visited


@_jit
def shift_windows(doubled, m, n, radius, stride, distances):
    """Banded DTW over the windows of a row-doubled cost matrix.

    Fills ``distances[w]`` for window offset ``w * stride`` and returns
    (best distance, best offset, visited cells). Ties keep the earliest offset.
    """
    best = INF
    best_offset = -1
    visited = 0
    w = 0
    for offset in range(0, m, stride):
        acc, cells = window_cumulative(doubled, offset, m, n, radius)
        visited += cells
        dist = math.sqrt(acc)
        distances[w] = dist
        w += 1
        if dist < best:
            best = dist
            best_offset = offset
    return best, best_offset, visited


@_jit
def sequential_sq_sum(t, s):
    total = 0.0
    for i in range(t.shape[0]):
        d = t[i] - s[i]
        total += d * d
    return total
