"""DTW family: full and banded DTW, ShiftDTW, and brute-force cyclic references."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import _kernels
from .core import BandMask, as_values, double_rows, pairwise_cost_matrix, rotate
from .exceptions import BudgetExceededError, DomainError

__all__ = [
    "DtwResult",
    "ShiftDistanceResult",
    "dtw",
    "shift_dtw",
    "shift_offsets",
    "naive_cyclic_banded_dtw",
    "cdtw_bruteforce",
    "euclidean",
    "DEFAULT_CDTW_BUDGET",
]

DEFAULT_CDTW_BUDGET = 2**24


@dataclass(frozen=True)
class DtwResult:
    distance: float
    visited_cells: int
    path: list[tuple[int, int]] | None = None


@dataclass(frozen=True)
class ShiftDistanceResult:
    """Best distance over rotations of the first series.

    ``shift`` is the rotation ``d`` such that ``rotate(T, d)`` produced
    ``distance``. ``column_shift`` is only set by :func:`cdtw_bruteforce`,
    which also rotates the second series.
    """

    distance: float
    shift: int
    visited_cells: int
    per_offset_distances: list[tuple[int, float]] | None = None
    column_shift: int | None = None


def _band_radius(band, m: int, n: int) -> int:
    if band is None:
        return -1
    if m != n:
        raise DomainError(f"a band requires equal lengths, got {m} and {n}")
    if isinstance(band, BandMask):
        if band.length != m:
            raise DomainError(f"band built for length {band.length}, series have length {m}")
        return band.radius
    return BandMask(int(band), m).radius


def _check_pair(T, S, r: int):
    t = as_values(T)
    s = as_values(S)
    m, n = t.shape[0], s.shape[0]
    if m != n:
        raise DomainError(f"series must have equal lengths, got {m} and {n}")
    if not 0 <= r < m:
        raise DomainError(f"radius must satisfy 0 <= r < {m}, got {r}")
    return t, s


def _backtrack(acc: np.ndarray) -> list[tuple[int, int]]:
    i, j = acc.shape[0] - 1, acc.shape[1] - 1
    path = [(i, j)]
    while i > 0 or j > 0:
        if i == 0:
            j -= 1
        elif j == 0:
            i -= 1
        else:
            # diagonal first, then vertical, then horizontal
            candidates = ((acc[i - 1, j - 1], i - 1, j - 1),
                          (acc[i - 1, j], i - 1, j),
                          (acc[i, j - 1], i, j - 1))
            _, i, j = min(candidates, key=lambda c: c[0])
        path.append((i, j))
    path.reverse()
    return path


def dtw(T, S, band: BandMask | int | None = None, return_path: bool = False) -> DtwResult:
    """Dynamic time warping with squared pointwise cost.

    The distance is the square root of the terminal cumulative cost. With a
    band (a :class:`BandMask` or an integer radius) only cells with
    ``|i - j| <= r`` are computed and the series must have equal lengths.

    >>> dtw([0, 1], [2, 3]).distance == math.sqrt(8)
    True
    """
    t = as_values(T)
    s = as_values(S)
    radius = _band_radius(band, t.shape[0], s.shape[0])
    if return_path:
        cost = pairwise_cost_matrix(t, s).cells
        acc, visited = _kernels.full_cumulative(cost, radius)
        return DtwResult(math.sqrt(acc[-1, -1]), int(visited), _backtrack(acc))
    acc, visited = _kernels.series_cumulative(t, s, radius)
    return DtwResult(math.sqrt(acc), int(visited))


def shift_offsets(m: int, r: int) -> range:
    """Rotations ShiftDTW evaluates: every ``2r + 1`` starting at 0."""
    return range(0, m, 2 * r + 1)


def shift_dtw(T, S, r: int, per_offset: bool = False) -> ShiftDistanceResult:
    """ShiftDTW: banded DTW at rotations of ``T`` spaced ``2r + 1`` apart.

    The pairwise cost matrix is computed once and stacked on itself; the
    window of rows ``i .. i + m - 1`` is the cost matrix of ``rotate(T, i)``
    against ``S``, and each window gets its own band around its diagonal.
    The smallest distance wins, the earliest offset on ties.
    """
    t, s = _check_pair(T, S, r)
    m = t.shape[0]
    doubled = double_rows(pairwise_cost_matrix(t, s)).cells
    stride = 2 * r + 1
    distances = np.empty(len(shift_offsets(m, r)))
    best, offset, visited = _kernels.shift_windows(doubled, m, m, r, stride, distances)
    per = None
    if per_offset:
        per = [(w * stride, float(d)) for w, d in enumerate(distances)]
    return ShiftDistanceResult(float(best), int(offset), int(visited), per)


def naive_cyclic_banded_dtw(T, S, r: int, per_offset: bool = False) -> ShiftDistanceResult:
    """Banded DTW minimised over every rotation of ``T`` (the exhaustive ShiftDTW)."""
    t, s = _check_pair(T, S, r)
    m = t.shape[0]
    band = BandMask(r, m)
    best, best_k, visited = math.inf, -1, 0
    per = [] if per_offset else None
    for k in range(m):
        res = dtw(rotate(t, k), s, band)
        visited += res.visited_cells
        if per is not None:
            per.append((k, res.distance))
        if res.distance < best:
            best, best_k = res.distance, k
    return ShiftDistanceResult(best, best_k, visited, per)


def cdtw_bruteforce(T, S, budget: int = DEFAULT_CDTW_BUDGET) -> ShiftDistanceResult:
    """Unbanded DTW minimised over rotations of both series.

    Costs ``m * n`` DTW runs of ``m * n`` cells each; raises
    :class:`BudgetExceededError` when that exceeds ``budget``.
    """
    t = as_values(T)
    s = as_values(S)
    m, n = t.shape[0], s.shape[0]
    work = m * n * m * n
    if work > budget:
        raise BudgetExceededError(
            f"brute-force CDTW on {m}x{n} needs {work} cell computations, budget is {budget}"
        )
    best, best_k, best_l, visited = math.inf, -1, -1, 0
    for k in range(m):
        tk = rotate(t, k)
        for l in range(n):
            res = dtw(tk, rotate(s, l))
            visited += res.visited_cells
            if res.distance < best:
                best, best_k, best_l = res.distance, k, l
    return ShiftDistanceResult(best, best_k, visited, column_shift=best_l)


def euclidean(T, S) -> float:
    t = as_values(T)
    s = as_values(S)
    if t.shape[0] != s.shape[0]:
        raise DomainError(f"series must have equal lengths, got {t.shape[0]} and {s.shape[0]}")
    # summed left to right so it matches DTW with a zero-radius band bit for bit
    return math.sqrt(_kernels.sequential_sq_sum(t, s))
