"""Series containers, cyclic rotation, pairwise costs and Sakoe-Chiba bands."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Hashable, Iterable, Sequence

import numpy as np

from .exceptions import DomainError

__all__ = [
    "TimeSeries",
    "Dataset",
    "BandMask",
    "CostMatrix",
    "as_values",
    "rotate",
    "pairwise_cost_matrix",
    "double_rows",
    "znormalize",
]


def _frozen_array(values) -> np.ndarray:
    arr = np.array(values, dtype=np.float64, copy=True).reshape(-1)
    arr.setflags(write=False)
    return arr


@dataclass(frozen=True, eq=False)
class TimeSeries:
    """A univariate real-valued series with optional identity and class label."""

    values: np.ndarray
    id: Hashable | None = None
    label: str | None = None

    def __post_init__(self):
        arr = _frozen_array(self.values)
        if arr.size == 0:
            raise DomainError("a time series needs at least one value")
        if not np.all(np.isfinite(arr)):
            raise DomainError(f"time series {self.id!r} contains NaN or infinite values")
        object.__setattr__(self, "values", arr)

    def __len__(self) -> int:
        return self.values.shape[0]

    def __getitem__(self, idx):
        return self.values[idx]

    def __iter__(self):
        return iter(self.values)

    def __array__(self, dtype=None, copy=None):
        if dtype is None:
            return self.values
        return self.values.astype(dtype)

    def __eq__(self, other):
        if not isinstance(other, TimeSeries):
            return NotImplemented
        return (
            self.id == other.id
            and self.label == other.label
            and np.array_equal(self.values, other.values)
        )

    def __hash__(self):
        return hash((self.id, self.label, self.values.tobytes()))

    def with_values(self, values) -> "TimeSeries":
        return TimeSeries(values, id=self.id, label=self.label)


def as_values(series) -> np.ndarray:
    """Return the float64 value array behind a TimeSeries or array-like."""
    if isinstance(series, TimeSeries):
        return series.values
    arr = np.asarray(series, dtype=np.float64)
    if arr.ndim != 1 or arr.size == 0:
        raise DomainError("expected a non-empty one-dimensional series")
    if not np.all(np.isfinite(arr)):
        raise DomainError("series contains NaN or infinite values")
    return arr


@dataclass(frozen=True)
class Dataset:
    """Equal-length series, either all labelled or none labelled."""

    series: tuple[TimeSeries, ...]
    length: int = field(init=False)

    def __init__(self, series: Iterable[TimeSeries | Sequence[float]]):
        items = tuple(s if isinstance(s, TimeSeries) else TimeSeries(s, id=i)
                      for i, s in enumerate(series))
        if not items:
            raise DomainError("a dataset needs at least one series")
        lengths = {len(s) for s in items}
        if len(lengths) != 1:
            raise DomainError(f"dataset series have differing lengths: {sorted(lengths)}")
        labelled = {s.label is not None for s in items}
        if len(labelled) != 1:
            raise DomainError("labels must be present on all series or on none")
        object.__setattr__(self, "series", items)
        object.__setattr__(self, "length", lengths.pop())

    @classmethod
    def from_array(cls, values, labels=None, ids=None) -> "Dataset":
        values = np.asarray(values, dtype=np.float64)
        if values.ndim != 2:
            raise DomainError("expected a 2-D array of shape (n_series, length)")
        n = values.shape[0]
        ids = list(range(n)) if ids is None else list(ids)
        labels = [None] * n if labels is None else [str(lab) for lab in labels]
        return cls(TimeSeries(v, id=i, label=lab) for v, i, lab in zip(values, ids, labels))

    def __len__(self) -> int:
        return len(self.series)

    def __getitem__(self, idx) -> TimeSeries:
        return self.series[idx]

    def __iter__(self):
        return iter(self.series)

    @property
    def values(self) -> np.ndarray:
        return np.stack([s.values for s in self.series])

    @property
    def labels(self) -> list[str] | None:
        if self.series[0].label is None:
            return None
        return [s.label for s in self.series]

    @property
    def ids(self) -> list[Any]:
        return [s.id for s in self.series]


@dataclass(frozen=True)
class BandMask:
    """Sakoe-Chiba band: cell (i, j) is admissible iff ``|i - j| <= radius``."""

    radius: int
    length: int

    def __post_init__(self):
        if self.length < 1:
            raise DomainError(f"band length must be >= 1, got {self.length}")
        if self.radius < 0 or self.radius >= self.length:
            raise DomainError(
                f"band radius must satisfy 0 <= r < {self.length}, got {self.radius}"
            )

    def admissible(self, i: int, j: int) -> bool:
        return 0 <= i < self.length and 0 <= j < self.length and abs(i - j) <= self.radius

    def to_array(self) -> np.ndarray:
        idx = np.arange(self.length)
        return np.abs(idx[:, None] - idx[None, :]) <= self.radius

    @property
    def cell_count(self) -> int:
        r, m = self.radius, self.length
        return m * (2 * r + 1) - r * (r + 1)


@dataclass(frozen=True, eq=False)
class CostMatrix:
    """Row-major real matrix with a counter of the cells actually computed.

    Cells that were never computed hold ``+inf``.
    """

    cells: np.ndarray
    visited_count: int

    @property
    def rows(self) -> int:
        return self.cells.shape[0]

    @property
    def cols(self) -> int:
        return self.cells.shape[1]

    def __getitem__(self, idx):
        return self.cells[idx]

    def __array__(self, dtype=None, copy=None):
        return self.cells if dtype is None else self.cells.astype(dtype)


def rotate(series, k: int):
    """Cyclic left shift by ``k``: ``result[i] = series[(i + k) % m]``.

    TimeSeries inputs keep their id and label; array-likes come back as arrays.
    """
    values = as_values(series)
    m = values.shape[0]
    if not 0 <= k < m:
        raise DomainError(f"rotation offset must satisfy 0 <= k < {m}, got {k}")
    rotated = np.concatenate((values[k:], values[:k]))
    if isinstance(series, TimeSeries):
        return series.with_values(rotated)
    return rotated


def pairwise_cost_matrix(T, S) -> CostMatrix:
    """Squared pointwise differences ``(t_i - s_j)**2``."""
    t = as_values(T)
    s = as_values(S)
    diff = t[:, None] - s[None, :]
    cells = diff * diff
    return CostMatrix(cells, cells.size)


def double_rows(M: CostMatrix) -> CostMatrix:
    """Stack ``M`` on top of itself, giving ``2m`` rows."""
    cells = np.concatenate((M.cells, M.cells), axis=0)
    return CostMatrix(cells, 2 * M.visited_count)


def znormalize(series):
    """Zero mean, unit variance; constant series map to all zeros."""
    values = as_values(series)
    std = values.std()
    out = values - values.mean()
    if std > 0:
        out = out / std
    if isinstance(series, TimeSeries):
        return series.with_values(out)
    return out
