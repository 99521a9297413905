"""K-Means with K-Means++ seeding over a pluggable series distance.

With the ``shiftdtw`` measure every series carries the rotation that aligned
it with its nearest barycenter, and barycenters are the mean of the rotated
members, so all members of a cluster are averaged in a common phase.
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import NamedTuple

import numpy as np

from .core import Dataset, TimeSeries, rotate
from .distances import dtw, euclidean, shift_dtw
from .exceptions import DomainError

__all__ = [
    "MEASURES",
    "MeasureSpec",
    "KMeansConfig",
    "Assignment",
    "ClusteringResult",
    "kmeanspp_init",
    "assign",
    "update_barycenters",
    "kmeans",
]

MEASURES = ("euclidean", "dtw", "dtw_banded", "shiftdtw")
_NEEDS_RADIUS = {"dtw_banded", "shiftdtw"}


@dataclass(frozen=True)
class MeasureSpec:
    kind: str
    radius: int | None = None

    def __post_init__(self):
        if self.kind not in MEASURES:
            raise DomainError(f"unknown measure {self.kind!r}; choose from {', '.join(MEASURES)}")
        if self.kind in _NEEDS_RADIUS and self.radius is None:
            raise DomainError(f"measure {self.kind!r} requires a radius")
        if self.kind not in _NEEDS_RADIUS and self.radius is not None:
            raise DomainError(f"measure {self.kind!r} does not take a radius")
        if self.radius is not None and self.radius < 0:
            raise DomainError(f"radius must be non-negative, got {self.radius}")

    def validate(self, length: int) -> None:
        if self.radius is not None and self.radius >= length:
            raise DomainError(
                f"radius {self.radius} is not smaller than the series length {length}"
            )

    def __call__(self, series, barycenter) -> tuple[float, int]:
        """Distance from ``series`` to ``barycenter`` and the rotation applied to ``series``."""
        if self.kind == "euclidean":
            return euclidean(series, barycenter), 0
        if self.kind == "dtw":
            return dtw(series, barycenter).distance, 0
        if self.kind == "dtw_banded":
            return dtw(series, barycenter, self.radius).distance, 0
        res = shift_dtw(series, barycenter, self.radius)
        return res.distance, res.shift

    def to_dict(self) -> dict:
        return {"kind": self.kind, "radius": self.radius}


@dataclass(frozen=True)
class KMeansConfig:
    k: int
    measure: MeasureSpec
    n_init: int = 10
    max_iter: int = 50
    seed: int = 0

    def __post_init__(self):
        if self.k < 1:
            raise DomainError(f"k must be >= 1, got {self.k}")
        if self.n_init < 1:
            raise DomainError(f"n_init must be >= 1, got {self.n_init}")
        if self.max_iter < 1:
            raise DomainError(f"max_iter must be >= 1, got {self.max_iter}")

    def to_dict(self) -> dict:
        return {
            "k": self.k,
            "n_init": self.n_init,
            "max_iter": self.max_iter,
            "seed": self.seed,
            "measure": self.measure.to_dict(),
        }


class Assignment(NamedTuple):
    assignments: np.ndarray
    shifts: np.ndarray
    distances: np.ndarray
    inertia: float


@dataclass(frozen=True)
class ClusteringResult:
    assignments: list[int]
    shifts: list[int]
    barycenters: list[TimeSeries]
    inertia: float
    iterations_run: int
    restart_inertias: list[float] = field(default_factory=list)
    best_restart: int = 0
    restart_assignments: list[list[int]] = field(default_factory=list)


def _check(data: Dataset, k: int, measure: MeasureSpec):
    if k > len(data):
        raise DomainError(f"k={k} exceeds the dataset size {len(data)}")
    measure.validate(data.length)


def kmeanspp_init(data: Dataset, k: int, measure: MeasureSpec, rng: np.random.Generator):
    """Pick ``k`` distinct members by D^2 sampling; returns their value arrays.

    When every remaining candidate sits at distance zero from the chosen
    centers, the next one is drawn uniformly among the unchosen members.
    """
    _check(data, k, measure)
    n = len(data)
    chosen = [int(rng.integers(n))]
    nearest = np.full(n, np.inf)
    while len(chosen) < k:
        latest = data[chosen[-1]].values
        for i in range(n):
            d, _ = measure(data[i], latest)
            nearest[i] = min(nearest[i], d * d)
        weights = nearest.copy()
        weights[chosen] = 0.0
        total = weights.sum()
        if total > 0:
            nxt = int(rng.choice(n, p=weights / total))
        else:
            pool = np.setdiff1d(np.arange(n), chosen)
            nxt = int(rng.choice(pool))
        chosen.append(nxt)
    return [data[i].values.copy() for i in chosen]


def assign(data: Dataset, barycenters, measure: MeasureSpec) -> Assignment:
    """Nearest barycenter per series; ties go to the lowest barycenter index."""
    if len(barycenters) == 0:
        raise DomainError("need at least one barycenter")
    measure.validate(data.length)
    for b in barycenters:
        if len(b) != data.length:
            raise DomainError(
                f"barycenter length {len(b)} differs from series length {data.length}"
            )
    n = len(data)
    labels = np.zeros(n, dtype=np.int64)
    shifts = np.zeros(n, dtype=np.int64)
    dists = np.zeros(n)
    for i, series in enumerate(data):
        best, best_c, best_shift = math.inf, 0, 0
        for c, b in enumerate(barycenters):
            d, shift = measure(series, b)
            if d < best:
                best, best_c, best_shift = d, c, shift
        labels[i], shifts[i], dists[i] = best_c, best_shift, best
    inertia = 0.0
    for d in dists:
        inertia += d * d
    return Assignment(labels, shifts, dists, inertia)


def update_barycenters(data: Dataset, assignments, shifts, k: int, rng=None, distances=None):
    """Mean of the rotated members of each cluster.

    An empty cluster is reseeded with the (rotated) series farthest from its
    own barycenter according to ``distances``; without distances a member is
    drawn with ``rng``.
    """
    assignments = np.asarray(assignments)
    shifts = np.asarray(shifts)
    aligned = np.stack([
        rotate(s.values, int(d)) if d else s.values for s, d in zip(data, shifts)
    ])
    centers = []
    empty = []
    for c in range(k):
        members = aligned[assignments == c]
        if len(members) == 0:
            centers.append(None)
            empty.append(c)
        else:
            centers.append(members.mean(axis=0))
    if empty:
        if distances is not None:
            order = list(np.argsort(-np.asarray(distances), kind="stable"))
        else:
            if rng is None:
                raise DomainError("reseeding an empty cluster needs distances or an rng")
            order = list(rng.permutation(len(data)))
        for c in empty:
            idx = int(order.pop(0))
            centers[c] = aligned[idx].copy()
    return centers


def _single_run(data: Dataset, config: KMeansConfig, rng: np.random.Generator):
    measure = config.measure
    centers = kmeanspp_init(data, config.k, measure, rng)
    current = assign(data, centers, measure)
    iterations = 0
    while iterations < config.max_iter:
        centers = update_barycenters(
            data, current.assignments, current.shifts, config.k, rng, current.distances
        )
        nxt = assign(data, centers, measure)
        iterations += 1
        stable = (np.array_equal(nxt.assignments, current.assignments)
                  and np.array_equal(nxt.shifts, current.shifts))
        current = nxt
        if stable:
            break
    return centers, current, iterations


def kmeans(data: Dataset, config: KMeansConfig, threads: int = 1) -> ClusteringResult:
    """Best of ``n_init`` K-Means runs by inertia.

    Each restart draws from its own stream spawned from ``config.seed``, so the
    result does not depend on ``threads``.
    """
    _check(data, config.k, config.measure)
    streams = np.random.SeedSequence(config.seed).spawn(config.n_init)
    rngs = [np.random.default_rng(s) for s in streams]
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            runs = list(pool.map(lambda g: _single_run(data, config, g), rngs))
    else:
        runs = [_single_run(data, config, g) for g in rngs]
    inertias = [run[1].inertia for run in runs]
    best = min(range(len(runs)), key=lambda i: (inertias[i], i))
    centers, result, iterations = runs[best]
    return ClusteringResult(
        assignments=[int(a) for a in result.assignments],
        shifts=[int(s) for s in result.shifts],
        barycenters=[TimeSeries(c, id=f"barycenter_{i}") for i, c in enumerate(centers)],
        inertia=float(result.inertia),
        iterations_run=iterations,
        restart_inertias=[float(x) for x in inertias],
        best_restart=best,
        restart_assignments=[[int(a) for a in run[1].assignments] for run in runs],
    )
