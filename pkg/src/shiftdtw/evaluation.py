"""Clustering accuracy and synthetic cyclic datasets."""

from __future__ import annotations

import itertools
import warnings
from dataclasses import dataclass

import numpy as np

from .core import Dataset, TimeSeries, rotate
from .exceptions import DomainError

__all__ = [
    "SHAPES",
    "ApproximateAccuracyWarning",
    "SyntheticSpec",
    "clustering_accuracy",
    "base_shape",
    "cluster_base",
    "generate_shifted_dataset",
]

EXHAUSTIVE_LIMIT = 8
SHAPES = ("sinusoid", "square", "sawtooth")


class ApproximateAccuracyWarning(UserWarning):
    """Accuracy came from greedy matching and may underestimate the optimum."""


def _contingency(assignments, labels, k):
    assignments = np.asarray(assignments, dtype=np.int64)
    if len(assignments) != len(labels):
        raise DomainError(
            f"{len(assignments)} assignments but {len(labels)} labels"
        )
    if len(assignments) == 0:
        raise DomainError("cannot score an empty clustering")
    if assignments.min() < 0 or assignments.max() >= k:
        raise DomainError(f"cluster indices must lie in [0, {k})")
    names = sorted(set(labels), key=str)
    index = {name: i for i, name in enumerate(names)}
    table = np.zeros((k, len(names)), dtype=np.int64)
    for a, lab in zip(assignments, labels):
        table[a, index[lab]] += 1
    return table


def clustering_accuracy(assignments, labels, k: int | None = None) -> float:
    """Fraction of series correctly labelled under the best one-to-one
    cluster-to-label mapping.

    Matching is exhaustive when both ``k`` and the number of distinct labels
    are at most 8; otherwise a greedy matching is used and an
    :class:`ApproximateAccuracyWarning` is emitted.

    >>> clustering_accuracy([0, 0, 1, 1], ["A", "B", "B", "B"], 2)
    0.75
    """
    if k is None:
        k = int(np.max(assignments)) + 1
    table = _contingency(assignments, list(labels), k)
    total = table.sum()
    n_labels = table.shape[1]
    if max(k, n_labels) <= EXHAUSTIVE_LIMIT:
        best = 0
        if n_labels <= k:
            for clusters in itertools.permutations(range(k), n_labels):
                best = max(best, sum(table[c, j] for j, c in enumerate(clusters)))
        else:
            for names in itertools.permutations(range(n_labels), k):
                best = max(best, sum(table[c, j] for c, j in enumerate(names)))
        return best / total
    warnings.warn(
        f"{max(k, n_labels)} clusters or labels exceed {EXHAUSTIVE_LIMIT}; "
        "accuracy uses greedy matching",
        ApproximateAccuracyWarning,
        stacklevel=2,
    )
    work = table.astype(float)
    matched = 0
    for _ in range(min(work.shape)):
        c, j = np.unravel_index(np.argmax(work), work.shape)
        if work[c, j] < 0:
            break
        matched += table[c, j]
        work[c, :] = -1
        work[:, j] = -1
    return matched / total


@dataclass(frozen=True)
class SyntheticSpec:
    """Families of rotated, noisy copies of periodic base shapes.

    Cluster ``c`` uses ``base_shapes[c % len(base_shapes)]`` with
    ``c // len(base_shapes) + 1`` cycles over the series, rotated by
    ``c * cluster_offset``. Each series is its cluster's base rotated by a
    uniform integer in ``[0, shift_range]``, then with probability 1/2 by a
    further ``phase_offset``, plus Gaussian noise.
    """

    n_clusters: int
    per_cluster: int
    length: int
    base_shapes: tuple[str, ...] = ("sinusoid",)
    shift_range: int = 0
    noise_sigma: float = 0.0
    seed: int = 0
    phase_offset: int = 0
    cluster_offset: int = 0

    def __post_init__(self):
        if isinstance(self.base_shapes, str):
            object.__setattr__(self, "base_shapes", (self.base_shapes,))
        if self.n_clusters < 1 or self.per_cluster < 1:
            raise DomainError("n_clusters and per_cluster must both be >= 1")
        if self.length < 2:
            raise DomainError(f"length must be >= 2, got {self.length}")
        if not 0 <= self.shift_range < self.length:
            raise DomainError(f"shift_range must satisfy 0 <= shift_range < {self.length}")
        if not 0 <= self.phase_offset < self.length:
            raise DomainError(f"phase_offset must satisfy 0 <= phase_offset < {self.length}")
        if self.noise_sigma < 0:
            raise DomainError("noise_sigma must be non-negative")
        unknown = set(self.base_shapes) - set(SHAPES)
        if unknown or not self.base_shapes:
            raise DomainError(f"unknown base shapes {sorted(unknown)}; choose from {SHAPES}")


def base_shape(kind: str, length: int, cycles: int = 1) -> np.ndarray:
    phase = (np.arange(length) * cycles / length) % 1.0
    if kind == "sinusoid":
        return np.sin(2 * np.pi * phase)
    if kind == "square":
        return np.where(phase < 0.5, 1.0, -1.0)
    if kind == "sawtooth":
        return 2.0 * phase - 1.0
    raise DomainError(f"unknown base shape {kind!r}")


def cluster_base(spec: SyntheticSpec, cluster: int) -> np.ndarray:
    n_shapes = len(spec.base_shapes)
    base = base_shape(spec.base_shapes[cluster % n_shapes], spec.length,
                      cluster // n_shapes + 1)
    offset = (cluster * spec.cluster_offset) % spec.length
    return rotate(base, offset)


def generate_shifted_dataset(spec: SyntheticSpec) -> Dataset:
    rng = np.random.default_rng(spec.seed)
    series = []
    for c in range(spec.n_clusters):
        base = cluster_base(spec, c)
        for i in range(spec.per_cluster):
            shift = int(rng.integers(0, spec.shift_range + 1))
            if spec.phase_offset and rng.integers(2):
                shift += spec.phase_offset
            values = rotate(base, shift % spec.length)
            if spec.noise_sigma > 0:
                values = values + rng.normal(0.0, spec.noise_sigma, spec.length)
            series.append(TimeSeries(values, id=f"c{c}_{i}", label=str(c)))
    return Dataset(series)
