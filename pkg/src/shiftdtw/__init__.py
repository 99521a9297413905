"""Cyclic time-series distances (ShiftDTW) and shift-aware K-Means."""

__version__ = "0.1.0"

from .core import BandMask, CostMatrix, Dataset, TimeSeries, double_rows, pairwise_cost_matrix, rotate
from .distances import (
    DtwResult,
    ShiftDistanceResult,
    cdtw_bruteforce,
    dtw,
    euclidean,
    naive_cyclic_banded_dtw,
    shift_dtw,
)
from .clustering import ClusteringResult, KMeansConfig, MeasureSpec, kmeans
from .evaluation import SyntheticSpec, clustering_accuracy, generate_shifted_dataset
from .exceptions import BudgetExceededError, DomainError, ParseError, ShiftDTWError
