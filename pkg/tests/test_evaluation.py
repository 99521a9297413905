import warnings

import numpy as np
import pytest

from shiftdtw.core import rotate
from shiftdtw.evaluation import (
    ApproximateAccuracyWarning,
    SyntheticSpec,
    base_shape,
    cluster_base,
    clustering_accuracy,
    generate_shifted_dataset,
)
from shiftdtw.exceptions import DomainError


class TestAccuracy:
    def test_example(self):
        assert clustering_accuracy([0, 0, 1, 1], ["A", "B", "B", "B"], 2) == 0.75

    def test_label_permutation(self):
        assert clustering_accuracy([1, 1, 0, 0], ["a", "a", "b", "b"]) == 1.0

    def test_all_in_one_cluster(self):
        assert clustering_accuracy([0] * 6, list("aaabbb"), 2) == 0.5

    def test_more_labels_than_clusters(self):
        assert clustering_accuracy([0, 0, 0, 1], list("abcd"), 2) == 0.5

    def test_brute_force_agreement(self, rng):
        from itertools import permutations

        for _ in range(20):
            a = rng.integers(0, 3, 15)
            labels = rng.integers(0, 3, 15)
            best = max(
                np.mean([perm[x] == y for x, y in zip(a, labels)])
                for perm in permutations(range(3))
            )
            assert clustering_accuracy(a, labels.tolist(), 3) == pytest.approx(best)

    def test_greedy_warns(self):
        a = list(range(10))
        with pytest.warns(ApproximateAccuracyWarning):
            assert clustering_accuracy(a, [str(x) for x in a], 10) == 1.0

    def test_exhaustive_is_silent(self):
        with warnings.catch_warnings():
            warnings.simplefilter("error")
            clustering_accuracy(list(range(8)), list(range(8)), 8)

    @pytest.mark.parametrize("a,labels,k", [([0, 1], ["a"], 2), ([], [], 1), ([0, 3], ["a", "b"], 2)])
    def test_invalid(self, a, labels, k):
        with pytest.raises(DomainError):
            clustering_accuracy(a, labels, k)


class TestShapes:
    @pytest.mark.parametrize("kind", ["sinusoid", "square", "sawtooth"])
    def test_periodic(self, kind):
        one = base_shape(kind, 64, 1)
        two = base_shape(kind, 64, 2)
        np.testing.assert_allclose(two[:32], two[32:], atol=1e-12)
        assert one.min() >= -1.0 and one.max() <= 1.0

    def test_unknown(self):
        with pytest.raises(DomainError):
            base_shape("triangle", 10)


class TestSynthetic:
    def test_shape_and_labels(self):
        spec = SyntheticSpec(3, 4, 50, ("sinusoid", "square"), shift_range=5, noise_sigma=0.1)
        data = generate_shifted_dataset(spec)
        assert len(data) == 12 and data.length == 50
        assert data.labels == ["0"] * 4 + ["1"] * 4 + ["2"] * 4
        assert data.ids[5] == "c1_1"

    def test_reproducible(self):
        spec = SyntheticSpec(2, 5, 40, shift_range=10, noise_sigma=0.2, seed=9)
        np.testing.assert_array_equal(generate_shifted_dataset(spec).values,
                                      generate_shifted_dataset(spec).values)

    def test_noiseless_series_are_rotations_of_base(self):
        spec = SyntheticSpec(2, 6, 40, shift_range=7, phase_offset=10)
        data = generate_shifted_dataset(spec)
        for s in data:
            base = cluster_base(spec, int(s.label))
            assert any(np.array_equal(rotate(base, k), s.values) for k in range(40))

    def test_cluster_offset(self):
        spec = SyntheticSpec(2, 1, 40, cluster_offset=5)
        np.testing.assert_array_equal(cluster_base(spec, 1), rotate(base_shape("sinusoid", 40, 2), 5))

    @pytest.mark.parametrize("kwargs", [
        dict(n_clusters=0), dict(length=1), dict(shift_range=40), dict(noise_sigma=-1.0),
        dict(base_shapes=("blob",)), dict(phase_offset=-1),
    ])
    def test_invalid(self, kwargs):
        base = dict(n_clusters=2, per_cluster=2, length=40)
        base.update(kwargs)
        with pytest.raises(DomainError):
            SyntheticSpec(**base)
