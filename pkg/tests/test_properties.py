"""Randomised invariants checked with hypothesis.

Each test draws ``EXAMPLES`` cases; the acceptance module counts the total.
"""

import collections
import functools
import json

import numpy as np
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import reference_dtw, reference_shift_dtw
from shiftdtw.core import Dataset, TimeSeries, rotate
from shiftdtw.distances import dtw, euclidean, naive_cyclic_banded_dtw, shift_dtw
from shiftdtw.evaluation import clustering_accuracy
from shiftdtw.io import ResultDocument, _parse_cell, format_number, render_result

EXAMPLES = 150
PROPERTY_TESTS = []
CASES_RUN = collections.Counter()

values = st.floats(-1e3, 1e3, allow_nan=False, allow_subnormal=False)


def series(min_size=1, max_size=24):
    return st.lists(values, min_size=min_size, max_size=max_size).map(np.array)


@st.composite
def pair_and_radius(draw, max_size=24):
    m = draw(st.integers(1, max_size))
    t = np.array(draw(st.lists(values, min_size=m, max_size=m)))
    s = np.array(draw(st.lists(values, min_size=m, max_size=m)))
    r = draw(st.integers(0, m - 1))
    return t, s, r


def prop(fn):
    """Register a property test, fix its budget and count executed cases."""
    inner = fn.hypothesis.inner_test

    @functools.wraps(inner)
    def counted(*args, **kwargs):
        CASES_RUN[fn.__name__] += 1
        return inner(*args, **kwargs)

    fn.hypothesis.inner_test = counted
    PROPERTY_TESTS.append(fn)
    return settings(max_examples=EXAMPLES, deadline=None, derandomize=True)(fn)


@prop
@given(pair_and_radius())
def test_dtw_symmetric(case):
    t, s, r = case
    assert dtw(t, s, r).distance == dtw(s, t, r).distance
    assert dtw(t, s).distance == dtw(s, t).distance


@prop
@given(pair_and_radius())
def test_wider_band_never_hurts(case):
    t, s, r = case
    distances = [dtw(t, s, w).distance for w in range(r, len(t))]
    assert all(a >= b for a, b in zip(distances, distances[1:]))
    assert distances[-1] == dtw(t, s).distance
    assert dtw(t, s).distance <= euclidean(t, s)


@prop
@given(pair_and_radius(max_size=16))
def test_kernels_match_reference(case):
    t, s, r = case
    assert dtw(t, s, r).distance == reference_dtw(t, s, r)
    res = shift_dtw(t, s, r)
    assert (res.distance, res.shift) == reference_shift_dtw(t, s, r)


@prop
@given(pair_and_radius())
def test_shift_dtw_bracketed(case):
    t, s, r = case
    fast = shift_dtw(t, s, r)
    assert naive_cyclic_banded_dtw(t, s, r).distance <= fast.distance <= dtw(t, s, r).distance
    assert fast.shift % (2 * r + 1) == 0
    assert fast.distance == dtw(rotate(t, fast.shift), s, r).distance


@prop
@given(series(2), st.data())
def test_rotation_recovered_at_tested_offsets(t, data):
    m = len(t)
    r = data.draw(st.integers(0, m - 1))
    stride = 2 * r + 1
    d = data.draw(st.sampled_from(range(0, m, stride)))
    res = shift_dtw(t, rotate(t, d), r)
    assert res.distance == 0.0
    assert res.shift <= d


@prop
@given(series(1, 30), st.data())
def test_rotation_group_laws(t, data):
    m = len(t)
    a = data.draw(st.integers(0, m - 1))
    b = data.draw(st.integers(0, m - 1))
    np.testing.assert_array_equal(rotate(rotate(t, a), b), rotate(t, (a + b) % m))
    np.testing.assert_array_equal(rotate(rotate(t, a), (m - a) % m), t)
    assert sorted(rotate(t, a)) == sorted(t)


@prop
@given(pair_and_radius())
def test_euclidean_is_zero_band_dtw(case):
    t, s, _ = case
    assert euclidean(t, s) == dtw(t, s, 0).distance
    assert shift_dtw(t, s, 0).distance == min(euclidean(rotate(t, k), s) for k in range(len(t)))


@prop
@given(st.lists(st.integers(0, 3), min_size=1, max_size=30), st.data())
def test_accuracy_invariant_under_relabelling(assignments, data):
    labels = data.draw(st.lists(st.sampled_from("abcd"), min_size=len(assignments),
                                max_size=len(assignments)))
    perm = data.draw(st.permutations(range(4)))
    base = clustering_accuracy(assignments, labels, 4)
    assert clustering_accuracy([perm[a] for a in assignments], labels, 4) == base
    renamed = [{"a": "w", "b": "x", "c": "y", "d": "z"}[x] for x in labels]
    assert clustering_accuracy(assignments, renamed, 4) == base
    # any single cluster/label pair is a valid partial matching
    best_cell = max(sum(1 for a, y in zip(assignments, labels) if (a, y) == pair)
                    for pair in set(zip(assignments, labels)))
    assert best_cell / len(labels) <= base <= 1
    assert (base * len(labels)) == round(base * len(labels))


@prop
@given(st.lists(st.one_of(values, st.integers(-10**9, 10**9)), min_size=1, max_size=8))
def test_csv_cells_round_trip(items):
    for x in items:
        back = _parse_cell(format_number(x))
        assert back == x and type(back) is type(x)


@prop
@given(st.lists(series(3, 3), min_size=1, max_size=5), st.lists(values, max_size=4))
def test_json_document_round_trip(rows, extra):
    data = Dataset([TimeSeries(r, id=i) for i, r in enumerate(rows)])
    doc = ResultDocument("cluster", {"kind": "dtw", "radius": None},
                         {"barycenters": data.values.tolist(), "extra": extra},
                         [{"id": i, "cluster": 0, "shift": 0} for i in data.ids])
    back = ResultDocument.from_dict(json.loads(render_result(doc)))
    assert back == doc
