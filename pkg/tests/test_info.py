import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from mblmorph.corpus import build_instance_base
from mblmorph.info import (
    entropy,
    feature_order,
    feature_weights,
    gain_ratio,
    information_gain,
    order_from_weights,
)
from mblmorph.instancebase import InstanceBase

import oracles


def base_of(rows, labels):
    return InstanceBase.from_instances([tuple(r) for r in rows], labels)


@pytest.mark.parametrize("dist, expected", [
    ({"a": 1, "b": 1}, 1.0),
    ({"a": 5}, 0.0),
])
def test_entropy_trivial(dist, expected):
    assert entropy(dist) == expected


def test_entropy_three_to_one():
    expected = -(0.75 * math.log2(0.75) + 0.25 * math.log2(0.25))
    assert entropy({"a": 3, "b": 1}) == pytest.approx(0.811278, abs=1e-6)
    assert entropy({"a": 3, "b": 1}) == pytest.approx(expected, abs=1e-15)


def test_entropy_empty():
    with pytest.raises(ValueError):
        entropy({})


def test_gain_perfect_feature():
    b = base_of([("p",), ("p",), ("q",), ("q",)], ["1", "1", "0", "0"])
    assert information_gain(b, 0) == 1.0


def test_gain_constant_feature_and_single_class():
    b = base_of([("p", "x"), ("p", "y"), ("p", "z")], ["1", "0", "0"])
    assert information_gain(b, 0) == 0.0
    single = base_of([("p", "x"), ("q", "y")], ["1", "1"])
    assert information_gain(single, 0) == 0.0 and information_gain(single, 1) == 0.0


def test_gain_ratio_examples():
    half = base_of([("p",), ("p",), ("q",), ("q",)], ["1", "1", "0", "0"])
    assert gain_ratio(half, 0) == pytest.approx(1.0)
    const = base_of([("p",), ("p",)], ["1", "0"])
    assert gain_ratio(const, 0, return_flag=True) == (0.0, True)
    # four values, uniform; two classes split 2/2 by value pairs -> IG 1, split info 2
    four = base_of([("a",), ("b",), ("c",), ("d",)], ["1", "1", "0", "0"])
    assert information_gain(four, 0) == pytest.approx(1.0)
    assert gain_ratio(four, 0) == pytest.approx(0.5)


def test_feature_order_examples():
    assert order_from_weights([0.2, 0.9, 0.2]) == [1, 0, 2]
    assert order_from_weights([0.5] * 5) == [0, 1, 2, 3, 4]


def test_left_of_focus_ranks_first(corpus):
    for task in ("M1", "M2", "M3"):
        base = build_instance_base(corpus, task)
        assert feature_order(base)[0] == 2


def test_feature_index_out_of_range():
    b = base_of([("p",)], ["1"])
    with pytest.raises(IndexError):
        information_gain(b, 3)


# --- properties against the independent oracle ----------------------------

rows_labels = st.integers(1, 40).flatmap(lambda n: st.tuples(
    st.lists(st.lists(st.sampled_from("abcd"), min_size=3, max_size=3), min_size=n, max_size=n),
    st.lists(st.sampled_from(["0", "1", "2"]), min_size=n, max_size=n),
))


@settings(max_examples=150, deadline=None)
@given(rows_labels)
def test_gain_matches_oracle_and_bounds(data):
    rows, labels = data
    b = base_of(rows, labels)
    h = oracles.entropy(list(np.bincount([int(x) for x in labels])))
    for f in range(3):
        g = information_gain(b, f)
        assert g == pytest.approx(oracles.gain(rows, labels, f), abs=1e-12)
        assert 0.0 <= g <= h + 1e-12


@settings(max_examples=80, deadline=None)
@given(rows_labels, st.randoms(use_true_random=False), st.integers(2, 4))
def test_gain_invariant_to_order_and_duplication(data, rnd, k):
    rows, labels = data
    b = base_of(rows, labels)
    pairs = list(zip(rows, labels))
    rnd.shuffle(pairs)
    shuffled = base_of([r for r, _ in pairs], [l for _, l in pairs])
    dup = base_of(rows * k, labels * k)
    w = feature_weights(b)
    np.testing.assert_allclose(feature_weights(shuffled), w, atol=1e-12)
    np.testing.assert_allclose(feature_weights(dup), w, atol=1e-12)


@given(st.lists(st.sampled_from("xyz"), min_size=2, max_size=30))
def test_perfectly_correlated_feature_gain_is_class_entropy(values):
    labels = [{"x": "0", "y": "1", "z": "2"}[v] for v in values]
    b = base_of([(v,) for v in values], labels)
    h = oracles.entropy(list(np.unique(labels, return_counts=True)[1]))
    assert information_gain(b, 0) == pytest.approx(h, abs=1e-12)
