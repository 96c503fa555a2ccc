"""Entropy, information gain and gain ratio over an instance base."""
from __future__ import annotations

import logging

import numpy as np

logger = logging.getLogger(__name__)


def _entropy_of_counts(counts) -> float:
    counts = np.asarray(counts, dtype=float)
    total = counts.sum()
    if total <= 0:
        raise ValueError("entropy of an empty distribution is undefined")
    p = counts[counts > 0] / total
    return float(-(p * np.log2(p)).sum())


def entropy(dist) -> float:
    """Shannon entropy in bits of a label->count mapping (or a count array)."""
    if isinstance(dist, dict):
        dist = list(dist.values())
    return _entropy_of_counts(dist)


def _value_table(base, f):
    """Per-value class counts for feature ``f`` (rows: distinct values)."""
    if not 0 <= f < base.n_features:
        raise IndexError(f"feature index {f} out of range 0..{base.n_features - 1}")
    _, inverse = np.unique(base.codes[:, f], return_inverse=True)
    table = np.zeros((inverse.max() + 1, base.counts.shape[1]), dtype=np.int64)
    np.add.at(table, inverse, base.counts)
    return table


def _gain_from_table(table) -> float:
    total = table.sum()
    h_class = _entropy_of_counts(table.sum(axis=0))
    sizes = table.sum(axis=1)
    h_cond = sum(size / total * _entropy_of_counts(row) for size, row in zip(sizes, table))
    # clamp float noise so 0 <= gain <= H(C) holds exactly
    return float(min(max(h_class - h_cond, 0.0), h_class))


def information_gain(base, f: int) -> float:
    """Class-entropy reduction from knowing feature ``f``, counted by occurrence."""
    return _gain_from_table(_value_table(base, f))


def split_info(base, f: int) -> float:
    return _entropy_of_counts(_value_table(base, f).sum(axis=1))


def gain_ratio(base, f: int, return_flag: bool = False):
    """Information gain normalised by split information.

    A feature with a single value has zero split information; its ratio is
    defined as 0 and flagged as degenerate.
    """
    table = _value_table(base, f)
    si = _entropy_of_counts(table.sum(axis=1))
    degenerate = si == 0.0
    if degenerate:
        logger.debug("feature %d takes a single value; gain ratio set to 0", f)
        ratio = 0.0
    else:
        ratio = _gain_from_table(table) / si
    return (ratio, degenerate) if return_flag else ratio


def feature_weights(base, mode: str = "gain") -> np.ndarray:
    if mode == "gain":
        fn = information_gain
    elif mode in ("gain-ratio", "gain_ratio", "gainratio"):
        fn = gain_ratio
    elif mode == "uniform":
        return np.ones(base.n_features)
    else:
        raise ValueError(f"unknown weighting mode {mode!r}")
    return np.array([fn(base, f) for f in range(base.n_features)])


def order_from_weights(weights) -> list:
    """Descending weight, ties by ascending index."""
    weights = list(weights)
    return sorted(range(len(weights)), key=lambda i: (-weights[i], i))


def feature_order(base, mode: str = "gain") -> list:
    return order_from_weights(feature_weights(base, mode))
