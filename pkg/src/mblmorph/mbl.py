"""IB1 and IB1-IG: 1-nearest-neighbour classification under the weighted overlap metric."""
from __future__ import annotations

import numpy as np
from sklearn.base import BaseEstimator, ClassifierMixin
from sklearn.utils.validation import check_is_fitted

from .info import feature_weights
from .instancebase import InstanceBase
from .validation import check_symbols, check_targets

# Budget of (query, stored vector) pairs evaluated per block.
_BLOCK_CELLS = 1 << 22


def distance(x, y, w) -> float:
    """Weighted overlap distance: sum of the weights of mismatching features."""
    if not (len(x) == len(y) == len(w)):
        raise ValueError(f"length mismatch: {len(x)}, {len(y)}, {len(w)}")
    return float(sum(wi for xi, yi, wi in zip(x, y, w) if xi != yi))


def _tie_tolerance(weights) -> float:
    return 1e-12 * (1.0 + float(np.sum(weights)))


def nearest_counts(base: InstanceBase, Q: np.ndarray):
    """Minimum distances and merged class counts for encoded queries ``Q``.

    Returns ``(dmin, merged)`` with ``merged[r]`` the summed counts of every
    stored vector at the minimum distance from query ``r``.
    """
    w = base.weights
    active = [i for i in range(base.n_features) if w[i] != 0.0]
    codes = base.codes
    tol = _tie_tolerance(w)
    n_q = Q.shape[0]
    dmin = np.empty(n_q)
    merged = np.empty((n_q, base.counts.shape[1]), dtype=np.int64)
    step = max(1, _BLOCK_CELLS // max(1, base.n_unique))
    for start in range(0, n_q, step):
        block = Q[start:start + step]
        D = np.zeros((block.shape[0], base.n_unique))
        for i in active:
            D += w[i] * (block[:, i][:, None] != codes[:, i][None, :])
        best = D.min(axis=1)
        mask = D <= (best + tol)[:, None]
        dmin[start:start + step] = best
        merged[start:start + step] = mask.astype(np.int64) @ base.counts
    return dmin, merged


def nearest_set(base: InstanceBase, x):
    """``(min distance, merged distribution)`` for a single query vector."""
    dmin, merged = nearest_counts(base, base.encode([x]))
    return float(dmin[0]), base.to_distribution(merged[0])


def classify(base: InstanceBase, x):
    """``(label, merged distribution, min distance)`` for a single query vector."""
    dmin, merged = nearest_counts(base, base.encode([x]))
    label = base.labels[int(base.majority(merged)[0])]
    return label, base.to_distribution(merged[0]), float(dmin[0])


class MBLClassifier(ClassifierMixin, BaseEstimator):
    """Memory-based classifier storing every instance and returning the
    majority class among the nearest stored vectors.

    Parameters
    ----------
    weighting : {"uniform", "gain", "gain-ratio"}
        Feature weights for the overlap distance. ``"uniform"`` is IB1,
        ``"gain"`` is IB1-IG.
    """

    def __init__(self, weighting="uniform"):
        self.weighting = weighting

    def fit(self, X, y):
        X = check_symbols(X)
        y = check_targets(y, len(X))
        return self.fit_base(InstanceBase.from_instances(X, y))

    def fit_base(self, base: InstanceBase):
        """Fit directly from a prepared instance base (weights are recomputed)."""
        self.base_ = base.with_weights(feature_weights(base, self.weighting))
        self.classes_ = np.asarray(self.base_.labels, dtype=object)
        self.n_features_in_ = self.base_.n_features
        self.global_counts_ = dict(zip(base.labels, base.global_counts.tolist()))
        return self

    @property
    def weights_(self):
        check_is_fitted(self, "base_")
        return self.base_.weights

    def _nearest(self, X):
        check_is_fitted(self, "base_")
        X = check_symbols(X, n_features=self.base_.n_features)
        return nearest_counts(self.base_, self.base_.encode(X))

    def classify(self, X):
        """Labels, merged nearest-neighbour counts and minimum distances."""
        dmin, merged = self._nearest(X)
        labels = self.classes_[self.base_.majority(merged)]
        return labels, merged, dmin

    def predict(self, X):
        return self.classify(X)[0]

    def predict_proba(self, X):
        _, merged = self._nearest(X)
        return merged / merged.sum(axis=1, keepdims=True)


class IB1Classifier(MBLClassifier):
    def __init__(self, weighting="uniform"):
        super().__init__(weighting=weighting)


class IB1IGClassifier(MBLClassifier):
    def __init__(self, weighting="gain"):
        super().__init__(weighting=weighting)


def make_ib1(base: InstanceBase) -> IB1Classifier:
    return IB1Classifier().fit_base(base)


def make_ib1ig(base: InstanceBase) -> IB1IGClassifier:
    return IB1IGClassifier().fit_base(base)
