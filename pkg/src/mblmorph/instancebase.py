"""Deduplicated instance storage shared by all classifiers."""
from __future__ import annotations

from dataclasses import dataclass, replace
from functools import cached_property
from typing import Optional, Sequence

import numpy as np

from .corpus import LABEL_ORDER, TaskSpec


def label_sort_key(label):
    label = str(label)
    if label in LABEL_ORDER:
        return (0, LABEL_ORDER.index(label), "")
    return (1, 0, label)


@dataclass(frozen=True, eq=False)
class InstanceBase:
    """Unique feature vectors with occurrence-counted class distributions.

    ``counts[j, c]`` is how often vector ``vectors[j]`` was seen with label
    ``labels[c]``. ``weights`` are the per-feature weights used by the
    overlap distance; they default to 1.
    """

    vectors: tuple
    labels: tuple
    counts: np.ndarray
    codes: np.ndarray
    symbols: dict
    weights: np.ndarray
    task: Optional[TaskSpec] = None
    left: Optional[int] = None
    right: Optional[int] = None

    @classmethod
    def from_distributions(cls, vectors, distributions, task=None, left=None, right=None,
                           weights=None, labels=None):
        vectors = [tuple(str(s) for s in v) for v in vectors]
        if not vectors:
            raise ValueError("instance base needs at least one vector")
        n = len(vectors[0])
        if any(len(v) != n for v in vectors):
            raise ValueError("all feature vectors must have the same length")
        if task is not None and left is not None and right is not None and left + 1 + right != n:
            raise ValueError("window widths do not match the feature count")
        seen = set(labels or ())
        for dist in distributions:
            seen.update(str(k) for k in dist)
        if task is not None:
            seen.update(task.labels)
        label_tuple = tuple(sorted(seen, key=label_sort_key))
        col = {lab: c for c, lab in enumerate(label_tuple)}

        counts = np.zeros((len(vectors), len(label_tuple)), dtype=np.int64)
        for j, dist in enumerate(distributions):
            for lab, cnt in dist.items():
                if cnt < 0:
                    raise ValueError("negative class count")
                counts[j, col[str(lab)]] += int(cnt)
        if np.any(counts.sum(axis=1) < 1):
            raise ValueError("every stored vector needs a total count of at least 1")

        symbols = {}
        codes = np.empty((len(vectors), n), dtype=np.int32)
        for j, vec in enumerate(vectors):
            for i, sym in enumerate(vec):
                codes[j, i] = symbols.setdefault(sym, len(symbols))

        w = np.ones(n) if weights is None else _check_weights(weights, n)
        return cls(tuple(vectors), label_tuple, counts, codes, symbols, w, task, left, right)

    @classmethod
    def from_instances(cls, X: Sequence[Sequence[str]], y: Sequence[str], task=None,
                       left=None, right=None, weights=None):
        if len(X) != len(y):
            raise ValueError(f"X has {len(X)} rows but y has {len(y)} labels")
        if len(X) == 0:
            raise ValueError("cannot build an instance base from zero instances")
        index = {}
        dists = []
        for vec, lab in zip(X, y):
            vec = tuple(str(s) for s in vec)
            j = index.get(vec)
            if j is None:
                j = index[vec] = len(dists)
                dists.append({})
            lab = str(lab)
            dists[j][lab] = dists[j].get(lab, 0) + 1
        return cls.from_distributions(list(index), dists, task=task, left=left, right=right,
                                      weights=weights)

    def with_weights(self, weights) -> "InstanceBase":
        return replace(self, weights=_check_weights(weights, self.n_features))

    @property
    def n_features(self) -> int:
        return self.codes.shape[1]

    @property
    def n_unique(self) -> int:
        return self.codes.shape[0]

    @property
    def n_instances(self) -> int:
        return int(self.counts.sum())

    @cached_property
    def global_counts(self) -> np.ndarray:
        return self.counts.sum(axis=0)

    @property
    def global_distribution(self) -> dict:
        return self.to_distribution(self.global_counts)

    @cached_property
    def priority(self) -> np.ndarray:
        """Label columns ordered for tie-breaking: frequent first, then fixed order."""
        g = self.global_counts
        order = sorted(range(len(self.labels)), key=lambda c: (-g[c], label_sort_key(self.labels[c])))
        return np.asarray(order, dtype=np.intp)

    def to_distribution(self, row) -> dict:
        return {self.labels[c]: int(row[c]) for c in range(len(self.labels)) if row[c]}

    def distribution(self, j: int) -> dict:
        return self.to_distribution(self.counts[j])

    def majority(self, counts) -> np.ndarray:
        """Winning label column for each row of ``counts`` under the tie rules."""
        counts = np.atleast_2d(counts)
        prio = self.priority
        return prio[np.argmax(counts[:, prio], axis=1)]

    def majority_label(self, counts) -> str:
        return self.labels[int(self.majority(counts)[0])]

    def encode(self, X) -> np.ndarray:
        """Symbol codes for query rows; unseen symbols map to -1."""
        X = [tuple(row) for row in X]
        out = np.empty((len(X), self.n_features), dtype=np.int32)
        for r, row in enumerate(X):
            if len(row) != self.n_features:
                raise ValueError(f"query has {len(row)} features, expected {self.n_features}")
            for i, sym in enumerate(row):
                out[r, i] = self.symbols.get(str(sym), -1)
        return out


def _check_weights(weights, n):
    w = np.asarray(weights, dtype=float).reshape(-1)
    if w.shape[0] != n:
        raise ValueError(f"expected {n} weights, got {w.shape[0]}")
    if np.any(w < 0) or not np.all(np.isfinite(w)):
        raise ValueError("weights must be finite and non-negative")
    return w
