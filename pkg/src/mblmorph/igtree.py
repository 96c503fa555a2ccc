"""IGTree: an instance base compressed into a trie ordered by feature gain.

Paths stop as soon as the instances below a node share one class. Every
node keeps the majority label of its instances, which is returned when a
query's next feature value has no matching arc.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple, Optional

import numpy as np
from sklearn.base import BaseEstimator, ClassifierMixin
from sklearn.utils.validation import check_is_fitted

from .info import feature_order
from .instancebase import InstanceBase
from .validation import check_symbols, check_targets


class Node:
    __slots__ = ("label", "children")

    def __init__(self, label: str, children: Optional[dict] = None):
        self.label = label
        self.children = children

    @property
    def is_leaf(self) -> bool:
        return self.children is None


@dataclass(eq=False)
class IGTree:
    order: tuple
    root: Node
    labels: tuple
    n_source_vectors: int
    task: object = None
    left: Optional[int] = None
    right: Optional[int] = None

    @property
    def n_features(self) -> int:
        return len(self.order)

    def iter_nodes(self):
        """Preorder walk yielding ``(arc value, node, depth)``; arcs sorted by value."""
        stack = [(None, self.root, 0)]
        while stack:
            value, node, depth = stack.pop()
            yield value, node, depth
            if node.children:
                for v in sorted(node.children, reverse=True):
                    stack.append((v, node.children[v], depth + 1))


class TreeStats(NamedTuple):
    nodes: int
    arcs: int
    compression: float


def build_igtree(base: InstanceBase, order=None) -> IGTree:
    n = base.n_features
    if order is None:
        order = feature_order(base, "gain")
    order = tuple(int(i) for i in order)
    if sorted(order) != list(range(n)):
        raise ValueError(f"order {order} is not a permutation of 0..{n - 1}")
    names = {code: sym for sym, code in base.symbols.items()}
    codes, counts = base.codes, base.counts

    def grow(idx, depth):
        sub = counts[idx].sum(axis=0)
        label = base.labels[int(base.majority(sub)[0])]
        if np.count_nonzero(sub) == 1 or depth == n:
            return Node(label)
        vals = codes[idx, order[depth]]
        perm = np.argsort(vals, kind="stable")
        idx, vals = idx[perm], vals[perm]
        cuts = np.flatnonzero(np.diff(vals)) + 1
        children = {}
        for part in np.split(idx, cuts):
            children[names[int(codes[part[0], order[depth]])]] = grow(part, depth + 1)
        return Node(label, children)

    root = grow(np.arange(base.n_unique), 0)
    return IGTree(order, root, base.labels, base.n_unique, base.task, base.left, base.right)


def classify_igtree(tree: IGTree, x):
    """``(label, matched depth)``: the leaf label, or the default of the last
    node whose arcs still matched."""
    if len(x) != tree.n_features:
        raise ValueError(f"query has {len(x)} features, expected {tree.n_features}")
    node, depth = tree.root, 0
    while node.children is not None:
        child = node.children.get(x[tree.order[depth]])
        if child is None:
            break
        node, depth = child, depth + 1
    return node.label, depth


def tree_stats(tree: IGTree, base: Optional[InstanceBase] = None) -> TreeStats:
    n_nodes = n_arcs = 0
    for value, _, _ in tree.iter_nodes():
        n_nodes += 1
        n_arcs += value is not None
    n_vectors = base.n_unique if base is not None else tree.n_source_vectors
    ratio = 1.0 - (n_nodes + n_arcs) / (n_vectors * tree.n_features)
    return TreeStats(n_nodes, n_arcs, ratio)


class IGTreeClassifier(ClassifierMixin, BaseEstimator):
    """Decision-trie classifier with default fallback.

    Parameters
    ----------
    ordering : {"gain", "gain-ratio"}
        Criterion used once, over the whole base, to order the features.
    """

    def __init__(self, ordering="gain"):
        self.ordering = ordering

    def fit(self, X, y):
        X = check_symbols(X)
        y = check_targets(y, len(X))
        return self.fit_base(InstanceBase.from_instances(X, y))

    def fit_base(self, base: InstanceBase):
        self.tree_ = build_igtree(base, feature_order(base, self.ordering))
        self.classes_ = np.asarray(base.labels, dtype=object)
        self.n_features_in_ = base.n_features
        self.global_counts_ = dict(zip(base.labels, base.global_counts.tolist()))
        return self

    def classify(self, X):
        """Labels and matched depths for every row of ``X``."""
        check_is_fitted(self, "tree_")
        X = check_symbols(X, n_features=self.tree_.n_features)
        out = [classify_igtree(self.tree_, row) for row in X]
        labels = np.asarray([lab for lab, _ in out], dtype=object)
        depths = np.asarray([d for _, d in out], dtype=int)
        return labels, depths

    def predict(self, X):
        return self.classify(X)[0]


def make_igtree(base: InstanceBase, ordering: str = "gain") -> IGTreeClassifier:
    return IGTreeClassifier(ordering=ordering).fit_base(base)
