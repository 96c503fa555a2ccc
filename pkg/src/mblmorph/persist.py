"""Versioned plain-text model files.

Layout (tab separated)::

    mblmorph-model  1
    kind            ib1 | ib1ig | igtree
    param           <weighting or ordering>
    task            M1 | M2 | M3 | -
    window          <left> <right>  (or - -)
    features        <n>
    labels          <label> ...
    global          <count> ...

followed, for memory-based models, by ``weights`` and ``vectors <U>`` and one
line per stored vector (features, then ``label:count`` fields); for IGTree
models by ``order``, ``vectors <U>``, ``nodes <N>`` and one preorder line per
node (``arc value``, ``label``, ``child count``).
"""
from __future__ import annotations

import numpy as np

from .corpus import get_task
from .igtree import IGTree, IGTreeClassifier, Node
from .instancebase import InstanceBase
from .mbl import IB1Classifier, IB1IGClassifier, MBLClassifier

MAGIC = "mblmorph-model"
FORMAT_VERSION = 1


class ModelFormatError(ValueError):
    pass


def _kind(model) -> str:
    if isinstance(model, IGTreeClassifier):
        return "igtree"
    if isinstance(model, IB1IGClassifier):
        return "ib1ig"
    if isinstance(model, MBLClassifier):
        return "ib1"
    raise TypeError(f"cannot serialise {type(model).__name__}")


def _check_field(sym: str) -> str:
    if sym == "" or any(ch in sym for ch in "\t\n\r"):
        raise ValueError(f"symbol {sym!r} cannot be written to a model file")
    return sym


def dumps_model(model) -> str:
    kind = _kind(model)
    if kind == "igtree":
        tree = model.tree_
        labels, task, left, right = tree.labels, tree.task, tree.left, tree.right
        param, n = model.ordering, tree.n_features
    else:
        base = model.base_
        labels, task, left, right = base.labels, base.task, base.left, base.right
        param, n = model.weighting, base.n_features
    glob = model.global_counts_
    out = [
        f"{MAGIC}\t{FORMAT_VERSION}",
        f"kind\t{kind}",
        f"param\t{param}",
        f"task\t{task.id if task is not None else '-'}",
        "window\t" + ("-\t-" if left is None else f"{left}\t{right}"),
        f"features\t{n}",
        "labels\t" + "\t".join(_check_field(lab) for lab in labels),
        "global\t" + "\t".join(str(glob[lab]) for lab in labels),
    ]
    if kind == "igtree":
        out.append("order\t" + "\t".join(map(str, tree.order)))
        out.append(f"vectors\t{tree.n_source_vectors}")
        nodes = list(tree.iter_nodes())
        out.append(f"nodes\t{len(nodes)}")
        for value, node, _ in nodes:
            nkids = 0 if node.children is None else len(node.children)
            arc = "" if value is None else _check_field(value)
            out.append(f"{arc}\t{node.label}\t{nkids}")
    else:
        out.append("weights\t" + "\t".join(repr(float(w)) for w in base.weights))
        out.append(f"vectors\t{base.n_unique}")
        for vec, row in zip(base.vectors, base.counts):
            dist = "\t".join(f"{lab}:{int(c)}" for lab, c in zip(labels, row) if c)
            out.append("\t".join(_check_field(s) for s in vec) + "\t" + dist)
    return "\n".join(out) + "\n"


def save_model(model, path) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(dumps_model(model))


class _Lines:
    def __init__(self, text):
        self.lines = text.split("\n")
        self.pos = 0

    def next(self):
        if self.pos >= len(self.lines):
            raise ModelFormatError("unexpected end of model file")
        line = self.lines[self.pos]
        self.pos += 1
        return line

    def field(self, name):
        parts = self.next().split("\t")
        if parts[0] != name:
            raise ModelFormatError(f"line {self.pos}: expected {name!r}, got {parts[0]!r}")
        return parts[1:]


def loads_model(text: str):
    r = _Lines(text)
    head = r.next().split("\t")
    if head[0] != MAGIC:
        raise ModelFormatError("not a model file")
    if head[1:] != [str(FORMAT_VERSION)]:
        raise ModelFormatError(f"unsupported model format version {head[1:]}")
    (kind,) = r.field("kind")
    (param,) = r.field("param")
    (task_id,) = r.field("task")
    task = None if task_id == "-" else get_task(task_id)
    left, right = r.field("window")
    left, right = (None, None) if left == "-" else (int(left), int(right))
    n = int(r.field("features")[0])
    labels = tuple(r.field("labels"))
    glob = [int(c) for c in r.field("global")]
    global_counts = dict(zip(labels, glob))

    if kind == "igtree":
        order = tuple(int(i) for i in r.field("order"))
        n_vectors = int(r.field("vectors")[0])
        n_nodes = int(r.field("nodes")[0])
        root = _read_tree(r, n_nodes)
        model = IGTreeClassifier(ordering=param)
        model.tree_ = IGTree(order, root, labels, n_vectors, task, left, right)
    elif kind in ("ib1", "ib1ig"):
        weights = np.array([float(w) for w in r.field("weights")])
        n_vectors = int(r.field("vectors")[0])
        vectors, dists = [], []
        for _ in range(n_vectors):
            parts = r.next().split("\t")
            vectors.append(tuple(parts[:n]))
            dist = {}
            for tok in parts[n:]:
                lab, _, cnt = tok.rpartition(":")
                dist[lab] = int(cnt)
            dists.append(dist)
        base = InstanceBase.from_distributions(vectors, dists, task=task, left=left, right=right,
                                               weights=weights, labels=labels)
        if base.labels != labels:
            raise ModelFormatError("label table does not match stored distributions")
        model = (IB1IGClassifier if kind == "ib1ig" else IB1Classifier)(weighting=param)
        model.base_ = base
    else:
        raise ModelFormatError(f"unknown model kind {kind!r}")
    model.classes_ = np.asarray(labels, dtype=object)
    model.n_features_in_ = n
    model.global_counts_ = global_counts
    return model


def _read_tree(r: _Lines, n_nodes: int) -> Node:
    seen = 0

    def read():
        nonlocal seen
        seen += 1
        if seen > n_nodes:
            raise ModelFormatError("more nodes than declared")
        value, label, nkids = r.next().split("\t")
        nkids = int(nkids)
        node = Node(label)
        if nkids:
            node.children = {}
            for _ in range(nkids):
                child_value, child = read()
                node.children[child_value] = child
        return value, node

    _, root = read()
    if seen != n_nodes:
        raise ModelFormatError(f"declared {n_nodes} nodes, read {seen}")
    return root


def load_model(path):
    with open(path, encoding="utf-8") as fh:
        return loads_model(fh.read())
