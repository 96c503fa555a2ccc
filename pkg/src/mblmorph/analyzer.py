"""Word segmentation with a trained classifier."""
from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple, Union

from sklearn.base import BaseEstimator
from sklearn.utils.validation import check_is_fitted

from .corpus import NULL, build_instance_base, check_surface, get_task, project_labels, window
from .igtree import IGTreeClassifier
from .instancebase import label_sort_key
from .mbl import IB1Classifier, IB1IGClassifier

ALGORITHMS = {
    "ib1": IB1Classifier,
    "ib1ig": IB1IGClassifier,
    "igtree": IGTreeClassifier,
}


def make_classifier(algorithm: str):
    try:
        return ALGORITHMS[algorithm.lower()]()
    except KeyError:
        raise ValueError(f"unknown algorithm {algorithm!r}; expected one of {sorted(ALGORITHMS)}") from None


@dataclass(frozen=True)
class Segmentation:
    surface: str
    boundaries: tuple  # ((position, label), ...), position 0 first
    coerced: bool = False

    @property
    def segments(self) -> list:
        cuts = [p for p, _ in self.boundaries] + [len(self.surface)]
        return [(self.surface[a:b], lab) for (a, lab), b in zip(self.boundaries, cuts[1:])]

    @property
    def pipe_form(self) -> str:
        return "|".join(text for text, _ in self.segments)

    def to_line(self) -> str:
        return self.surface + "\t" + " ".join(f"{t}/{g}" for t, g in self.segments)

    def __str__(self):
        return " ".join(f"{t}/{g}" for t, g in self.segments)


class AnalysisError(NamedTuple):
    index: int
    word: str
    message: str


def segmentation_from_labels(surface: str, labels, fallback: str) -> Segmentation:
    labels = list(labels)
    coerced = labels[0] == NULL
    if coerced:
        labels[0] = fallback
    bounds = tuple((p, lab) for p, lab in enumerate(labels) if lab != NULL)
    return Segmentation(surface, bounds, coerced)


class MorphSegmenter(BaseEstimator):
    """Segments words into typed morphemes by classifying every letter window.

    Parameters
    ----------
    algorithm : {"ib1", "ib1ig", "igtree"}
    task : {"M1", "M2", "M3"}
    left, right : int
        Context letters on each side of the focus letter.
    """

    def __init__(self, algorithm="ib1ig", task="M3", left=3, right=3):
        self.algorithm = algorithm
        self.task = task
        self.left = left
        self.right = right

    def fit(self, words, y=None):
        """Train on a list of :class:`~mblmorph.corpus.AnnotatedWord`."""
        base = build_instance_base(list(words), get_task(self.task), self.left, self.right)
        self.classifier_ = make_classifier(self.algorithm).fit_base(base)
        self.n_instances_ = base.n_instances
        self.n_unique_ = base.n_unique
        return self

    @classmethod
    def from_classifier(cls, clf):
        """Wrap a fitted (for instance loaded) classifier carrying its own schema."""
        schema = clf.tree_ if isinstance(clf, IGTreeClassifier) else clf.base_
        if schema.task is None or schema.left is None:
            raise ValueError("classifier has no task/window schema")
        algorithm = {IGTreeClassifier: "igtree", IB1IGClassifier: "ib1ig"}.get(type(clf), "ib1")
        seg = cls(algorithm, schema.task.id, schema.left, schema.right)
        seg.classifier_ = clf
        return seg

    @property
    def boundary_fallback_(self) -> str:
        """Most frequent non-null training label, forced onto position 0 when needed."""
        check_is_fitted(self, "classifier_")
        glob = self.classifier_.global_counts_
        candidates = [lab for lab in glob if lab != NULL]
        return min(candidates, key=lambda lab: (-glob[lab], label_sort_key(lab)))

    def predict_labels(self, surfaces) -> list:
        check_is_fitted(self, "classifier_")
        surfaces = list(surfaces)
        X, spans = [], []
        for s in surfaces:
            check_surface(s)
            spans.append((len(X), len(X) + len(s)))
            X.extend(window(s, self.left, self.right))
        if not X:
            return []
        flat = list(self.classifier_.predict(X))
        return [flat[a:b] for a, b in spans]

    def predict(self, surfaces) -> list:
        surfaces = list(surfaces)
        fallback = self.boundary_fallback_
        return [segmentation_from_labels(s, labs, fallback)
                for s, labs in zip(surfaces, self.predict_labels(surfaces))]

    def score(self, words) -> float:
        """Fraction of words whose every position is labelled correctly."""
        words = list(words)
        preds = self.predict_labels(w.surface for w in words)
        task = get_task(self.task)
        return sum(p == project_labels(w, task) for p, w in zip(preds, words)) / len(words)


def analyze_word(model: MorphSegmenter, surface: str) -> Segmentation:
    if not surface:
        raise ValueError("empty surface")
    return model.predict([surface])[0]


def batch_analyze(model: MorphSegmenter, words) -> list:
    """Analyse ``words`` in order; bad entries become :class:`AnalysisError` records."""
    words = list(words)
    results: list = [None] * len(words)
    good = []
    for i, w in enumerate(words):
        try:
            check_surface(w)
        except ValueError as exc:
            results[i] = AnalysisError(i, w, str(exc))
        else:
            good.append(i)
    if good:
        for i, seg in zip(good, model.predict([words[i] for i in good])):
            results[i] = seg
    return results


AnalysisResult = Union[Segmentation, AnalysisError]
