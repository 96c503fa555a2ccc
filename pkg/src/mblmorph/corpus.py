"""Lexicon parsing, task label projection and windowing.

A lexicon line looks like::

    abnormalities<TAB>ab/1 norm/s al/1 iti/2 es/i

Segments are always annotated with the finest tag set (``s``, ``1``, ``2``,
``i``); the coarser tasks are projections of it.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Mapping, NamedTuple, Sequence

PAD = "-"
NULL = "0"
MORPH_TAGS = ("s", "1", "2", "i")

# Deterministic order used as the last tie-break between labels.
LABEL_ORDER = ("0", "s", "1", "2", "d", "i")


class LexiconError(ValueError):
    """Raised for a malformed lexicon line."""

    def __init__(self, lineno: int, message: str):
        super().__init__(f"line {lineno}: {message}")
        self.lineno = lineno
        self.reason = message


@dataclass(frozen=True)
class TaskSpec:
    id: str
    labels: tuple
    projection: Mapping[str, str] = field(hash=False)

    def project(self, tag: str) -> str:
        return self.projection[tag]


TASKS = {
    "M1": TaskSpec("M1", ("0", "1"), {"s": "1", "1": "1", "2": "1", "i": "1"}),
    "M2": TaskSpec("M2", ("0", "d", "i"), {"s": "d", "1": "d", "2": "d", "i": "i"}),
    "M3": TaskSpec("M3", ("0", "s", "1", "2", "i"), {t: t for t in MORPH_TAGS}),
}


def get_task(task) -> TaskSpec:
    if isinstance(task, TaskSpec):
        return task
    try:
        return TASKS[str(task).upper()]
    except KeyError:
        raise ValueError(f"unknown task {task!r}; expected one of M1, M2, M3") from None


def check_surface(surface: str) -> None:
    """Reject surfaces that cannot be windowed or written back out."""
    if not surface:
        raise ValueError("empty surface")
    if PAD in surface:
        raise ValueError(f"surface {surface!r} contains the pad symbol {PAD!r}")
    if any(ch.isspace() for ch in surface):
        raise ValueError(f"surface {surface!r} contains whitespace")


@dataclass(frozen=True)
class AnnotatedWord:
    surface: str
    segments: tuple  # ((text, tag), ...)

    def __post_init__(self):
        check_surface(self.surface)
        object.__setattr__(self, "segments", tuple((str(t), str(g)) for t, g in self.segments))
        if not self.segments:
            raise ValueError("word has no segments")
        for text, tag in self.segments:
            if not text:
                raise ValueError("empty segment")
            if tag not in MORPH_TAGS:
                raise ValueError(f"unknown tag {tag!r}")
        joined = "".join(text for text, _ in self.segments)
        if joined != self.surface:
            raise ValueError(f"segments concatenate to {joined!r}, not {self.surface!r}")

    def __len__(self):
        return len(self.surface)

    def to_line(self) -> str:
        return self.surface + "\t" + " ".join(f"{t}/{g}" for t, g in self.segments)


class Instance(NamedTuple):
    features: tuple
    label: str
    word: int
    position: int


def parse_segment(token: str) -> tuple:
    text, sep, tag = token.rpartition("/")
    if not sep:
        raise ValueError(f"segment {token!r} has no tag")
    if not text:
        raise ValueError(f"empty segment in {token!r}")
    return text, tag


def parse_line(line: str, lineno: int = 0, lowercase: bool = False) -> AnnotatedWord:
    if lowercase:
        line = line.lower()
    surface, sep, rest = line.partition("\t")
    if not sep:
        raise LexiconError(lineno, "missing TAB between surface and segmentation")
    tokens = rest.split()
    if not tokens:
        raise LexiconError(lineno, "missing segmentation")
    try:
        return AnnotatedWord(surface, tuple(parse_segment(tok) for tok in tokens))
    except ValueError as exc:
        raise LexiconError(lineno, str(exc)) from None


def parse_lexicon(text: str, lowercase: bool = False) -> list:
    """Parse a lexicon document into a list of :class:`AnnotatedWord`.

    Blank lines and ``#`` comments are skipped. Duplicate surfaces are kept.
    """
    words = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.rstrip("\r\n")
        if not line.strip() or line.lstrip().startswith("#"):
            continue
        words.append(parse_line(line, lineno, lowercase))
    return words


def read_lexicon(path, lowercase: bool = False) -> list:
    with open(path, encoding="utf-8") as fh:
        return parse_lexicon(fh.read(), lowercase=lowercase)


def format_lexicon(words: Iterable[AnnotatedWord]) -> str:
    return "".join(w.to_line() + "\n" for w in words)


def project_labels(word: AnnotatedWord, task) -> list:
    """One class label per surface position; ``'0'`` where no morpheme starts."""
    task = get_task(task)
    labels = [NULL] * len(word.surface)
    pos = 0
    for text, tag in word.segments:
        labels[pos] = task.project(tag)
        pos += len(text)
    return labels


def segments_from_labels(surface: str, labels: Sequence[str]) -> list:
    """Split ``surface`` before every non-null label."""
    if len(labels) != len(surface):
        raise ValueError("label sequence length differs from surface length")
    starts = [i for i, lab in enumerate(labels) if lab != NULL]
    if not starts or starts[0] != 0:
        raise ValueError("first position carries no boundary label")
    bounds = starts + [len(surface)]
    return [(surface[a:b], labels[a]) for a, b in zip(bounds, bounds[1:])]


def window(symbols: Sequence[str], left: int, right: int) -> list:
    """Fixed-width feature vectors, one per position, padded with :data:`PAD`."""
    if left < 0 or right < 0:
        raise ValueError("window widths must be non-negative")
    padded = [PAD] * left + list(symbols) + [PAD] * right
    width = left + 1 + right
    return [tuple(padded[k:k + width]) for k in range(len(symbols))]


def window_word(word: AnnotatedWord, task, left: int = 3, right: int = 3, index: int = 0) -> list:
    labels = project_labels(word, task)
    return [Instance(vec, lab, index, k)
            for k, (vec, lab) in enumerate(zip(window(word.surface, left, right), labels))]


def window_words(words: Sequence[AnnotatedWord], task, left: int = 3, right: int = 3):
    """Flatten ``words`` into ``(X, y, provenance)`` lists."""
    X, y, prov = [], [], []
    for i, word in enumerate(words):
        for inst in window_word(word, task, left, right, index=i):
            X.append(inst.features)
            y.append(inst.label)
            prov.append((inst.word, inst.position))
    return X, y, prov


def build_instance_base(words: Sequence[AnnotatedWord], task, left: int = 3, right: int = 3):
    from .instancebase import InstanceBase

    if not words:
        raise ValueError("cannot build an instance base from an empty word list")
    task = get_task(task)
    X, y, _ = window_words(words, task, left, right)
    return InstanceBase.from_instances(X, y, task=task, left=left, right=right)
