"""Word-level k-fold cross-validation, error metrics and paired t-tests."""
from __future__ import annotations

import itertools
import math
import statistics
from dataclasses import dataclass, field
from typing import NamedTuple, Optional

import numpy as np
from scipy import stats

from .analyzer import make_classifier
from .corpus import get_task, project_labels, window_words
from .instancebase import InstanceBase


class InvariantError(RuntimeError):
    """An internal consistency check failed."""


@dataclass(frozen=True)
class FoldPlan:
    k: int
    assignment: tuple  # fold id per word index
    seed: int

    def test_indices(self, fold: int) -> list:
        return [i for i, f in enumerate(self.assignment) if f == fold]

    def train_indices(self, fold: int) -> list:
        return [i for i, f in enumerate(self.assignment) if f != fold]

    def sizes(self) -> list:
        return [self.assignment.count(f) for f in range(self.k)]


def make_folds(n_words: int, k: int = 10, seed: int = 0) -> FoldPlan:
    """Random partition of word indices into ``k`` folds whose sizes differ by at most 1."""
    if k < 2:
        raise ValueError("k must be at least 2")
    if n_words < k:
        raise ValueError(f"cannot split {n_words} words into {k} folds")
    perm = np.random.default_rng(seed).permutation(n_words)
    assignment = [0] * n_words
    for pos, idx in enumerate(perm):
        assignment[int(idx)] = pos % k
    return FoldPlan(k, tuple(assignment), seed)


def word_error(gold, predicted) -> bool:
    """True when the word is wrong, i.e. any position differs."""
    gold, predicted = list(gold), list(predicted)
    if len(gold) != len(predicted):
        raise ValueError(f"length mismatch: {len(gold)} vs {len(predicted)}")
    return any(g != p for g, p in zip(gold, predicted))


class FoldResult(NamedTuple):
    fold: int
    instance_errors: int
    instances: int
    word_errors: int
    words: int

    @property
    def instance_error_rate(self) -> float:
        return self.instance_errors / self.instances

    @property
    def word_error_rate(self) -> float:
        return self.word_errors / self.words


def _mean_sd(values):
    values = list(values)
    sd = statistics.stdev(values) if len(values) > 1 else 0.0
    return statistics.fmean(values), sd


@dataclass
class EvalReport:
    algorithm: str
    task: str
    left: int
    right: int
    k: int
    seed: int
    folds: list = field(default_factory=list)

    @property
    def instance_error_rates(self) -> list:
        return [f.instance_error_rate for f in self.folds]

    @property
    def word_error_rates(self) -> list:
        return [f.word_error_rate for f in self.folds]

    @property
    def instance_error(self):
        """(mean, sample standard deviation) of per-fold instance error rates."""
        return _mean_sd(self.instance_error_rates)

    @property
    def word_error(self):
        return _mean_sd(self.word_error_rates)


def run_xval(words, task="M1", left: int = 3, right: int = 3, algorithm: str = "ib1ig",
             k: int = 10, seed: int = 0, plan: Optional[FoldPlan] = None) -> EvalReport:
    """Train on k-1 folds of words, test on the held-out fold, for every fold."""
    words = list(words)
    task = get_task(task)
    if plan is None:
        plan = make_folds(len(words), k, seed)
    elif len(plan.assignment) != len(words):
        raise ValueError("fold plan does not match the word list")
    report = EvalReport(algorithm, task.id, left, right, plan.k, plan.seed)
    for fold in range(plan.k):
        train_idx = plan.train_indices(fold)
        test_idx = plan.test_indices(fold)
        X, y, prov = window_words([words[i] for i in train_idx], task, left, right)
        leaked = {train_idx[w] for w, _ in prov}.intersection(test_idx)
        if leaked:
            raise InvariantError(f"fold {fold}: test words {sorted(leaked)[:5]} in training data")
        base = InstanceBase.from_instances(X, y, task=task, left=left, right=right)
        clf = make_classifier(algorithm).fit_base(base)

        test_words = [words[i] for i in test_idx]
        Xt, yt, prov_t = window_words(test_words, task, left, right)
        pred = list(clf.predict(Xt))
        inst_err = sum(p != g for p, g in zip(pred, yt))
        word_err = 0
        pos = 0
        for w in test_words:
            n = len(w.surface)
            word_err += word_error(project_labels(w, task), pred[pos:pos + n])
            pos += n
        report.folds.append(FoldResult(fold, inst_err, len(yt), word_err, len(test_words)))
    return report


class PairedT(NamedTuple):
    t: float
    p: float
    df: int
    note: str = ""


def paired_t(scores_a, scores_b) -> PairedT:
    """Paired t-test on ``a - b``; ``p`` is the one-tailed probability of a
    statistic at least this large (alternative: mean of ``a`` exceeds ``b``)."""
    a = np.asarray(scores_a, dtype=float)
    b = np.asarray(scores_b, dtype=float)
    if a.shape != b.shape or a.ndim != 1:
        raise ValueError("score vectors must be 1-D and of equal length")
    if len(a) < 2:
        raise ValueError("need at least two paired scores")
    d = a - b
    df = len(d) - 1
    mean = float(d.mean())
    sd = float(d.std(ddof=1))
    if sd == 0.0:
        if mean == 0.0:
            return PairedT(0.0, 0.5, df)
        return PairedT(math.copysign(math.inf, mean), 0.0 if mean > 0 else 1.0, df,
                       "degenerate: all differences equal")
    t = mean / (sd / math.sqrt(len(d)))
    return PairedT(t, float(stats.t.sf(t, df)), df)


class Comparison(NamedTuple):
    task: str
    metric: str
    better: str
    worse: str
    test: PairedT


def compare_reports(reports) -> list:
    """One-tailed tests between every pair of algorithms evaluated on the same task."""
    out = []
    by_task = {}
    for r in reports:
        by_task.setdefault(r.task, []).append(r)
    for task, group in by_task.items():
        for r1, r2 in itertools.combinations(group, 2):
            for metric in ("word", "instance"):
                s1 = getattr(r1, f"{metric}_error_rates")
                s2 = getattr(r2, f"{metric}_error_rates")
                if statistics.fmean(s1) <= statistics.fmean(s2):
                    better, worse, sb, sw = r1, r2, s1, s2
                else:
                    better, worse, sb, sw = r2, r1, s2, s1
                out.append(Comparison(task, metric, better.algorithm, worse.algorithm,
                                      paired_t(sw, sb)))
    return out


def format_report(reports, comparisons=()) -> str:
    """TSV: per-fold rows, then summary and t-test blocks."""
    lines = []
    if reports:
        r0 = reports[0]
        lines.append(f"# k={r0.k}\tseed={r0.seed}\twindow={r0.left},{r0.right}")
    lines.append("fold\talgorithm\ttask\tinstance_errors\tinstances\tword_errors\twords")
    for r in reports:
        for f in r.folds:
            lines.append(f"{f.fold}\t{r.algorithm}\t{r.task}\t{f.instance_errors}\t{f.instances}"
                         f"\t{f.word_errors}\t{f.words}")
    lines.append("")
    lines.append("summary\talgorithm\ttask\tmean_instance_error\tsd_instance_error"
                 "\tmean_word_error\tsd_word_error")
    for r in reports:
        im, isd = r.instance_error
        wm, wsd = r.word_error
        lines.append(f"summary\t{r.algorithm}\t{r.task}\t{im:.6f}\t{isd:.6f}\t{wm:.6f}\t{wsd:.6f}")
    if comparisons:
        lines.append("")
        lines.append("ttest\ttask\tmetric\tbetter\tworse\tt\tp_one_tailed\tdf")
        for c in comparisons:
            if c.test.note:
                stat = f"{c.test.note}\t{c.test.p:.6g}"
            else:
                stat = f"{c.test.t:.6f}\t{c.test.p:.6g}"
            lines.append(f"ttest\t{c.task}\t{c.metric}\t{c.better}\t{c.worse}\t{stat}\t{c.test.df}")
    return "\n".join(lines) + "\n"
