import random
import time

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from mblmorph.analyzer import (
    AnalysisError,
    MorphSegmenter,
    Segmentation,
    analyze_word,
    batch_analyze,
)
from mblmorph.corpus import parse_lexicon

from test_evaluation import TOY


@pytest.fixture(scope="module")
def toy_words():
    return parse_lexicon(TOY)


@pytest.fixture(scope="module")
def corpus_model(corpus):
    return MorphSegmenter("igtree", "M3").fit(corpus)


@pytest.mark.parametrize("algo", ["ib1", "ib1ig", "igtree"])
def test_abnormalities_recovered(toy_words, algo):
    model = MorphSegmenter(algo, "M3").fit(toy_words)
    seg = analyze_word(model, "abnormalities")
    assert str(seg) == "ab/1 norm/s al/1 iti/2 es/i"
    assert seg.pipe_form == "ab|norm|al|iti|es"
    assert seg.to_line() == "abnormalities\tab/1 norm/s al/1 iti/2 es/i"
    assert not seg.coerced


def test_single_letter_word(toy_words):
    model = MorphSegmenter("ib1ig", "M3").fit(toy_words)
    seg = analyze_word(model, "q")
    assert len(seg.segments) == 1 and seg.segments[0][0] == "q"
    assert seg.boundaries[0][0] == 0


def test_position_zero_coercion():
    words = parse_lexicon("abcdefgh\tabcdefgh/s\nijklmnop\tijklmnop/s\n")
    # with no context the unseen focus letter falls back to the root default, the majority '0'
    model = MorphSegmenter("igtree", "M2", left=0, right=0).fit(words)
    seg = analyze_word(model, "zzz")
    assert seg.coerced
    assert seg.segments == [("zzz", "d")]


def test_empty_surface_rejected(toy_words):
    model = MorphSegmenter("ib1", "M1").fit(toy_words)
    with pytest.raises(ValueError):
        analyze_word(model, "")


def test_batch_empty_and_errors(toy_words):
    model = MorphSegmenter("ib1ig", "M1").fit(toy_words)
    assert batch_analyze(model, []) == []
    out = batch_analyze(model, ["helpful", "a-b", "boxes"])
    assert isinstance(out[1], AnalysisError) and out[1].index == 1
    assert isinstance(out[0], Segmentation) and out[0].surface == "helpful"
    assert out[2].pipe_form == "box|es"


def test_batch_1000_words_igtree(corpus, corpus_model):
    rng = random.Random(5)
    words = [w.surface for w in rng.sample(corpus, 1000)]
    t0 = time.perf_counter()
    out = batch_analyze(corpus_model, words)
    elapsed = time.perf_counter() - t0
    assert len(out) == 1000 and all(isinstance(s, Segmentation) for s in out)
    assert [s.surface for s in out] == words
    print(f"igtree throughput: {1000 / elapsed:.0f} words/s")


class CountingClassifier:
    """Wraps a classifier and records how many rows it was asked to classify."""

    def __init__(self, inner):
        self.inner = inner
        self.global_counts_ = inner.global_counts_
        self.rows = 0

    def predict(self, X):
        self.rows += len(X)
        return self.inner.predict(X)


@settings(max_examples=50, deadline=None)
@given(st.text(alphabet="abcdefghilmnoprstuy", min_size=1, max_size=20))
def test_segmentation_invariants(corpus_model, surface):
    spy = MorphSegmenter("igtree", "M3")
    spy.classifier_ = CountingClassifier(corpus_model.classifier_)
    seg = analyze_word(spy, surface)
    assert "".join(t for t, _ in seg.segments) == surface
    positions = [p for p, _ in seg.boundaries]
    assert positions[0] == 0 and positions == sorted(set(positions))
    assert all(p < len(surface) for p in positions)
    assert spy.classifier_.rows == len(surface)
    assert analyze_word(corpus_model, surface) == seg


def test_score_and_params(toy_words):
    model = MorphSegmenter("igtree", "M3", left=2, right=2).fit(toy_words)
    assert model.get_params() == {"algorithm": "igtree", "task": "M3", "left": 2, "right": 2}
    assert model.score(toy_words) == 1.0
