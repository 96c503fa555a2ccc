import pytest
from hypothesis import given
from hypothesis import strategies as st

from mblmorph.corpus import (
    PAD,
    TASKS,
    AnnotatedWord,
    LexiconError,
    build_instance_base,
    format_lexicon,
    parse_lexicon,
    project_labels,
    segments_from_labels,
    window_word,
)

from conftest import ABNORMALITIES, ABNORMALITIES_WINDOWS, abnormalities_vectors


def test_parse_abnormalities(abnormalities):
    assert abnormalities.surface == "abnormalities"
    assert [t for _, t in abnormalities.segments] == ["1", "s", "1", "2", "i"]
    assert [s for s, _ in abnormalities.segments] == ["ab", "norm", "al", "iti", "es"]


def test_parse_single_segment():
    (w,) = parse_lexicon("a\ta/s")
    assert w.segments == (("a", "s"),)


def test_comments_and_blank_lines_skipped():
    text = "# header\n\n" + ABNORMALITIES + "\n   \n#x\ta/s\n"
    assert len(parse_lexicon(text)) == 1


def test_duplicates_kept():
    assert len(parse_lexicon("a\ta/s\na\ta/s\n")) == 2


@pytest.mark.parametrize("line, cause", [
    ("abnormalities\tab/1 normal/s ity/2 es/i", "concatenate"),
    ("abnormalities\tab norm/s al/1 iti/2 es/i", "no tag"),
    ("ab\t/s ab/s", "empty segment"),
    ("ab\tab/x", "unknown tag"),
    ("ab ab/s", "missing TAB"),
    ("ab\t", "missing segmentation"),
    ("a-b\ta-b/s", "pad symbol"),
])
def test_malformed_lines(line, cause):
    with pytest.raises(LexiconError) as err:
        parse_lexicon("# c\n" + line)
    assert err.value.lineno == 2
    assert cause in str(err.value)
    assert "line 2" in str(err.value)


def test_lowercase_option():
    (w,) = parse_lexicon("Abc\tAb/1 c/s", lowercase=True)
    assert w.surface == "abc"


@pytest.mark.parametrize("task, column", [("M1", 3), ("M2", 4), ("M3", 5)])
def test_project_labels_abnormalities(abnormalities, task, column):
    assert project_labels(abnormalities, task) == [row[column] for row in ABNORMALITIES_WINDOWS]


def test_project_labels_spec_strings(abnormalities):
    assert " ".join(project_labels(abnormalities, "M3")) == "1 0 s 0 0 0 1 0 2 0 0 i 0"
    assert " ".join(project_labels(abnormalities, "M2")) == "d 0 d 0 0 0 d 0 d 0 0 i 0"
    assert " ".join(project_labels(abnormalities, "M1")) == "1 0 1 0 0 0 1 0 1 0 0 1 0"


def test_task_label_sets():
    assert TASKS["M1"].labels == ("0", "1")
    assert TASKS["M2"].labels == ("0", "d", "i")
    assert TASKS["M3"].labels == ("0", "s", "1", "2", "i")


def test_window_abnormalities(abnormalities):
    inst = window_word(abnormalities, "M1", 3, 3)
    assert len(inst) == 13
    assert [i.features for i in inst] == abnormalities_vectors()
    assert inst[0].features == tuple("---abno") and inst[0].label == "1"
    m3 = window_word(abnormalities, "M3", 3, 3)
    assert m3[11].label == "i"
    assert m3[11].features == ("i", "t", "i", "e", "s", "-", "-")


def test_window_single_letter():
    (w,) = parse_lexicon("a\ta/s")
    (inst,) = window_word(w, "M3", 3, 3)
    assert inst.features == ("-", "-", "-", "a", "-", "-", "-")
    assert inst.label == "s"


def test_window_zero_width(abnormalities):
    inst = window_word(abnormalities, "M1", 0, 0)
    assert [i.features for i in inst] == [(c,) for c in "abnormalities"]


def test_build_base_doubles_distribution(abnormalities):
    one = build_instance_base([abnormalities], "M1")
    two = build_instance_base([abnormalities, abnormalities], "M1")
    assert one.n_unique == two.n_unique == 13
    assert (two.counts == 2 * one.counts).all()


def test_build_base_merges_conflicting_labels():
    # "tie" + inflection vs. "ties" as a bare stem: the vector "t i e s - - -"
    # is shared but its focus 's' (position 3) is labelled i in one word and 0 in the other.
    words = parse_lexicon("ties\ttie/s s/i\nties\tties/s\n")
    base = build_instance_base(words, "M3")
    assert base.n_instances == 8
    assert base.n_unique == 4
    j = base.vectors.index(("t", "i", "e", "s", "-", "-", "-"))
    assert base.distribution(j) == {"0": 1, "i": 1}


def test_build_base_empty():
    with pytest.raises(ValueError):
        build_instance_base([], "M1")


# --- properties -------------------------------------------------------------

segment_text = st.text(alphabet="abcdefghij", min_size=1, max_size=4)
words_strategy = st.lists(
    st.tuples(segment_text, st.sampled_from(["s", "1", "2", "i"])), min_size=1, max_size=5
).map(lambda segs: AnnotatedWord("".join(t for t, _ in segs), tuple(segs)))


@given(words_strategy)
def test_round_trip_through_labels(word):
    labels = project_labels(word, "M3")
    assert tuple(segments_from_labels(word.surface, labels)) == word.segments
    (again,) = parse_lexicon(format_lexicon([word]))
    assert again == word


@given(words_strategy, st.integers(0, 4), st.integers(0, 4))
def test_instance_count_and_padding(word, left, right):
    inst = window_word(word, "M2", left, right)
    assert len(inst) == len(word.surface)
    for i in inst:
        assert len(i.features) == left + 1 + right
        body = "".join("P" if s == PAD else "x" for s in i.features)
        assert "xP" not in body.rstrip("P") and "Px" not in body.lstrip("P")


@given(words_strategy)
def test_projection_monotone(word):
    m1, m2, m3 = (project_labels(word, t) for t in ("M1", "M2", "M3"))
    for a, b, c in zip(m1, m2, m3):
        assert (a == "0") == (b == "0") == (c == "0")
    assert m3[0] != "0"
