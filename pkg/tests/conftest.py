import pytest

from mblmorph import bundled_corpus_path, parse_lexicon, read_lexicon

ABNORMALITIES = "abnormalities\tab/1 norm/s al/1 iti/2 es/i"

# The 13 windows of "abnormalities" at width 3,3: (left context, focus, right context, M1, M2, M3)
ABNORMALITIES_WINDOWS = [
    ("- - -", "a", "b n o", "1", "d", "1"),
    ("- - a", "b", "n o r", "0", "0", "0"),
    ("- a b", "n", "o r m", "1", "d", "s"),
    ("a b n", "o", "r m a", "0", "0", "0"),
    ("b n o", "r", "m a l", "0", "0", "0"),
    ("n o r", "m", "a l i", "0", "0", "0"),
    ("o r m", "a", "l i t", "1", "d", "1"),
    ("r m a", "l", "i t i", "0", "0", "0"),
    ("m a l", "i", "t i e", "1", "d", "2"),
    ("a l i", "t", "i e s", "0", "0", "0"),
    ("l i t", "i", "e s -", "0", "0", "0"),
    ("i t i", "e", "s - -", "1", "i", "i"),
    ("t i e", "s", "- - -", "0", "0", "0"),
]


def abnormalities_vectors():
    return [tuple(left.split()) + (focus,) + tuple(right.split())
            for left, focus, right, *_ in ABNORMALITIES_WINDOWS]


@pytest.fixture
def abnormalities():
    return parse_lexicon(ABNORMALITIES)[0]


@pytest.fixture(scope="session")
def corpus():
    return read_lexicon(bundled_corpus_path())
