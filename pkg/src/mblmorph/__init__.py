"""Memory-based morphological segmentation."""
from .analyzer import MorphSegmenter, analyze_word, batch_analyze
from .corpus import (
    TASKS,
    AnnotatedWord,
    build_instance_base,
    parse_lexicon,
    project_labels,
    read_lexicon,
    window_word,
)
from .igtree import IGTreeClassifier, build_igtree, classify_igtree, tree_stats
from .instancebase import InstanceBase
from .mbl import IB1Classifier, IB1IGClassifier, classify, distance, nearest_set
from .persist import load_model, save_model

__version__ = "0.1.0"


def bundled_corpus_path():
    from importlib.resources import files

    return files(__name__) / "data" / "english.lex"
