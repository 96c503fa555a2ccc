"""Command-line interface: train, analyze, xval, gain, stats.

Machine-readable output is TSV on stdout; human summaries go to stderr.
Exit codes: 0 success, 1 usage, 2 data error, 3 internal invariant violation.
"""
from __future__ import annotations

import argparse
import sys
import time

from . import bundled_corpus_path
from .analyzer import ALGORITHMS, MorphSegmenter, batch_analyze
from .corpus import LexiconError, build_instance_base, get_task, read_lexicon
from .evaluation import InvariantError, compare_reports, format_report, run_xval
from .igtree import IGTreeClassifier, tree_stats
from .info import gain_ratio, information_gain
from .persist import ModelFormatError, load_model, save_model

EXIT_OK, EXIT_USAGE, EXIT_DATA, EXIT_INTERNAL = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _window(text):
    parts = text.split(",")
    try:
        widths = [int(p) for p in parts]
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad window {text!r}; use LEFT,RIGHT") from None
    if len(widths) == 1:
        widths *= 2
    if len(widths) != 2 or min(widths) < 0:
        raise argparse.ArgumentTypeError(f"bad window {text!r}; use non-negative LEFT,RIGHT")
    return tuple(widths)


def _folds(text):
    k = int(text)
    if k < 2:
        raise argparse.ArgumentTypeError("k must be at least 2")
    return k


def _task_list(text):
    tasks = [t.strip().upper() for t in text.split(",") if t.strip()]
    for t in tasks:
        try:
            get_task(t)
        except ValueError as exc:
            raise argparse.ArgumentTypeError(str(exc)) from None
    return tasks


def _algo_list(text):
    algos = [a.strip().lower() for a in text.split(",") if a.strip()]
    if algos == ["all"]:
        return list(ALGORITHMS)
    bad = [a for a in algos if a not in ALGORITHMS]
    if bad or not algos:
        raise argparse.ArgumentTypeError(f"unknown algorithm(s) {bad}; choose from {sorted(ALGORITHMS)}")
    return algos


def _single(values, name):
    if len(values) != 1:
        raise UsageError(f"{name} takes exactly one value here")
    return values[0]


def build_parser():
    p = _Parser(prog="mblmorph", description="Memory-based morphological segmentation.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def corpus_args(sp):
        sp.add_argument("--corpus", help="lexicon file (default: bundled English corpus)")
        sp.add_argument("--lowercase", action="store_true", help="lowercase the corpus on load")
        sp.add_argument("--window", type=_window, default=(3, 3), metavar="LEFT,RIGHT")

    t = sub.add_parser("train", help="train and save a model")
    corpus_args(t)
    t.add_argument("--task", type=_task_list, default=["M3"])
    t.add_argument("--algo", type=_algo_list, default=["ib1ig"])
    t.add_argument("--model", required=True, help="output model path")

    a = sub.add_parser("analyze", help="segment words with a saved model")
    a.add_argument("--model", required=True)
    a.add_argument("--input", default="-", help="words, one per line (default: stdin)")
    a.add_argument("--output", default="-")
    a.add_argument("--lowercase", action="store_true")

    x = sub.add_parser("xval", help="k-fold cross-validation over words")
    corpus_args(x)
    x.add_argument("--task", type=_task_list, default=["M1"])
    x.add_argument("--algo", type=_algo_list, default=["ib1ig"])
    x.add_argument("--k", type=_folds, default=10)
    x.add_argument("--seed", type=int, default=0)
    x.add_argument("--output", default="-")

    g = sub.add_parser("gain", help="per-feature information gain and gain ratio")
    corpus_args(g)
    g.add_argument("--task", type=_task_list, default=["M1"])

    s = sub.add_parser("stats", help="IGTree node/arc counts and compression")
    s.add_argument("--model", required=True)
    return p


def _load_corpus(args):
    path = args.corpus or bundled_corpus_path()
    words = read_lexicon(path, lowercase=args.lowercase)
    if not words:
        raise ValueError(f"corpus {path} contains no words")
    return words


def _open_out(path):
    return sys.stdout if path == "-" else open(path, "w", encoding="utf-8", newline="\n")


def _log(msg):
    print(msg, file=sys.stderr)


def cmd_train(args):
    words = _load_corpus(args)
    task = _single(args.task, "--task")
    algo = _single(args.algo, "--algo")
    left, right = args.window
    base = build_instance_base(words, task, left, right)
    clf = ALGORITHMS[algo]().fit_base(base)
    save_model(clf, args.model)
    out = sys.stdout
    out.write(f"words\t{len(words)}\n")
    out.write(f"instances\t{base.n_instances}\n")
    out.write(f"unique_vectors\t{base.n_unique}\n")
    for f in range(base.n_features):
        out.write(f"gain\t{f}\t{f - left:+d}\t{information_gain(base, f):.6f}\n")
    if isinstance(clf, IGTreeClassifier):
        st = tree_stats(clf.tree_, base)
        out.write(f"nodes\t{st.nodes}\narcs\t{st.arcs}\ncompression\t{st.compression:.6f}\n")
    _log(f"trained {algo} on {task}: {base.n_instances} instances -> {args.model}")
    return EXIT_OK


def cmd_analyze(args):
    try:
        clf = load_model(args.model)
    except FileNotFoundError:
        raise FileNotFoundError(f"model file not found: {args.model}") from None
    seg = MorphSegmenter.from_classifier(clf)
    src = sys.stdin if args.input == "-" else open(args.input, encoding="utf-8")
    with src:
        words = [line.strip() for line in src if line.strip()]
    if args.lowercase:
        words = [w.lower() for w in words]
    t0 = time.perf_counter()
    results = batch_analyze(seg, words)
    elapsed = time.perf_counter() - t0
    failures = coerced = 0
    out = _open_out(args.output)
    try:
        for r in results:
            if hasattr(r, "message"):
                failures += 1
                _log(f"word {r.index + 1} ({r.word!r}): {r.message}")
            else:
                coerced += r.coerced
                out.write(r.to_line() + "\n")
    finally:
        if out is not sys.stdout:
            out.close()
    rate = len(words) / elapsed if elapsed > 0 else float("inf")
    _log(f"analyzed {len(words) - failures} words ({failures} failed, {coerced} coerced at "
         f"position 0) in {elapsed:.3f}s, {rate:.0f} words/s")
    return EXIT_DATA if failures else EXIT_OK


def cmd_xval(args):
    words = _load_corpus(args)
    left, right = args.window
    reports = []
    for task in args.task:
        for algo in args.algo:
            t0 = time.perf_counter()
            r = run_xval(words, task, left, right, algo, args.k, args.seed)
            wm, wsd = r.word_error
            im, isd = r.instance_error
            _log(f"{algo}\t{task}\tword error {100 * wm:.2f}% (sd {100 * wsd:.2f})"
                 f"\tinstance error {100 * im:.2f}% (sd {100 * isd:.2f})"
                 f"\t{time.perf_counter() - t0:.1f}s")
            reports.append(r)
    comparisons = compare_reports(reports)
    out = _open_out(args.output)
    try:
        out.write(format_report(reports, comparisons))
    finally:
        if out is not sys.stdout:
            out.close()
    return EXIT_OK


def cmd_gain(args):
    words = _load_corpus(args)
    left, right = args.window
    out = sys.stdout
    out.write("task\tfeature\tposition\tgain\tgain_ratio\n")
    for task in args.task:
        base = build_instance_base(words, task, left, right)
        for f in range(base.n_features):
            out.write(f"{task}\t{f}\t{f - left:+d}\t{information_gain(base, f):.6f}"
                      f"\t{gain_ratio(base, f):.6f}\n")
    return EXIT_OK


def cmd_stats(args):
    clf = load_model(args.model)
    if not isinstance(clf, IGTreeClassifier):
        raise UsageError("stats needs an igtree model")
    st = tree_stats(clf.tree_)
    sys.stdout.write("nodes\tarcs\tcompression\n")
    sys.stdout.write(f"{st.nodes}\t{st.arcs}\t{st.compression:.6f}\n")
    return EXIT_OK


COMMANDS = {
    "train": cmd_train,
    "analyze": cmd_analyze,
    "xval": cmd_xval,
    "gain": cmd_gain,
    "stats": cmd_stats,
}


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except UsageError as exc:
        _log(f"mblmorph {args.command}: {exc}")
        return EXIT_USAGE
    except InvariantError as exc:
        _log(f"mblmorph {args.command}: internal check failed: {exc}")
        return EXIT_INTERNAL
    except (LexiconError, ModelFormatError, ValueError, OSError) as exc:
        _log(f"mblmorph {args.command}: {exc}")
        return EXIT_DATA


if __name__ == "__main__":
    sys.exit(main())
