"""Command-line front end: ``tscs sim|matrix|eval-paraphrase|sweep-alpha|corpus-sensitivity``.

Exit status is 0 on success and 2 on usage, I/O or parse errors.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from pathlib import Path

from . import evaluation as ev
from .corpus import Corpus, load_directory, pairwise_matrix
from .similarity import TF, WeightingScheme, tscs
from .text import DEFAULT_STOPWORDS, PipelineConfig, RawDocument, read_stopword_file

EXIT_OK = 0
EXIT_ERROR = 2

SEED_NAMES = ("set1_a.txt", "set1_b.txt", "set2_a.txt", "set2_b.txt")


class CliError(Exception):
    pass


def _unit_interval(s):
    try:
        v = float(s)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number: {s!r}") from None
    if not 0.0 <= v <= 1.0:
        raise argparse.ArgumentTypeError(f"{v} is outside [0, 1]")
    return v


def _float_list(s):
    return [_unit_interval(x) for x in s.split(",") if x.strip()]


def _int_list(s):
    try:
        return [int(x) for x in s.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad size list: {s!r}") from None


def _common(p: argparse.ArgumentParser):
    p.add_argument("--alpha", type=_unit_interval, default=0.5, help="cosine weight in TSCS (default 0.5)")
    p.add_argument("--threshold", type=_unit_interval, default=0.5, help="paraphrase cutoff (default 0.5)")
    p.add_argument("--weighting", choices=("tf", "tfidf"), default="tf")
    p.add_argument("--stopwords", metavar="PATH", help="stop-word file replacing the built-in list")
    p.add_argument("--no-stem", action="store_true", help="disable Porter stemming")
    p.add_argument("--format", choices=("table", "csv", "json"), default="table", dest="fmt")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="tscs", description="Textual spatial cosine similarity tools.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("sim", help="score two text files")
    p.add_argument("file_a")
    p.add_argument("file_b")
    _common(p)

    p = sub.add_parser("matrix", help="pairwise TSCS matrix over a directory of *.txt files")
    p.add_argument("directory")
    p.add_argument("--measure", choices=("tscs", "cosine", "tss"), default="tscs")
    _common(p)

    p = sub.add_parser("eval-paraphrase", help="count detected paraphrases in STS files")
    p.add_argument("datasets", nargs="+")
    p.add_argument("--gold", action="append", metavar="PATH", help="gold file, one per dataset, in order")
    p.add_argument("--gold-cutoff", type=float, help="score accuracy against gold >= cutoff labels")
    p.add_argument("--pairs-csv", metavar="PATH", help="also write per-pair scores here")
    _common(p)

    p = sub.add_parser("sweep-alpha", help="detections for a grid of alpha values (CSV)")
    p.add_argument("datasets", nargs="+")
    p.add_argument("--alphas", type=_float_list, default=list(ev.DEFAULT_ALPHAS), help="comma-separated grid")
    p.add_argument("--gold", action="append", metavar="PATH")
    p.add_argument("--gold-cutoff", type=float)
    _common(p)

    p = sub.add_parser("corpus-sensitivity", help="seed-pair similarity as filler documents are added (CSV)")
    p.add_argument("seed_dir")
    p.add_argument("filler_dir")
    p.add_argument("--sizes", type=_int_list, default=[4, 5, 10, 15, 20, 30, 40])
    _common(p)
    return parser


def _config(args) -> PipelineConfig:
    stop = DEFAULT_STOPWORDS
    if args.stopwords:
        try:
            stop = read_stopword_file(args.stopwords)
        except OSError as exc:
            raise CliError(f"cannot read stop-word file: {exc}") from None
    return PipelineConfig(stopwords=stop, stemming="none" if args.no_stem else "porter")


def _read(path) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except (OSError, UnicodeDecodeError) as exc:
        raise CliError(f"cannot read {path}: {exc}") from None


def _fmt(x: float) -> str:
    return f"{x:.4f}"


def cmd_sim(args, out) -> int:
    config = _config(args)
    corpus = Corpus(config)
    corpus.add_document(RawDocument("a", _read(args.file_a)))
    corpus.add_document(RawDocument("b", _read(args.file_b)))
    r = tscs(corpus["a"], corpus["b"], args.alpha, corpus.scheme(args.weighting))
    rec = r.as_dict()
    if args.fmt == "json":
        out.write(json.dumps(rec) + "\n")
    elif args.fmt == "csv":
        w = csv.writer(out, lineterminator="\n")
        w.writerow(rec.keys())
        w.writerow(repr(v) if isinstance(v, float) else v for v in rec.values())
    else:
        out.write(f"cosine  {_fmt(r.cosine)}\n")
        out.write(f"tss     {_fmt(r.tss)}\n")
        out.write(f"tscs    {_fmt(r.tscs)}   (alpha={args.alpha:g})\n")
        out.write(f"lambda  {r.matches}\n")
    return EXIT_OK


def cmd_matrix(args, out) -> int:
    try:
        corpus = load_directory(args.directory, _config(args))
    except OSError as exc:
        raise CliError(f"cannot read directory: {exc}") from None
    for name, msg in corpus.skipped:
        print(f"warning: skipped {name}: {msg}", file=sys.stderr)
    if not len(corpus):
        raise CliError(f"no readable *.txt files in {args.directory}")
    results = pairwise_matrix(corpus, args.alpha, args.weighting)
    ids = corpus.ids
    values = [[getattr(r, args.measure) for r in row] for row in results]
    if args.fmt == "json":
        out.write(json.dumps({"ids": ids, "measure": args.measure, "matrix": values}) + "\n")
        return EXIT_OK
    w = csv.writer(out, lineterminator="\n")
    w.writerow(["", *ids])
    cell = _fmt if args.fmt == "table" else repr
    for doc_id, row in zip(ids, values):
        w.writerow([doc_id, *(cell(v) for v in row)])
    return EXIT_OK


def _load_pairs(args):
    try:
        pairs = ev.load_sts_dataset(args.datasets, args.gold)
    except ev.DatasetFormatError as exc:
        raise CliError(f"parse error: {exc}") from None
    except (OSError, ValueError) as exc:
        raise CliError(str(exc)) from None
    config = _config(args)
    scheme = TF
    if args.weighting == "tfidf" and pairs:
        scheme = WeightingScheme("tfidf", ev.dataset_stats(pairs, config))
    return pairs, scheme, config


def cmd_eval_paraphrase(args, out) -> int:
    pairs, scheme, config = _load_pairs(args)
    scores = ev.score_pairs(pairs, scheme, config)
    try:
        [point] = ev.sweep_scores(scores, [args.alpha], args.threshold, args.gold_cutoff)
    except ValueError as exc:
        raise CliError(str(exc)) from None
    if args.pairs_csv:
        with open(args.pairs_csv, "w", encoding="utf-8", newline="") as fh:
            ev.write_pair_csv(scores, args.alpha, args.threshold, fh)
    if args.fmt == "json":
        rec = {"alpha": point.alpha, "detected": point.detected, "total": point.total, "rate": point.rate}
        out.write(json.dumps(rec) + "\n")
    elif args.fmt == "csv":
        ev.write_sweep_csv([point], out)
    else:
        out.write(f"detected={point.detected} total={point.total} rate={_fmt(point.rate)}\n")
    return EXIT_OK


def cmd_sweep_alpha(args, out) -> int:
    pairs, scheme, config = _load_pairs(args)
    if not args.alphas:
        raise CliError("empty alpha grid")
    try:
        points = ev.sweep_scores(ev.score_pairs(pairs, scheme, config), args.alphas, args.threshold, args.gold_cutoff)
    except ValueError as exc:
        raise CliError(str(exc)) from None
    ev.write_sweep_csv(points, out)
    return EXIT_OK


def cmd_corpus_sensitivity(args, out) -> int:
    seed_dir = Path(args.seed_dir)
    present = sorted(p.name for p in seed_dir.glob("*.txt")) if seed_dir.is_dir() else []
    if present != sorted(SEED_NAMES):
        raise CliError(f"{seed_dir} must contain exactly {', '.join(SEED_NAMES)}; found {present or 'nothing'}")
    seeds = [RawDocument(name, _read(seed_dir / name)) for name in SEED_NAMES]
    filler_dir = Path(args.filler_dir)
    if not filler_dir.is_dir():
        raise CliError(f"not a directory: {filler_dir}")
    fillers = [RawDocument(f"filler/{p.name}", _read(p)) for p in sorted(filler_dir.glob("*.txt"))]
    try:
        rows_tscs, rows_cos = ev.corpus_sensitivity(
            seeds[:2], seeds[2:], fillers, args.sizes, args.alpha, args.weighting, _config(args)
        )
    except ValueError as exc:
        raise CliError(str(exc)) from None
    ev.write_sensitivity_csv(rows_tscs, rows_cos, out)
    return EXIT_OK


COMMANDS = {
    "sim": cmd_sim,
    "matrix": cmd_matrix,
    "eval-paraphrase": cmd_eval_paraphrase,
    "sweep-alpha": cmd_sweep_alpha,
    "corpus-sensitivity": cmd_corpus_sensitivity,
}


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    try:
        return COMMANDS[args.command](args, out)
    except CliError as exc:
        print(f"tscs: error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
