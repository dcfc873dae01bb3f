"""Experiment harness: paraphrase detection, alpha sweeps and corpus-size sensitivity.

Default paraphrase protocol: every pair in the dataset is taken to be a
paraphrase, and the reported rate is ``detected / total`` where a pair is
detected when its score reaches the threshold. Passing ``gold_cutoff`` (with
gold scores loaded) switches to accuracy against binarized gold labels.
"""

from __future__ import annotations

import csv
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Sequence

import numpy as np

from .corpus import Corpus, CorpusStats
from .similarity import DEFAULT_ALPHA, TF, WeightingScheme, check_alpha, combine, cosine, term_vector, tss
from .text import DEFAULT_CONFIG, PipelineConfig, ProcessedDocument, RawDocument, preprocess

DEFAULT_THRESHOLD = 0.5
DEFAULT_ALPHAS = tuple(round(0.1 * i, 1) for i in range(11))

SWEEP_HEADER = ("alpha", "detected", "total", "rate")
SENSITIVITY_HEADER = ("corpus_size", "tscs_set1", "tscs_set2", "cosine_set1", "cosine_set2")


class DatasetFormatError(ValueError):
    def __init__(self, path, lineno, message):
        super().__init__(f"{path}:{lineno}: {message}" if lineno else f"{path}: {message}")
        self.path = path
        self.lineno = lineno


class InsufficientFillerError(ValueError):
    pass


@dataclass(frozen=True)
class ParaphrasePair:
    id: str
    text_a: str
    text_b: str
    gold: float | None = None

    def __post_init__(self):
        if not self.text_a.strip() or not self.text_b.strip():
            raise ValueError(f"pair {self.id!r} has an empty side")


@dataclass(frozen=True)
class SweepPoint:
    alpha: float
    detected: int
    total: int

    def __post_init__(self):
        if not 0 <= self.detected <= self.total:
            raise ValueError("detected must lie in [0, total]")

    @property
    def rate(self) -> float:
        return self.detected / self.total if self.total else 0.0


@dataclass(frozen=True)
class SensitivityRow:
    corpus_size: int
    sim_set1: float
    sim_set2: float


# --- dataset loading ---------------------------------------------------------

def _read_lines(path) -> list[str]:
    with open(path, encoding="utf-8") as fh:
        lines = fh.read().splitlines()
    while lines and not lines[-1].strip():
        lines.pop()
    return lines


def load_sts_dataset(input_paths, gold_paths=None) -> list[ParaphrasePair]:
    """Read SemEval STS style input files (``sentence<TAB>sentence`` per line).

    Gold files, when given, must align line-for-line with the input files and
    hold one real number per line. Pair ids are ``<file name>:<line number>``.
    """
    if isinstance(input_paths, (str, Path)):
        input_paths = [input_paths]
    if isinstance(gold_paths, (str, Path)):
        gold_paths = [gold_paths]
    input_paths = list(input_paths)
    if gold_paths is not None and len(gold_paths) != len(input_paths):
        raise ValueError("need exactly one gold file per input file")

    pairs: list[ParaphrasePair] = []
    for n, path in enumerate(input_paths):
        lines = _read_lines(path)
        golds: list[float | None] = [None] * len(lines)
        if gold_paths is not None:
            gpath = gold_paths[n]
            glines = _read_lines(gpath)
            if len(glines) != len(lines):
                raise DatasetFormatError(
                    gpath, 0, f"{len(glines)} gold scores for {len(lines)} input lines in {Path(path).name}"
                )
            golds = []
            for lineno, g in enumerate(glines, 1):
                try:
                    golds.append(float(g))
                except ValueError:
                    raise DatasetFormatError(gpath, lineno, f"not a number: {g!r}") from None
        name = Path(path).name
        for lineno, line in enumerate(lines, 1):
            cols = line.split("\t")
            if len(cols) != 2:
                raise DatasetFormatError(path, lineno, f"expected 2 tab-separated columns, got {len(cols)}")
            a, b = cols[0].strip(), cols[1].strip()
            if not a or not b:
                raise DatasetFormatError(path, lineno, "empty sentence")
            pairs.append(ParaphrasePair(f"{name}:{lineno}", a, b, golds[lineno - 1]))
    return pairs


def dataset_stats(pairs: Iterable[ParaphrasePair], config: PipelineConfig = DEFAULT_CONFIG) -> CorpusStats:
    """Document frequencies over every sentence of a dataset (each side is a document)."""
    stats = CorpusStats()
    for p in pairs:
        stats.add(preprocess(p.text_a, config))
        stats.add(preprocess(p.text_b, config))
    return stats


# --- scoring -----------------------------------------------------------------

@dataclass(frozen=True)
class PairScore:
    id: str
    cosine: float
    tss: float
    gold: float | None = None

    def tscs(self, alpha: float) -> float:
        return combine(alpha, self.cosine, self.tss)


def score_pair(
    pair: ParaphrasePair,
    scheme: WeightingScheme = TF,
    config: PipelineConfig = DEFAULT_CONFIG,
) -> PairScore:
    a = preprocess(pair.text_a, config)
    b = preprocess(pair.text_b, config)
    return PairScore(pair.id, cosine(term_vector(a, scheme), term_vector(b, scheme)), tss(a, b).score, pair.gold)


def score_pairs(pairs, scheme: WeightingScheme = TF, config: PipelineConfig = DEFAULT_CONFIG) -> list[PairScore]:
    return [score_pair(p, scheme, config) for p in pairs]


def detect_paraphrase(
    pair: ParaphrasePair,
    alpha: float = DEFAULT_ALPHA,
    threshold: float = DEFAULT_THRESHOLD,
    scheme: WeightingScheme = TF,
    config: PipelineConfig = DEFAULT_CONFIG,
) -> bool:
    alpha = check_alpha(alpha)
    _check_threshold(threshold)
    return score_pair(pair, scheme, config).tscs(alpha) >= threshold


def _check_threshold(threshold):
    if not 0.0 <= threshold <= 1.0:
        raise ValueError(f"threshold must lie in [0, 1], got {threshold}")


def sweep_scores(
    scores: Sequence[PairScore],
    alphas: Sequence[float] = DEFAULT_ALPHAS,
    threshold: float = DEFAULT_THRESHOLD,
    gold_cutoff: float | None = None,
) -> list[SweepPoint]:
    """Count detections at each alpha from precomputed cosine/TSS scores."""
    if not len(alphas):
        raise ValueError("alphas must be non-empty")
    _check_threshold(threshold)
    if gold_cutoff is not None and any(s.gold is None for s in scores):
        raise ValueError("gold_cutoff needs gold scores for every pair")
    points = []
    for alpha in alphas:
        alpha = check_alpha(alpha)
        predicted = [s.tscs(alpha) >= threshold for s in scores]
        if gold_cutoff is None:
            detected = sum(predicted)
        else:
            detected = sum(p == (s.gold >= gold_cutoff) for p, s in zip(predicted, scores))
        points.append(SweepPoint(alpha, detected, len(scores)))
    return points


def alpha_sweep(
    pairs: Sequence[ParaphrasePair],
    alphas: Sequence[float] = DEFAULT_ALPHAS,
    threshold: float = DEFAULT_THRESHOLD,
    scheme: WeightingScheme = TF,
    config: PipelineConfig = DEFAULT_CONFIG,
    gold_cutoff: float | None = None,
) -> list[SweepPoint]:
    """One :class:`SweepPoint` per alpha; each pair is scored once and reused."""
    return sweep_scores(score_pairs(pairs, scheme, config), alphas, threshold, gold_cutoff)


# --- corpus-size sensitivity ---------------------------------------------------

def _as_raw(doc, fallback_id) -> RawDocument:
    if isinstance(doc, RawDocument):
        return doc
    return RawDocument(fallback_id, doc)


def corpus_sensitivity(
    seed_pair1,
    seed_pair2,
    fillers,
    sizes: Sequence[int],
    alpha: float = DEFAULT_ALPHA,
    weighting: str = "tfidf",
    config: PipelineConfig = DEFAULT_CONFIG,
) -> tuple[list[SensitivityRow], list[SensitivityRow]]:
    """Score two seed pairs inside corpora of growing size.

    The corpus of size ``s`` holds the four seed documents plus the first
    ``s - 4`` fillers, in the order given. Returns ``(tscs_rows, cosine_rows)``.
    Seeds and fillers may be :class:`RawDocument` or plain strings.
    """
    alpha = check_alpha(alpha)
    sizes = list(sizes)
    if not sizes:
        raise ValueError("sizes must be non-empty")
    if any(b <= a for a, b in zip(sizes, sizes[1:])):
        raise ValueError("sizes must be strictly increasing")
    if sizes[0] < 4:
        raise ValueError("smallest corpus size is 4 (the two seed pairs)")
    fillers = [_as_raw(f, f"filler{i}") for i, f in enumerate(fillers)]
    if sizes[-1] - 4 > len(fillers):
        raise InsufficientFillerError(f"corpus size {sizes[-1]} needs {sizes[-1] - 4} fillers, have {len(fillers)}")

    seeds = [
        _as_raw(seed_pair1[0], "set1_a"),
        _as_raw(seed_pair1[1], "set1_b"),
        _as_raw(seed_pair2[0], "set2_a"),
        _as_raw(seed_pair2[1], "set2_b"),
    ]
    corpus = Corpus(config)
    for raw in seeds:
        corpus.add_document(raw)
    s1a, s1b, s2a, s2b = (corpus[r.id] for r in seeds)
    tss1, tss2 = tss(s1a, s1b).score, tss(s2a, s2b).score

    rows_tscs, rows_cos = [], []
    added = 0
    for size in sizes:
        while len(corpus) < size:
            corpus.add_document(fillers[added])
            added += 1
        scheme = corpus.scheme(weighting)
        cos1 = cosine(term_vector(s1a, scheme), term_vector(s1b, scheme))
        cos2 = cosine(term_vector(s2a, scheme), term_vector(s2b, scheme))
        rows_cos.append(SensitivityRow(size, cos1, cos2))
        rows_tscs.append(SensitivityRow(size, combine(alpha, cos1, tss1), combine(alpha, cos2, tss2)))
    return rows_tscs, rows_cos


def variation_range(rows: Sequence[SensitivityRow]) -> tuple[float, float]:
    """``max - min`` of each seed-set column."""
    if not rows:
        raise ValueError("rows must be non-empty")
    set1 = np.array([r.sim_set1 for r in rows])
    set2 = np.array([r.sim_set2 for r in rows])
    return float(np.ptp(set1)), float(np.ptp(set2))


# --- CSV output ----------------------------------------------------------------

def write_sweep_csv(points: Iterable[SweepPoint], fh) -> None:
    w = csv.writer(fh, lineterminator="\n")
    w.writerow(SWEEP_HEADER)
    for p in points:
        w.writerow([repr(p.alpha), p.detected, p.total, repr(p.rate)])


def write_sensitivity_csv(rows_tscs: Sequence[SensitivityRow], rows_cos: Sequence[SensitivityRow], fh) -> None:
    w = csv.writer(fh, lineterminator="\n")
    w.writerow(SENSITIVITY_HEADER)
    for t, c in zip(rows_tscs, rows_cos):
        w.writerow([t.corpus_size, repr(t.sim_set1), repr(t.sim_set2), repr(c.sim_set1), repr(c.sim_set2)])


def write_pair_csv(scores: Iterable[PairScore], alpha: float, threshold: float, fh) -> None:
    w = csv.writer(fh, lineterminator="\n")
    w.writerow(("id", "cosine", "tss", "tscs", "paraphrase"))
    for s in scores:
        v = s.tscs(alpha)
        w.writerow([s.id, repr(s.cosine), repr(s.tss), repr(v), int(v >= threshold)])
