"""Positional similarity measures.

* :func:`spatial_difference` -- per-term sum of normalized position gaps
  ``|p_i - p_j| / (p_i + p_j)`` over the k-th/k-th instance pairs.
* :func:`tss` -- textual space similarity, ``1 - sum(sd) / lambda`` where
  ``lambda`` counts the matched instance pairs.
* :func:`cosine` over :func:`term_vector` weights (raw tf or smoothed tf-idf).
* :func:`tscs` -- ``alpha * cosine + (1 - alpha) * tss``.

Conventions for cases the formulas leave open:

- an instance at position 0 in both documents contributes 0 (not 0/0);
- surplus instances of a term in the longer document are ignored and do not
  count towards ``lambda``;
- ``lambda == 0`` (no shared term) gives ``tss == 0``.

Spatial sums are kept as exact rationals and rounded to float once, so TSS
values do not depend on summation order.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import TYPE_CHECKING, Mapping, NamedTuple, Sequence

from .text import ProcessedDocument

if TYPE_CHECKING:
    from .corpus import CorpusStats

DEFAULT_ALPHA = 0.5

PositionalTermMap = Mapping[str, tuple[int, ...]]
TermVector = Mapping[str, float]


def positional_map(doc: ProcessedDocument | Sequence[str]) -> dict[str, tuple[int, ...]]:
    """Map each term to the increasing tuple of positions it occupies.

    >>> positional_map(["a", "b", "a"])
    {'a': (0, 2), 'b': (1,)}
    """
    terms = doc.terms if isinstance(doc, ProcessedDocument) else doc
    out: dict[str, list[int]] = {}
    for pos, term in enumerate(terms):
        out.setdefault(term, []).append(pos)
    return {t: tuple(p) for t, p in out.items()}


def _gap_numerators(positions_i, positions_j, acc: Counter) -> int:
    """Add ``|a - b|`` into ``acc[a + b]`` for each k-th/k-th pair; return the pair count."""
    matched = 0
    for a, b in zip(positions_i, positions_j):
        matched += 1
        if a != b:
            acc[a + b] += abs(a - b)
    return matched


def _exact_sum(acc: Counter) -> Fraction:
    if not acc:
        return Fraction(0)
    denom = math.lcm(*acc)
    return Fraction(sum(num * (denom // d) for d, num in acc.items()), denom)


def spatial_difference(positions_i: Sequence[int], positions_j: Sequence[int]) -> tuple[float, int]:
    """Return ``(sum, matched)`` for one term's position lists.

    The sum is accumulated exactly and rounded once.
    """
    acc: Counter = Counter()
    matched = _gap_numerators(positions_i, positions_j, acc)
    return float(_exact_sum(acc)), matched


class TSS(NamedTuple):
    score: float
    matches: int
    spatial_sum: float


def _as_map(doc) -> PositionalTermMap:
    if isinstance(doc, Mapping):
        return doc
    return positional_map(doc)


def tss(doc_i, doc_j) -> TSS:
    """Textual space similarity between two documents.

    Either argument may be a :class:`ProcessedDocument`, a term sequence, or
    a precomputed positional map.
    """
    map_i, map_j = _as_map(doc_i), _as_map(doc_j)
    if len(map_j) < len(map_i):
        map_i, map_j = map_j, map_i
    acc: Counter = Counter()
    matches = 0
    for term in map_i.keys() & map_j.keys():
        matches += _gap_numerators(map_i[term], map_j[term], acc)
    if matches == 0:
        return TSS(0.0, 0, 0.0)
    total = _exact_sum(acc)
    return TSS(float(1 - total / matches), matches, float(total))


@dataclass(frozen=True)
class WeightingScheme:
    """How term vectors are weighted: ``"tf"`` or ``"tfidf"`` with corpus stats."""

    kind: str = "tf"
    stats: "CorpusStats | None" = None

    def __post_init__(self):
        if self.kind not in ("tf", "tfidf"):
            raise ValueError(f"unknown weighting {self.kind!r}")
        if self.kind == "tfidf" and (self.stats is None or self.stats.n_docs < 1):
            raise ValueError("tfidf weighting needs corpus stats with at least one document")

    def idf(self, term: str) -> float:
        if self.kind == "tf":
            return 1.0
        df = max(self.stats.df.get(term, 0), 1)
        return 1.0 + math.log(self.stats.n_docs / df)


TF = WeightingScheme("tf")


def term_vector(doc: ProcessedDocument | Sequence[str], scheme: WeightingScheme = TF) -> dict[str, float]:
    terms = doc.terms if isinstance(doc, ProcessedDocument) else doc
    counts = Counter(terms)
    if scheme.kind == "tf":
        return {t: float(c) for t, c in counts.items()}
    vec = {t: c * scheme.idf(t) for t, c in counts.items()}
    # idf can reach 0 only when df > N, i.e. stats that do not cover this document
    return {t: w for t, w in vec.items() if w > 0.0}


def cosine(v_i: TermVector, v_j: TermVector) -> float:
    if not v_i or not v_j:
        return 0.0
    if len(v_j) < len(v_i):
        v_i, v_j = v_j, v_i
    dot = math.fsum(w * v_j[t] for t, w in v_i.items() if t in v_j)
    if dot == 0.0:
        return 0.0
    sq_i = math.fsum(w * w for w in v_i.values())
    sq_j = math.fsum(w * w for w in v_j.values())
    # one sqrt of the product: identical vectors give exactly 1.0, and the
    # product is commutative so cosine(a, b) == cosine(b, a) bit-for-bit
    return min(1.0, dot / math.sqrt(sq_i * sq_j))


def combine(alpha: float, cos: float, tss_score: float) -> float:
    """Weighted blend; ``alpha=1`` returns ``cos`` and ``alpha=0`` returns ``tss_score`` exactly."""
    if alpha == 1.0:
        return cos
    if alpha == 0.0:
        return tss_score
    return alpha * cos + (1.0 - alpha) * tss_score


def check_alpha(alpha: float) -> float:
    alpha = float(alpha)
    if not 0.0 <= alpha <= 1.0:
        raise ValueError(f"alpha must lie in [0, 1], got {alpha}")
    return alpha


@dataclass(frozen=True)
class SimilarityResult:
    cosine: float
    tss: float
    tscs: float
    matches: int
    spatial_sum: float
    alpha: float = DEFAULT_ALPHA
    degenerate: bool = False

    def as_dict(self) -> dict:
        return {
            "cosine": self.cosine,
            "tss": self.tss,
            "tscs": self.tscs,
            "lambda": self.matches,
            "spatial_sum": self.spatial_sum,
            "alpha": self.alpha,
        }


def tscs(
    doc_i: ProcessedDocument | Sequence[str],
    doc_j: ProcessedDocument | Sequence[str],
    alpha: float = DEFAULT_ALPHA,
    scheme: WeightingScheme = TF,
) -> SimilarityResult:
    """Textual spatial cosine similarity with the cosine and TSS parts it blends."""
    alpha = check_alpha(alpha)
    terms_i = doc_i.terms if isinstance(doc_i, ProcessedDocument) else tuple(doc_i)
    terms_j = doc_j.terms if isinstance(doc_j, ProcessedDocument) else tuple(doc_j)
    if not terms_i and not terms_j:
        return SimilarityResult(0.0, 0.0, 0.0, 0, 0.0, alpha, degenerate=True)
    cos = cosine(term_vector(terms_i, scheme), term_vector(terms_j, scheme))
    t = tss(terms_i, terms_j)
    return SimilarityResult(cos, t.score, combine(alpha, cos, t.score), t.matches, t.spatial_sum, alpha)
