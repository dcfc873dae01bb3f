"""Document collections, document-frequency statistics and persistence.

Corpus file format (UTF-8, one JSON object per line)::

    {"format": "tscs-corpus", "version": 1, "n_docs": 2, "df": {"love": 2, ...}}
    {"id": "a.txt", "text": "John loves Mary", "terms": ["john", "love", "mari"]}
    {"id": "b.txt", "text": "Mary loves John", "terms": ["mari", "love", "john"]}

The first line is a header carrying the statistics as written; on load they
are recomputed from the document records and must agree. Positions are not
stored: they are the indices of ``terms``.
"""

from __future__ import annotations

import json
import logging
from collections import Counter
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable

import numpy as np

from .similarity import DEFAULT_ALPHA, TF, SimilarityResult, WeightingScheme, check_alpha, tscs
from .text import DEFAULT_CONFIG, PipelineConfig, ProcessedDocument, RawDocument, preprocess

log = logging.getLogger(__name__)

FORMAT_NAME = "tscs-corpus"
FORMAT_VERSION = 1


class DuplicateDocumentError(ValueError):
    pass


class CorpusFormatError(ValueError):
    def __init__(self, path, lineno, message):
        super().__init__(f"{path}:{lineno}: {message}")
        self.path = path
        self.lineno = lineno


@dataclass
class CorpusStats:
    n_docs: int = 0
    df: Counter = field(default_factory=Counter)

    @classmethod
    def from_documents(cls, docs: Iterable[ProcessedDocument]) -> "CorpusStats":
        stats = cls()
        for doc in docs:
            stats.add(doc)
        return stats

    def add(self, doc: ProcessedDocument) -> None:
        self.n_docs += 1
        self.df.update(set(doc.terms))

    def __eq__(self, other):
        if not isinstance(other, CorpusStats):
            return NotImplemented
        return self.n_docs == other.n_docs and +self.df == +other.df


class Corpus:
    """Processed documents keyed by id, plus the matching :class:`CorpusStats`.

    Mutation (``add_document``) must be serialized by the caller; read-only
    scoring over an unchanging corpus is safe to share.
    """

    def __init__(self, config: PipelineConfig = DEFAULT_CONFIG):
        self.config = config
        self.docs: dict[str, ProcessedDocument] = {}
        self.texts: dict[str, str] = {}
        self.stats = CorpusStats()
        self.skipped: list[tuple[str, str]] = []

    def __len__(self):
        return len(self.docs)

    def __iter__(self):
        return iter(self.docs.values())

    def __contains__(self, doc_id):
        return doc_id in self.docs

    def __getitem__(self, doc_id) -> ProcessedDocument:
        return self.docs[doc_id]

    @property
    def ids(self) -> list[str]:
        return list(self.docs)

    def add_document(self, raw: RawDocument, config: PipelineConfig | None = None) -> "Corpus":
        if raw.id in self.docs:
            raise DuplicateDocumentError(f"document id {raw.id!r} already in corpus")
        doc = preprocess(raw, config or self.config)
        self._insert(doc, raw.text)
        return self

    def _insert(self, doc: ProcessedDocument, text: str) -> None:
        self.docs[doc.id] = doc
        self.texts[doc.id] = text
        self.stats.add(doc)

    def scheme(self, kind: str = "tfidf") -> WeightingScheme:
        """A weighting scheme bound to this corpus' statistics."""
        if kind == "tf":
            return TF
        return WeightingScheme(kind, self.stats)

    def __eq__(self, other):
        if not isinstance(other, Corpus):
            return NotImplemented
        return (
            list(self.docs.items()) == list(other.docs.items())
            and self.texts == other.texts
            and self.stats == other.stats
        )


def add_document(corpus: Corpus, raw: RawDocument, config: PipelineConfig | None = None) -> Corpus:
    return corpus.add_document(raw, config)


def corpus_from_texts(texts, config: PipelineConfig = DEFAULT_CONFIG) -> Corpus:
    """Build a corpus from ``{id: text}`` or an iterable of :class:`RawDocument`."""
    corpus = Corpus(config)
    items = texts.items() if isinstance(texts, dict) else ((r.id, r.text) for r in texts)
    for doc_id, text in items:
        corpus.add_document(RawDocument(doc_id, text))
    return corpus


def load_directory(path, config: PipelineConfig = DEFAULT_CONFIG) -> Corpus:
    """Load every ``*.txt`` file in ``path`` (sorted by name), id = file name.

    Unreadable files are logged, skipped and listed in ``corpus.skipped``.
    """
    path = Path(path)
    if not path.is_dir():
        raise NotADirectoryError(str(path))
    corpus = Corpus(config)
    for f in sorted(path.glob("*.txt")):
        try:
            text = f.read_text(encoding="utf-8")
        except (OSError, UnicodeDecodeError) as exc:
            log.warning("skipping %s: %s", f, exc)
            corpus.skipped.append((f.name, str(exc)))
            continue
        corpus.add_document(RawDocument(f.name, text))
    return corpus


def save_corpus(corpus: Corpus, path) -> None:
    header = {
        "format": FORMAT_NAME,
        "version": FORMAT_VERSION,
        "n_docs": corpus.stats.n_docs,
        "df": dict(sorted(corpus.stats.df.items())),
    }
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(json.dumps(header, ensure_ascii=False) + "\n")
        for doc_id, doc in corpus.docs.items():
            rec = {"id": doc_id, "text": corpus.texts[doc_id], "terms": list(doc.terms)}
            fh.write(json.dumps(rec, ensure_ascii=False) + "\n")


def load_corpus(path, config: PipelineConfig = DEFAULT_CONFIG) -> Corpus:
    """Read a corpus file written by :func:`save_corpus`.

    Stored terms are kept as-is (the text is not re-processed), so a corpus
    round-trips even if it was built with a different pipeline.
    """
    corpus = Corpus(config)
    header = None
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, 1):
            if not line.strip():
                continue
            try:
                rec = json.loads(line)
            except json.JSONDecodeError as exc:
                raise CorpusFormatError(path, lineno, f"invalid JSON ({exc.msg})") from None
            if not isinstance(rec, dict):
                raise CorpusFormatError(path, lineno, "record is not an object")
            if header is None:
                if rec.get("format") != FORMAT_NAME:
                    raise CorpusFormatError(path, lineno, "missing corpus header")
                if rec.get("version") != FORMAT_VERSION:
                    raise CorpusFormatError(path, lineno, f"unsupported version {rec.get('version')!r}")
                header = rec
                continue
            doc_id, text, terms = rec.get("id"), rec.get("text"), rec.get("terms")
            if not isinstance(doc_id, str) or not doc_id:
                raise CorpusFormatError(path, lineno, "record needs a non-empty string 'id'")
            if not isinstance(text, str):
                raise CorpusFormatError(path, lineno, "record needs a string 'text'")
            if not isinstance(terms, list) or not all(isinstance(t, str) for t in terms):
                raise CorpusFormatError(path, lineno, "record needs 'terms' as a list of strings")
            if doc_id in corpus.docs:
                raise CorpusFormatError(path, lineno, f"duplicate id {doc_id!r}")
            corpus._insert(ProcessedDocument(doc_id, tuple(terms)), text)
    if header is None:
        raise CorpusFormatError(path, 1, "empty corpus file")
    stored = CorpusStats(header.get("n_docs"), Counter(header.get("df") or {}))
    if stored != corpus.stats:
        raise CorpusFormatError(path, 1, "stored statistics disagree with document records")
    return corpus


def pairwise_matrix(
    corpus: Corpus,
    alpha: float = DEFAULT_ALPHA,
    scheme: WeightingScheme | str = TF,
) -> list[list[SimilarityResult]]:
    """All-pairs :class:`SimilarityResult` in corpus order.

    ``scheme`` may be the string ``"tfidf"``, in which case it is bound to the
    corpus' own statistics.
    """
    if not len(corpus):
        raise ValueError("pairwise_matrix needs a non-empty corpus")
    alpha = check_alpha(alpha)
    if isinstance(scheme, str):
        scheme = corpus.scheme(scheme)
    docs = list(corpus)
    n = len(docs)
    out: list[list[SimilarityResult | None]] = [[None] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            r = tscs(docs[i], docs[j], alpha, scheme)
            out[i][j] = out[j][i] = r
    return out


def score_matrix(results: list[list[SimilarityResult]], measure: str = "tscs") -> np.ndarray:
    """Pull one measure (``cosine``, ``tss`` or ``tscs``) out as a float array."""
    return np.array([[getattr(r, measure) for r in row] for row in results], dtype=float)
