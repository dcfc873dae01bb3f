"""Text preprocessing: tokenization, stop-word removal and stemming.

A :class:`ProcessedDocument` is the sequence of terms that survive the
pipeline. The index of a term in that sequence is its ordinal position, so
positions are always dense ``0..n-1`` and are assigned after stop-words are
dropped.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path
from typing import Iterable, Sequence

from .porter import porter_stem

STEMMERS = ("porter", "none")

# maximal runs of Unicode letters/digits; underscore is a word char but not alphanumeric
_TOKEN_RE = re.compile(r"[^\W_]+")


def read_stopword_file(path) -> frozenset[str]:
    """Read a stop-word list: UTF-8, one token per line, ``#`` starts a comment."""
    words = set()
    with open(path, encoding="utf-8") as fh:
        for line in fh:
            line = line.split("#", 1)[0].strip()
            if line:
                words.add(line)
    return frozenset(words)


def _builtin_stopwords() -> frozenset[str]:
    with resources.as_file(resources.files("tscs") / "data" / "stopwords_en.txt") as p:
        return read_stopword_file(p)


DEFAULT_STOPWORDS = _builtin_stopwords()


@dataclass(frozen=True)
class PipelineConfig:
    lowercase: bool = True
    stopwords: frozenset[str] = DEFAULT_STOPWORDS
    stemming: str = "porter"

    def __post_init__(self):
        if self.stemming not in STEMMERS:
            raise ValueError(f"stemming must be one of {STEMMERS}, got {self.stemming!r}")
        words = frozenset(self.stopwords)
        if self.lowercase:
            words = frozenset(w.lower() for w in words)
        object.__setattr__(self, "stopwords", words)

    @classmethod
    def from_stopword_file(cls, path, **kwargs) -> "PipelineConfig":
        return cls(stopwords=read_stopword_file(path), **kwargs)


DEFAULT_CONFIG = PipelineConfig()


@dataclass(frozen=True)
class RawDocument:
    id: str
    text: str

    def __post_init__(self):
        if not self.id:
            raise ValueError("document id must be non-empty")


@dataclass(frozen=True)
class ProcessedDocument:
    id: str
    terms: tuple[str, ...] = field(default=())

    def __post_init__(self):
        object.__setattr__(self, "terms", tuple(self.terms))

    def __len__(self):
        return len(self.terms)


def tokenize(text: str, config: PipelineConfig = DEFAULT_CONFIG) -> list[str]:
    """Split text into maximal alphanumeric runs.

    >>> tokenize("e-mail, 2nd!")
    ['e', 'mail', '2nd']
    """
    tokens = _TOKEN_RE.findall(text)
    if config.lowercase:
        tokens = [t.lower() for t in tokens]
    return tokens


def remove_stopwords(tokens: Iterable[str], config: PipelineConfig = DEFAULT_CONFIG) -> list[str]:
    stop = config.stopwords
    return [t for t in tokens if t not in stop]


def stem(token: str) -> str:
    return porter_stem(token)


def preprocess(raw: RawDocument | str, config: PipelineConfig = DEFAULT_CONFIG) -> ProcessedDocument:
    """Run tokenize -> remove_stopwords -> stem.

    A bare string is accepted and given an empty-string id.
    """
    if isinstance(raw, str):
        doc_id, text = "", raw
    else:
        doc_id, text = raw.id, raw.text
    terms = remove_stopwords(tokenize(text, config), config)
    if config.stemming == "porter":
        terms = [stem(t) for t in terms]
    return ProcessedDocument(doc_id, tuple(terms))


def preprocess_many(raws: Sequence[RawDocument], config: PipelineConfig = DEFAULT_CONFIG) -> list[ProcessedDocument]:
    return [preprocess(r, config) for r in raws]


def load_text(path, config: PipelineConfig = DEFAULT_CONFIG, doc_id: str | None = None) -> ProcessedDocument:
    """Read a UTF-8 text file and preprocess it; the id defaults to the file name."""
    path = Path(path)
    text = path.read_text(encoding="utf-8")
    return preprocess(RawDocument(doc_id or path.name, text), config)
