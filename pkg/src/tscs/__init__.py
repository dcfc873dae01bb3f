"""Textual spatial cosine similarity: cosine similarity augmented with word positions."""

from .corpus import (
    Corpus,
    CorpusFormatError,
    CorpusStats,
    DuplicateDocumentError,
    add_document,
    corpus_from_texts,
    load_corpus,
    load_directory,
    pairwise_matrix,
    save_corpus,
    score_matrix,
)
from .evaluation import (
    DatasetFormatError,
    InsufficientFillerError,
    ParaphrasePair,
    SensitivityRow,
    SweepPoint,
    alpha_sweep,
    corpus_sensitivity,
    detect_paraphrase,
    load_sts_dataset,
    variation_range,
)
from .similarity import (
    DEFAULT_ALPHA,
    TF,
    TSS,
    SimilarityResult,
    WeightingScheme,
    cosine,
    positional_map,
    spatial_difference,
    term_vector,
    tscs,
    tss,
)
from .text import (
    DEFAULT_CONFIG,
    DEFAULT_STOPWORDS,
    PipelineConfig,
    ProcessedDocument,
    RawDocument,
    preprocess,
    remove_stopwords,
    stem,
    tokenize,
)

__version__ = "0.1.0"
