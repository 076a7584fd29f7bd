"""Parallel corpus handling, training, and model persistence."""

from .entries import (
    AlignmentSkipped,
    EntityCategory,
    ParallelEntry,
    align_pair,
    format_entry,
    parse_corpus,
    reconcile,
)
from .model import (
    DEFAULT_FALLBACK,
    FORMAT_VERSION,
    TransliterationModel,
    dumps_model,
    load_model,
    loads_model,
    roundtrip,
    save_model,
    train_model,
)
from .tables import (
    BOS,
    EOS,
    BigramLM,
    CountTable,
    TrainingStats,
    TranslationTable,
    align_all,
    count_pairs,
    train_bigram,
    train_translation,
)

__all__ = [
    "AlignmentSkipped", "EntityCategory", "ParallelEntry", "align_pair",
    "format_entry", "parse_corpus", "reconcile", "DEFAULT_FALLBACK",
    "FORMAT_VERSION", "TransliterationModel", "dumps_model", "load_model",
    "loads_model", "roundtrip", "save_model", "train_model", "BOS", "EOS",
    "BigramLM", "CountTable", "TrainingStats", "TranslationTable",
    "align_all", "count_pairs", "train_bigram", "train_translation",
]
