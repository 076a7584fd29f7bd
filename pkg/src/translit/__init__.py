"""English to Punjabi (Gurmukhi) transliteration by syllable.

Typical use::

    from translit import load_model, transliterate_sentence
    model = load_model("model.txt")
    text, details = transliterate_sentence("Teena is going to Haryana", model)
"""

from .corpus import (
    EntityCategory,
    ParallelEntry,
    TransliterationModel,
    load_model,
    parse_corpus,
    save_model,
    train_model,
)
from .decoder import (
    Candidate,
    DecodeOptions,
    top_k,
    transliterate_sentence,
    transliterate_word,
)
from .evaluation import accuracy, evaluate_corpus
from .ner import Gazetteer, load_gazetteer, tag_tokens, tokenize_sentence
from .script import DEFAULT_PROFILE, ScriptProfile, segment_aksharas, tokenize_units
from .syllabifier import Syllable, syllabify

__version__ = "0.1.0"

__all__ = [
    "EntityCategory", "ParallelEntry", "TransliterationModel", "load_model",
    "parse_corpus", "save_model", "train_model", "Candidate", "DecodeOptions",
    "top_k", "transliterate_sentence", "transliterate_word", "accuracy",
    "evaluate_corpus", "Gazetteer", "load_gazetteer", "tag_tokens",
    "tokenize_sentence", "DEFAULT_PROFILE", "ScriptProfile", "segment_aksharas",
    "tokenize_units", "Syllable", "syllabify",
]
