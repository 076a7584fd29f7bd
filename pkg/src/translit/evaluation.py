"""Exact-match transliteration accuracy."""

from __future__ import annotations

import unicodedata
from dataclasses import dataclass, field
from typing import Iterable

from .corpus.entries import EntityCategory, ParallelEntry
from .corpus.model import TransliterationModel
from .decoder import DecodeOptions, transliterate_word
from .errors import EmptyTestSet, TranslitError, ZeroTotal
from .ner import Gazetteer, tag_tokens


def accuracy(correct: int, total: int) -> float:
    """Percentage of correct transliterations, ``100 * correct / total``."""
    if total == 0:
        raise ZeroTotal("accuracy is undefined for an empty total")
    if total < 0 or correct < 0 or correct > total:
        raise ValueError(f"need 0 <= correct <= total, got {correct}/{total}")
    # exact integer numerator, so the result is the correctly rounded rational
    return 100 * correct / total


@dataclass
class CategoryScore:
    total: int = 0
    correct: int = 0

    @property
    def accuracy_percent(self) -> float:
        return accuracy(self.correct, self.total) if self.total else 0.0


@dataclass(frozen=True)
class RowOutcome:
    source: str
    gold: str
    predicted: str
    tag: EntityCategory
    correct: bool
    degraded: bool = False
    error: str = ""

    def tsv(self) -> str:
        return "\t".join(
            [self.source, self.gold, self.predicted, self.tag.value, str(self.correct).lower()]
        )


@dataclass
class EvalReport:
    total: int = 0
    correct: int = 0
    skipped: int = 0
    degraded: int = 0
    per_category: dict = field(default_factory=dict)
    rows: list = field(default_factory=list)

    @property
    def accuracy_percent(self) -> float:
        return accuracy(self.correct, self.total)

    def add(self, row: RowOutcome, category: EntityCategory) -> None:
        self.rows.append(row)
        self.total += 1
        self.correct += row.correct
        self.skipped += bool(row.error)
        self.degraded += row.degraded
        score = self.per_category.setdefault(category, CategoryScore())
        score.total += 1
        score.correct += row.correct

    def format(self) -> str:
        lines = [
            f"total\t{self.total}",
            f"correct\t{self.correct}",
            f"accuracy\t{self.accuracy_percent:.2f}%",
            f"skipped\t{self.skipped}",
            f"degraded\t{self.degraded}",
        ]
        for cat in EntityCategory:
            score = self.per_category.get(cat)
            if score is None:
                continue
            lines.append(
                f"{cat.value}\t{score.correct}/{score.total}\t{score.accuracy_percent:.2f}%"
            )
        return "\n".join(lines)


def same_word(a: str, b: str) -> bool:
    return unicodedata.normalize("NFC", a) == unicodedata.normalize("NFC", b)


def evaluate_corpus(
    model: TransliterationModel,
    test_entries: Iterable[ParallelEntry],
    gazetteer: Gazetteer = Gazetteer(),
    opts: DecodeOptions = DecodeOptions(),
    predicted_tags: bool = False,
) -> EvalReport:
    """Decode every test row and count exact matches against the gold target.

    In gold-tag mode (the default) the row's own category picks the
    translation table; with ``predicted_tags`` the tagger decides.  The
    per-category breakdown is always keyed by the gold category.  Rows the
    decoder fails on count as incorrect and are tallied in ``skipped``.
    """
    report = EvalReport()
    for entry in test_entries:
        if predicted_tags:
            tag = tag_tokens([entry.source], gazetteer)[0].tag
        else:
            tag = entry.category
        try:
            cand = transliterate_word(entry.source, tag, model, opts)
        except TranslitError as exc:
            row = RowOutcome(entry.source, entry.target, "", tag, False, error=str(exc))
        else:
            row = RowOutcome(
                entry.source,
                entry.target,
                cand.target,
                tag,
                same_word(cand.target, entry.target),
                cand.degraded,
            )
        report.add(row, entry.category)
    if report.total == 0:
        raise EmptyTestSet("no test entries")
    return report
