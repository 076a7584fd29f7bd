"""Relative-frequency estimation of syllable translation tables and the
target-side bigram language model."""

from __future__ import annotations

import logging
from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Optional

from ..errors import EmptyTrainingSet
from ..script import DEFAULT_PROFILE, ScriptProfile
from .entries import AlignmentSkipped, EntityCategory, ParallelEntry, align_pair

log = logging.getLogger(__name__)

BOS = "<s>"
EOS = "</s>"


class CountTable:
    """Joint and marginal counts of (source syllable, target syllable) pairs."""

    def __init__(self):
        self.pair_counts: Counter = Counter()
        self.source_counts: Counter = Counter()

    def add(self, source: str, target: str, n: int = 1) -> None:
        self.pair_counts[(source, target)] += n
        self.source_counts[source] += n

    def update(self, pairs: Iterable[tuple[str, str]]) -> None:
        for s, t in pairs:
            self.add(s, t)

    def merge(self, other: "CountTable") -> None:
        self.pair_counts.update(other.pair_counts)
        self.source_counts.update(other.source_counts)

    def total(self) -> int:
        return sum(self.pair_counts.values())

    def __len__(self):
        return len(self.source_counts)

    def check(self) -> bool:
        marginal = Counter()
        for (s, _), n in self.pair_counts.items():
            marginal[s] += n
        return marginal == self.source_counts


def _order(item):
    target, prob = item
    return (-prob, target)


class TranslationTable:
    """Maps a source syllable to its target syllables, most probable first.

    Ties on probability are broken by codepoint order of the target.
    """

    def __init__(self, probs: Optional[Mapping[str, Iterable[tuple[str, float]]]] = None):
        self.probs: dict[str, tuple[tuple[str, float], ...]] = {}
        for source, row in (probs or {}).items():
            self.probs[source] = tuple(sorted(((t, float(p)) for t, p in row), key=_order))

    @classmethod
    def from_counts(cls, counts: CountTable) -> "TranslationTable":
        rows: dict[str, list] = {}
        for (s, t), n in counts.pair_counts.items():
            rows.setdefault(s, []).append((t, n / counts.source_counts[s]))
        return cls(rows)

    def candidates(self, source: str) -> tuple[tuple[str, float], ...]:
        return self.probs.get(source, ())

    def prob(self, source: str, target: str) -> float:
        for t, p in self.candidates(source):
            if t == target:
                return p
        return 0.0

    def sources(self):
        return sorted(self.probs)

    def __contains__(self, source):
        return source in self.probs

    def __len__(self):
        return len(self.probs)

    def __bool__(self):
        return bool(self.probs)

    def __repr__(self):
        return f"TranslationTable({len(self)} sources)"

    def row_sums(self) -> dict[str, float]:
        return {s: sum(p for _, p in row) for s, row in self.probs.items()}

    def approx_equal(self, other: "TranslationTable", tol: float = 1e-9) -> bool:
        if set(self.probs) != set(other.probs):
            return False
        for s, row in self.probs.items():
            orow = other.probs[s]
            if [t for t, _ in row] != [t for t, _ in orow]:
                return False
            if any(abs(p - q) > tol for (_, p), (_, q) in zip(row, orow)):
                return False
        return True


class BigramLM:
    """Bigram model over target syllables, P(w | h) = C(h, w) / C(h).

    Sequences are padded with ``<s>``/``</s>``; ``<s>`` is only ever a history
    and ``</s>`` only ever a prediction.
    """

    def __init__(self, bigram=None, unigram_counts=None):
        self.bigram: dict[tuple[str, str], float] = dict(bigram or {})
        # counts of each syllable in history position (the denominator)
        self.unigram_counts: dict[str, int] = dict(unigram_counts or {})

    @classmethod
    def from_sequences(cls, sequences: Iterable[Iterable[str]]) -> "BigramLM":
        pair_counts: Counter = Counter()
        history_counts: Counter = Counter()
        for seq in sequences:
            padded = [BOS, *seq, EOS]
            for h, w in zip(padded, padded[1:]):
                pair_counts[(h, w)] += 1
                history_counts[h] += 1
        bigram = {(h, w): n / history_counts[h] for (h, w), n in pair_counts.items()}
        return cls(bigram, history_counts)

    def prob(self, history: str, word: str) -> Optional[float]:
        return self.bigram.get((history, word))

    def histories(self):
        return sorted(self.unigram_counts)

    def row_sums(self) -> dict[str, float]:
        sums: dict[str, float] = {}
        for (h, _), p in self.bigram.items():
            sums[h] = sums.get(h, 0.0) + p
        return sums

    def __len__(self):
        return len(self.bigram)

    def __repr__(self):
        return f"BigramLM({len(self.unigram_counts)} histories, {len(self.bigram)} bigrams)"

    def approx_equal(self, other: "BigramLM", tol: float = 1e-9) -> bool:
        if self.unigram_counts != other.unigram_counts:
            return False
        if set(self.bigram) != set(other.bigram):
            return False
        return all(abs(p - other.bigram[k]) <= tol for k, p in self.bigram.items())


@dataclass
class TableStats:
    entries_used: int = 0
    entries_skipped: int = 0
    pairs: int = 0
    sources: int = 0


@dataclass
class TrainingStats:
    ne: TableStats = field(default_factory=TableStats)
    general: TableStats = field(default_factory=TableStats)
    skip_reasons: Counter = field(default_factory=Counter)
    reclassified: int = 0

    @property
    def skipped(self) -> int:
        return self.ne.entries_skipped + self.general.entries_skipped

    def summary(self) -> str:
        lines = []
        for name, t in (("ne", self.ne), ("general", self.general)):
            lines.append(
                f"{name}: {t.entries_used} entries used, {t.entries_skipped} skipped, "
                f"{t.pairs} pairs, {t.sources} source syllables"
            )
        if self.skip_reasons:
            reasons = ", ".join(f"{r}={n}" for r, n in sorted(self.skip_reasons.items()))
            lines.append(f"skip reasons: {reasons}")
        if self.reclassified:
            lines.append(f"reclassified by gazetteer: {self.reclassified}")
        return "\n".join(lines)


def align_all(
    entries: Iterable[ParallelEntry], profile: ScriptProfile = DEFAULT_PROFILE
) -> tuple[list, TrainingStats]:
    """Align every entry once; returns ``[(entry, pairs)]`` and skip statistics."""
    stats = TrainingStats()
    aligned = []
    for entry in entries:
        try:
            pairs = align_pair(entry, profile)
        except AlignmentSkipped as exc:
            log.debug("skipping %s: %s", entry.source, exc)
            bucket = stats.ne if entry.category.is_entity else stats.general
            bucket.entries_skipped += 1
            stats.skip_reasons[exc.reason] += 1
            continue
        aligned.append((entry, pairs))
    return aligned, stats


def count_aligned(aligned, stats: TrainingStats) -> tuple[CountTable, CountTable]:
    ne_counts, general_counts = CountTable(), CountTable()
    for entry, pairs in aligned:
        if entry.category.is_entity:
            ne_counts.update(pairs)
            stats.ne.entries_used += 1
        else:
            general_counts.update(pairs)
            stats.general.entries_used += 1
    stats.ne.pairs, stats.ne.sources = ne_counts.total(), len(ne_counts)
    stats.general.pairs, stats.general.sources = general_counts.total(), len(general_counts)
    return ne_counts, general_counts


def count_pairs(
    entries: Iterable[ParallelEntry], profile: ScriptProfile = DEFAULT_PROFILE
) -> tuple[CountTable, CountTable, TrainingStats]:
    aligned, stats = align_all(entries, profile)
    ne_counts, general_counts = count_aligned(aligned, stats)
    return ne_counts, general_counts, stats


def tables_from_counts(ne_counts, general_counts, stats):
    if not ne_counts.total():
        raise EmptyTrainingSet(
            "name-entity table has no aligned pairs "
            f"({stats.ne.entries_skipped} PERSON/LOCATION rows skipped)"
        )
    if not general_counts.total():
        log.warning("general table is empty: no OTHER rows aligned")
    return TranslationTable.from_counts(ne_counts), TranslationTable.from_counts(general_counts)


def train_translation(
    entries: Iterable[ParallelEntry], profile: ScriptProfile = DEFAULT_PROFILE
) -> tuple[TranslationTable, TranslationTable, TrainingStats]:
    """Estimate the name-entity and general translation tables.

    PERSON and LOCATION rows feed the name-entity table, OTHER rows the
    general table.  An empty name-entity table is an error; an empty general
    table only logs a warning.
    """
    ne_counts, general_counts, stats = count_pairs(entries, profile)
    ne, general = tables_from_counts(ne_counts, general_counts, stats)
    return ne, general, stats


def bigram_from_aligned(aligned) -> BigramLM:
    sequences = [[t for _, t in pairs] for _, pairs in aligned]
    if not sequences:
        raise EmptyTrainingSet("no aligned entries to train the language model")
    return BigramLM.from_sequences(sequences)


def train_bigram(
    entries: Iterable[ParallelEntry], profile: ScriptProfile = DEFAULT_PROFILE
) -> BigramLM:
    aligned, _ = align_all(entries, profile)
    return bigram_from_aligned(aligned)
