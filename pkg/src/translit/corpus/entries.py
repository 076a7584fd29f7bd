"""Parallel corpus rows: parsing and syllable/akshara alignment."""

from __future__ import annotations

import enum
import io
import unicodedata
from dataclasses import dataclass
from typing import Iterable, Optional, Union

from ..errors import (
    EntryValidationError,
    MalformedLine,
    TranslitError,
    UnknownCategory,
)
from ..script import DEFAULT_PROFILE, ScriptProfile, segment_aksharas, tokenize_units
from ..syllabifier import syllabify

SEGMENT_SEP = "|"


class EntityCategory(str, enum.Enum):
    PERSON = "PERSON"
    LOCATION = "LOCATION"
    OTHER = "OTHER"

    @property
    def is_entity(self) -> bool:
        return self is not EntityCategory.OTHER

    @classmethod
    def parse(cls, token: str) -> "EntityCategory":
        try:
            return cls(token.strip().upper())
        except ValueError:
            raise UnknownCategory(f"unknown category {token!r}") from None


def nfc(text: str) -> str:
    return unicodedata.normalize("NFC", text)


@dataclass(frozen=True)
class ParallelEntry:
    source: str
    target: str
    category: EntityCategory
    target_syllables: Optional[tuple] = None

    def __post_init__(self):
        object.__setattr__(self, "source", self.source.lower())
        object.__setattr__(self, "target", nfc(self.target))
        object.__setattr__(self, "category", EntityCategory(self.category))
        if self.target_syllables is not None:
            pieces = tuple(nfc(p) for p in self.target_syllables)
            object.__setattr__(self, "target_syllables", pieces)
        self.validate(DEFAULT_PROFILE)

    def validate(self, profile: ScriptProfile) -> None:
        try:
            tokenize_units(self.source, profile)
            segment_aksharas(self.target, profile)
            if self.target_syllables is not None:
                if not self.target_syllables:
                    raise EntryValidationError("explicit segmentation is empty")
                for piece in self.target_syllables:
                    segment_aksharas(piece, profile)
                if "".join(self.target_syllables) != self.target:
                    raise EntryValidationError(
                        f"segments {SEGMENT_SEP.join(self.target_syllables)!r} "
                        f"do not concatenate to {self.target!r}"
                    )
        except EntryValidationError:
            raise
        except TranslitError as exc:
            raise EntryValidationError(str(exc)) from exc


def _lines(stream) -> Iterable[str]:
    if isinstance(stream, str):
        return io.StringIO(stream)
    return stream


def parse_corpus(
    stream: Union[str, Iterable[str]], profile: ScriptProfile = DEFAULT_PROFILE
) -> list[ParallelEntry]:
    """Parse ``source<TAB>target<TAB>CATEGORY[<TAB>seg|seg|...]`` lines.

    Blank lines and lines starting with ``#`` are skipped.  Errors carry the
    1-based line number.
    """
    entries = []
    for lineno, raw in enumerate(_lines(stream), start=1):
        line = raw.rstrip("\r\n")
        if not line.strip() or line.lstrip().startswith("#"):
            continue
        fields = [f.strip() for f in line.split("\t")]
        if len(fields) not in (3, 4):
            raise MalformedLine(
                f"expected 3 or 4 tab-separated fields, got {len(fields)}", lineno
            )
        source, target, category = fields[:3]
        if not source or not target:
            raise MalformedLine("empty source or target field", lineno)
        try:
            cat = EntityCategory.parse(category)
        except UnknownCategory as exc:
            raise UnknownCategory(str(exc), lineno) from None
        segments = None
        if len(fields) == 4 and fields[3]:
            segments = tuple(fields[3].split(SEGMENT_SEP))
        try:
            entry = ParallelEntry(source, target, cat, segments)
            if profile != DEFAULT_PROFILE:
                entry.validate(profile)
        except EntryValidationError as exc:
            raise EntryValidationError(str(exc), lineno) from None
        entries.append(entry)
    return entries


def format_entry(entry: ParallelEntry) -> str:
    fields = [entry.source, entry.target, entry.category.value]
    if entry.target_syllables is not None:
        fields.append(SEGMENT_SEP.join(entry.target_syllables))
    return "\t".join(fields)


class AlignmentSkipped(TranslitError):
    """Raised by :func:`align_pair` when a row cannot be aligned 1:1."""

    def __init__(self, reason: str, detail: str = ""):
        self.reason = reason
        super().__init__(f"{reason}: {detail}" if detail else reason)


def reconcile(aksharas: list[str], n: int) -> list[str]:
    """Merge the rightmost pair of aksharas until at most ``n`` remain."""
    pieces = list(aksharas)
    while len(pieces) > n and len(pieces) > 1:
        last = pieces.pop()
        pieces[-1] += last
    return pieces


def align_pair(
    entry: ParallelEntry, profile: ScriptProfile = DEFAULT_PROFILE
) -> list[tuple[str, str]]:
    """Pair each source syllable with one target piece, left to right."""
    sources = [s.text for s in syllabify(entry.source, profile)]
    if entry.target_syllables is not None:
        targets = list(entry.target_syllables)
    else:
        targets = reconcile(segment_aksharas(entry.target, profile), len(sources))
    if len(targets) != len(sources):
        raise AlignmentSkipped(
            "CountMismatch",
            f"{entry.source}: {len(sources)} syllables vs {len(targets)} target pieces",
        )
    return list(zip(sources, targets))
