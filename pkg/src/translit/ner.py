"""Gazetteer-based name-entity tagging.

Tokens found in the person or location word list get that tag.  Tokens
missing from both lists are tagged PERSON when they are capitalized and not
the first token of the sentence; everything else is OTHER.  Organizations
and dates are not recognized and fall into OTHER.
"""

from __future__ import annotations

import logging
import re
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Optional

from .corpus.entries import EntityCategory

log = logging.getLogger(__name__)

# alphanumeric runs; punctuation, hyphens and apostrophes separate tokens
_TOKEN_RE = re.compile(r"[^\W_]+")


@dataclass(frozen=True)
class TaggedToken:
    text: str
    normalized: str
    tag: EntityCategory


@dataclass(frozen=True)
class Gazetteer:
    persons: frozenset = field(default_factory=frozenset)
    locations: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        persons = frozenset(w.lower() for w in self.persons)
        locations = frozenset(w.lower() for w in self.locations)
        conflicts = persons & locations
        if conflicts:
            log.warning(
                "%d words listed as both person and location; treating as PERSON: %s",
                len(conflicts),
                ", ".join(sorted(conflicts)[:10]),
            )
        object.__setattr__(self, "persons", persons)
        object.__setattr__(self, "locations", locations - conflicts)

    def lookup(self, word: str) -> Optional[EntityCategory]:
        w = word.lower()
        if w in self.persons:
            return EntityCategory.PERSON
        if w in self.locations:
            return EntityCategory.LOCATION
        return None

    def __len__(self):
        return len(self.persons) + len(self.locations)


def read_word_list(lines: Iterable[str]) -> set[str]:
    words = set()
    for line in lines:
        line = line.strip()
        if line and not line.startswith("#"):
            words.add(line.lower())
    return words


def load_gazetteer(persons=None, locations=None) -> Gazetteer:
    """Build a gazetteer from two word-list files (either may be omitted)."""

    def read(path):
        if path is None:
            return set()
        with open(Path(path), encoding="utf-8") as fh:
            return read_word_list(fh)

    return Gazetteer(frozenset(read(persons)), frozenset(read(locations)))


def tokenize_sentence(text: str) -> list[str]:
    return _TOKEN_RE.findall(text)


def tag_tokens(tokens: Iterable[str], gazetteer: Gazetteer) -> list[TaggedToken]:
    tagged = []
    for i, token in enumerate(tokens):
        tag = gazetteer.lookup(token)
        if tag is None:
            if i > 0 and token[:1].isupper():
                tag = EntityCategory.PERSON
            else:
                tag = EntityCategory.OTHER
        tagged.append(TaggedToken(token, token.lower(), tag))
    return tagged
