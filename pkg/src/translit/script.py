"""Character-level knowledge for Roman (source) and Gurmukhi (target) text.

Roman words are cut into :class:`Unit` objects: single letters, consonant
digraphs such as ``dh``/``sh``, or runs of one repeated vowel (``ee``).
Gurmukhi words are cut into aksharas, i.e. a base character together with
every dependent mark that follows it.
"""

from __future__ import annotations

import enum
import unicodedata
from dataclasses import dataclass, field
from typing import NamedTuple

from .errors import (
    EmptyWord,
    LeadingCombiningMark,
    NonGurmukhiCharacter,
    NonRomanCharacter,
    ProfileError,
)

GURMUKHI_START = 0x0A00
GURMUKHI_END = 0x0A7F
VIRAMA = "੍"

DEFAULT_VOWELS = frozenset("aeiou")
DEFAULT_DIGRAPHS = ("bh", "ch", "dh", "gh", "jh", "kh", "ph", "sh", "th", "wh")


def _gurmukhi_marks():
    marks = set()
    for cp in range(GURMUKHI_START, GURMUKHI_END + 1):
        ch = chr(cp)
        if unicodedata.category(ch) in ("Mn", "Mc"):
            marks.add(ch)
    return frozenset(marks)


DEFAULT_GURMUKHI_COMBINING = _gurmukhi_marks()


class CharClass(enum.Enum):
    VOWEL = "V"
    CONSONANT = "C"
    NONLETTER = "-"


def is_roman_letter(c: str) -> bool:
    return len(c) == 1 and ("a" <= c <= "z" or "A" <= c <= "Z")


def is_gurmukhi(c: str) -> bool:
    return (
        len(c) == 1
        and GURMUKHI_START <= ord(c) <= GURMUKHI_END
        and unicodedata.name(c, None) is not None
    )


@dataclass(frozen=True)
class ScriptProfile:
    """Configuration that drives unit tokenization and akshara segmentation."""

    vowels: frozenset = DEFAULT_VOWELS
    digraphs: tuple = DEFAULT_DIGRAPHS
    merge_identical_vowels: bool = True
    gurmukhi_combining: frozenset = field(default=DEFAULT_GURMUKHI_COMBINING)
    digraph_set: frozenset = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        vowels = frozenset(v.lower() for v in self.vowels)
        digraphs = tuple(d.lower() for d in self.digraphs)
        object.__setattr__(self, "vowels", vowels)
        object.__setattr__(self, "digraphs", digraphs)
        object.__setattr__(self, "gurmukhi_combining", frozenset(self.gurmukhi_combining))

        for v in vowels:
            if not is_roman_letter(v):
                raise ProfileError(f"vowel {v!r} is not a single Roman letter")
        if len(set(digraphs)) != len(digraphs):
            raise ProfileError("duplicate digraph in profile")
        for d in digraphs:
            if len(d) != 2 or not all(is_roman_letter(c) for c in d):
                raise ProfileError(f"digraph {d!r} must be two Roman letters")
            if d[0] in vowels:
                raise ProfileError(f"digraph {d!r} starts with a vowel")
        letters = set(vowels) | {c for d in digraphs for c in d}
        if letters & self.gurmukhi_combining:
            raise ProfileError("Roman letters overlap the Gurmukhi combining set")
        object.__setattr__(self, "digraph_set", frozenset(digraphs))

    def is_combining(self, c: str) -> bool:
        return c in self.gurmukhi_combining


DEFAULT_PROFILE = ScriptProfile()


class Unit(NamedTuple):
    text: str
    cls: CharClass

    @property
    def is_vowel(self) -> bool:
        return self.cls is CharClass.VOWEL


def classify_char(c: str, profile: ScriptProfile = DEFAULT_PROFILE) -> CharClass:
    if c.lower() in profile.vowels and is_roman_letter(c):
        return CharClass.VOWEL
    if is_roman_letter(c):
        return CharClass.CONSONANT
    return CharClass.NONLETTER


def tokenize_units(word: str, profile: ScriptProfile = DEFAULT_PROFILE) -> list[Unit]:
    """Split a Roman word into consonant and vowel units.

    Digraphs are matched greedily left to right.  With
    ``merge_identical_vowels`` a run of the same vowel letter becomes one
    unit, so ``teena`` gives ``t, ee, n, a`` while ``going`` keeps ``o``
    and ``i`` apart.
    """
    if not word:
        raise EmptyWord()
    for i, c in enumerate(word):
        if not is_roman_letter(c):
            raise NonRomanCharacter(c, i, word)
    text = word.lower()
    digraphs = profile.digraph_set
    vowels = profile.vowels

    units: list[Unit] = []
    i = 0
    while i < len(text):
        pair = text[i:i + 2]
        if pair in digraphs:
            units.append(Unit(pair, CharClass.CONSONANT))
            i += 2
            continue
        c = text[i]
        units.append(Unit(c, CharClass.VOWEL if c in vowels else CharClass.CONSONANT))
        i += 1

    if not profile.merge_identical_vowels:
        return units
    merged: list[Unit] = []
    for unit in units:
        prev = merged[-1] if merged else None
        if (
            prev is not None
            and unit.is_vowel
            and prev.is_vowel
            and prev.text[0] == unit.text
        ):
            merged[-1] = Unit(prev.text + unit.text, CharClass.VOWEL)
        else:
            merged.append(unit)
    return merged


def segment_aksharas(word: str, profile: ScriptProfile = DEFAULT_PROFILE) -> list[str]:
    """Split a Gurmukhi word into aksharas.

    >>> segment_aksharas("ਕੁਨਲ")
    ['ਕੁ', 'ਨ', 'ਲ']
    """
    if not word:
        raise EmptyWord()
    aksharas: list[str] = []
    glue_next = False
    for i, c in enumerate(word):
        if not is_gurmukhi(c):
            raise NonGurmukhiCharacter(c, i, word)
        if profile.is_combining(c):
            if not aksharas:
                raise LeadingCombiningMark(c, word)
            aksharas[-1] += c
            glue_next = c == VIRAMA
            continue
        # a consonant after virama forms a conjunct with the preceding akshara
        if glue_next and aksharas and _is_gurmukhi_consonant(c):
            aksharas[-1] += c
        else:
            aksharas.append(c)
        glue_next = False
    return aksharas


def _is_gurmukhi_consonant(c: str) -> bool:
    return unicodedata.name(c, "").startswith("GURMUKHI LETTER") and not (
        0x0A05 <= ord(c) <= 0x0A14
    )
