"""Rule-based syllabification of Roman-script words.

Every vowel unit is a syllable nucleus.  Consonants are distributed around
the nuclei as follows:

* a word-initial consonant run is the onset of the first syllable;
* a word-final consonant run is the coda of the last syllable;
* a single consonant between two vowels opens the following syllable
  (``ta-run``, ``ku-nal``);
* of two or more consonants between vowels, the first closes the preceding
  syllable and the rest open the next one (``an-ge-la``, ``har-ya-na``).

A word without any vowel is kept whole as one all-consonant syllable.
"""

from __future__ import annotations

from dataclasses import dataclass

from .script import DEFAULT_PROFILE, ScriptProfile, Unit, tokenize_units


@dataclass(frozen=True)
class Syllable:
    text: str
    pattern: str
    index: int
    units: tuple = ()


def _make(units, index):
    return Syllable(
        text="".join(u.text for u in units),
        pattern="".join(u.cls.value for u in units),
        index=index,
        units=tuple(units),
    )


def split_units(units: list[Unit]) -> list[list[Unit]]:
    """Group a unit sequence into syllables (lists of units)."""
    nuclei = [i for i, u in enumerate(units) if u.is_vowel]
    if not nuclei:
        return [list(units)]

    # boundaries[k] is the index where syllable k+1 starts
    boundaries = []
    for left, right in zip(nuclei, nuclei[1:]):
        gap = right - left - 1
        if gap <= 1:
            boundaries.append(left + 1)
        else:
            boundaries.append(left + 2)

    starts = [0] + boundaries
    ends = boundaries + [len(units)]
    return [list(units[s:e]) for s, e in zip(starts, ends)]


def syllabify(word: str, profile: ScriptProfile = DEFAULT_PROFILE) -> list[Syllable]:
    units = tokenize_units(word, profile)
    return [_make(group, i) for i, group in enumerate(split_units(units))]


def pattern_of(syllable: Syllable) -> str:
    return syllable.pattern


def hyphenate(word: str, profile: ScriptProfile = DEFAULT_PROFILE) -> str:
    """``haryana`` -> ``har-ya-na``."""
    return "-".join(s.text for s in syllabify(word, profile))
