"""The trained transliteration model and its text persistence format.

File layout (UTF-8, one record per line, tab-separated fields)::

    TRANSLIT-MODEL v1
    [PROFILE] 4
    vowels<TAB>a e i o u
    ...
    [NE-TABLE] <n records>
    <source><TAB><target><TAB><probability>
    [GENERAL-TABLE] <n records>
    [LM] <n records>
    H<TAB><history><TAB><count>
    B<TAB><history><TAB><word><TAB><probability>
    [FALLBACK] <n records>
    <letter><TAB><gurmukhi>

The record count in each section header lets a reader detect truncation.
"""

from __future__ import annotations

import dataclasses
import functools
import io
import logging
import string
from dataclasses import dataclass
from typing import Iterable, Optional

from ..errors import CorruptSection, ModelFormatError, UnsupportedVersion
from ..script import DEFAULT_PROFILE, ScriptProfile
from .entries import EntityCategory, ParallelEntry, nfc
from .tables import (
    BigramLM,
    TrainingStats,
    TranslationTable,
    align_all,
    bigram_from_aligned,
    count_aligned,
    tables_from_counts,
)

log = logging.getLogger(__name__)

FORMAT_VERSION = 1
HEADER_PREFIX = "TRANSLIT-MODEL v"
SECTIONS = ("PROFILE", "NE-TABLE", "GENERAL-TABLE", "LM", "FALLBACK")
PROB_FORMAT = "{:.9f}"
ROW_SUM_TOLERANCE = 1e-6

# Letter-by-letter rendering for syllables missing from the tables.
DEFAULT_FALLBACK = {
    letter: nfc(gurmukhi)
    for letter, gurmukhi in {
        "a": "ਅ", "b": "ਬ", "c": "ਕ", "d": "ਡ", "e": "ਏ", "f": "ਫ਼",
        "g": "ਗ", "h": "ਹ", "i": "ਇ", "j": "ਜ", "k": "ਕ", "l": "ਲ",
        "m": "ਮ", "n": "ਨ", "o": "ਓ", "p": "ਪ", "q": "ਕ", "r": "ਰ",
        "s": "ਸ", "t": "ਟ", "u": "ਉ", "v": "ਵ", "w": "ਵ", "x": "ਕਸ",
        "y": "ਯ", "z": "ਜ਼",
    }.items()
}


@dataclass(frozen=True)
class TransliterationModel:
    profile: ScriptProfile
    ne_table: TranslationTable
    general_table: TranslationTable
    lm: BigramLM
    fallback_map: Optional[dict] = dataclasses.field(
        default_factory=lambda: dict(DEFAULT_FALLBACK)
    )
    version: int = FORMAT_VERSION

    def __post_init__(self):
        if self.fallback_map is not None:
            missing = set(string.ascii_lowercase) - set(self.fallback_map)
            if missing:
                raise ValueError(
                    f"fallback map is missing letters: {''.join(sorted(missing))}"
                )
        if self.version != FORMAT_VERSION:
            raise UnsupportedVersion(f"model version {self.version} is not supported")

    def table_for(self, category: EntityCategory) -> TranslationTable:
        if EntityCategory(category).is_entity:
            return self.ne_table
        return self.general_table

    def approx_equal(self, other: "TransliterationModel", tol: float = 1e-9) -> bool:
        return (
            self.version == other.version
            and self.profile == other.profile
            and self.fallback_map == other.fallback_map
            and self.ne_table.approx_equal(other.ne_table, tol)
            and self.general_table.approx_equal(other.general_table, tol)
            and self.lm.approx_equal(other.lm, tol)
        )


def train_model(
    entries: Iterable[ParallelEntry],
    profile: ScriptProfile = DEFAULT_PROFILE,
    fallback_map: Optional[dict] = None,
    gazetteer=None,
) -> tuple[TransliterationModel, TrainingStats]:
    """Train both translation tables and the language model.

    If a gazetteer is given, OTHER rows whose source word it lists as a
    person or location are routed to the name-entity table, mirroring how
    the decoder chooses tables at run time.
    """
    entries = list(entries)
    reclassified = 0
    if gazetteer is not None:
        routed = []
        for entry in entries:
            tag = gazetteer.lookup(entry.source)
            if tag is not None and not entry.category.is_entity:
                entry = dataclasses.replace(entry, category=tag)
                reclassified += 1
            routed.append(entry)
        entries = routed
    aligned, stats = align_all(entries, profile)
    ne_table, general_table = tables_from_counts(*count_aligned(aligned, stats), stats)
    stats.reclassified = reclassified
    lm = bigram_from_aligned(aligned)
    model = TransliterationModel(
        profile=profile,
        ne_table=ne_table,
        general_table=general_table,
        lm=lm,
        fallback_map=dict(DEFAULT_FALLBACK if fallback_map is None else fallback_map),
    )
    return model, stats


# -- persistence ---------------------------------------------------------------

def _fmt(p: float) -> str:
    return PROB_FORMAT.format(p)


def _profile_records(profile: ScriptProfile) -> list[str]:
    return [
        "vowels\t" + " ".join(sorted(profile.vowels)),
        "digraphs\t" + " ".join(profile.digraphs),
        "merge_identical_vowels\t" + ("true" if profile.merge_identical_vowels else "false"),
        "gurmukhi_combining\t"
        + " ".join(f"{ord(c):04X}" for c in sorted(profile.gurmukhi_combining)),
    ]


def _table_records(table: TranslationTable) -> list[str]:
    return [
        f"{s}\t{t}\t{_fmt(p)}" for s in table.sources() for t, p in table.candidates(s)
    ]


def _lm_records(lm: BigramLM) -> list[str]:
    records = [f"H\t{h}\t{lm.unigram_counts[h]}" for h in lm.histories()]
    records += [f"B\t{h}\t{w}\t{_fmt(p)}" for (h, w), p in sorted(lm.bigram.items())]
    return records


def dumps_model(model: TransliterationModel) -> str:
    sections = {
        "PROFILE": _profile_records(model.profile),
        "NE-TABLE": _table_records(model.ne_table),
        "GENERAL-TABLE": _table_records(model.general_table),
        "LM": _lm_records(model.lm),
        "FALLBACK": [f"{k}\t{v}" for k, v in sorted((model.fallback_map or {}).items())],
    }
    out = [f"{HEADER_PREFIX}{model.version}"]
    for name in SECTIONS:
        out.append(f"[{name}] {len(sections[name])}")
        out.extend(sections[name])
    return "\n".join(out) + "\n"


def save_model(model: TransliterationModel, sink) -> None:
    """Write ``model`` to a path or a text stream."""
    text = dumps_model(model)
    if hasattr(sink, "write"):
        sink.write(text)
    else:
        with open(sink, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)


def _read_sections(lines: list[str]) -> dict[str, list[tuple[int, list[str]]]]:
    if not lines or not lines[0].startswith(HEADER_PREFIX):
        raise ModelFormatError("missing TRANSLIT-MODEL header")
    version = lines[0][len(HEADER_PREFIX):].strip()
    if version != str(FORMAT_VERSION):
        raise UnsupportedVersion(f"unsupported model version {version!r}")

    sections: dict[str, list[tuple[int, list[str]]]] = {}
    i = 1
    while i < len(lines):
        lineno = i + 1
        header = lines[i]
        if not (header.startswith("[") and "]" in header):
            raise CorruptSection("?", lineno, f"expected a section header, got {header!r}")
        name, _, count = header[1:].partition("]")
        if name not in SECTIONS:
            raise CorruptSection(name, lineno, "unknown section")
        if name in sections:
            raise CorruptSection(name, lineno, "duplicate section")
        try:
            n = int(count.strip())
        except ValueError:
            raise CorruptSection(name, lineno, "bad record count") from None
        body = lines[i + 1:i + 1 + n]
        if len(body) < n or any(line.startswith("[") for line in body):
            raise CorruptSection(name, lineno + len(body), f"expected {n} records")
        sections[name] = [(lineno + 1 + k, line.split("\t")) for k, line in enumerate(body)]
        i += 1 + n
    for name in SECTIONS:
        if name not in sections:
            raise CorruptSection(name, len(lines), "section missing")
    return sections


def _prob(section, lineno, text):
    try:
        p = float(text)
    except ValueError:
        raise CorruptSection(section, lineno, f"bad probability {text!r}") from None
    if not 0.0 < p <= 1.0:
        raise CorruptSection(section, lineno, f"probability {p} outside (0, 1]")
    return p


@functools.lru_cache(maxsize=32)
def _build_profile(vowels, digraphs, merge, combining):
    return ScriptProfile(
        vowels=frozenset(vowels.split()),
        digraphs=tuple(digraphs.split()),
        merge_identical_vowels=merge == "true",
        gurmukhi_combining=frozenset(chr(int(h, 16)) for h in combining.split()),
    )


def _parse_profile(records):
    values = {}
    for lineno, fields in records:
        if len(fields) != 2:
            raise CorruptSection("PROFILE", lineno, "expected key<TAB>value")
        values[fields[0]] = fields[1]
    try:
        return _build_profile(
            values["vowels"],
            values["digraphs"],
            values["merge_identical_vowels"],
            values["gurmukhi_combining"],
        )
    except (KeyError, ValueError) as exc:
        raise CorruptSection("PROFILE", records[0][0] if records else 0, str(exc)) from None


def _parse_table(name, records):
    rows: dict[str, list] = {}
    for lineno, fields in records:
        if len(fields) != 3:
            raise CorruptSection(name, lineno, "expected source<TAB>target<TAB>prob")
        rows.setdefault(fields[0], []).append((fields[1], _prob(name, lineno, fields[2])))
    table = TranslationTable(rows)
    for s, total in table.row_sums().items():
        if abs(total - 1.0) > ROW_SUM_TOLERANCE:
            raise CorruptSection(name, records[0][0], f"row {s!r} sums to {total}")
    return table


def _parse_lm(records):
    bigram, counts = {}, {}
    for lineno, fields in records:
        if fields[0] == "H" and len(fields) == 3:
            try:
                counts[fields[1]] = int(fields[2])
            except ValueError:
                raise CorruptSection("LM", lineno, "bad count") from None
        elif fields[0] == "B" and len(fields) == 4:
            bigram[(fields[1], fields[2])] = _prob("LM", lineno, fields[3])
        else:
            raise CorruptSection("LM", lineno, "expected an H or B record")
    lm = BigramLM(bigram, counts)
    for h, total in lm.row_sums().items():
        if h not in counts or abs(total - 1.0) > ROW_SUM_TOLERANCE:
            raise CorruptSection("LM", records[0][0], f"history {h!r} is inconsistent")
    return lm


def loads_model(text: str) -> TransliterationModel:
    sections = _read_sections(text.splitlines())
    fallback = {}
    for lineno, fields in sections["FALLBACK"]:
        if len(fields) != 2:
            raise CorruptSection("FALLBACK", lineno, "expected letter<TAB>gurmukhi")
        fallback[fields[0]] = fields[1]
    try:
        return TransliterationModel(
            profile=_parse_profile(sections["PROFILE"]),
            ne_table=_parse_table("NE-TABLE", sections["NE-TABLE"]),
            general_table=_parse_table("GENERAL-TABLE", sections["GENERAL-TABLE"]),
            lm=_parse_lm(sections["LM"]),
            fallback_map=fallback or None,
        )
    except ValueError as exc:
        raise CorruptSection("FALLBACK", 0, str(exc)) from None


def load_model(stream) -> TransliterationModel:
    """Read a model from a path or a text stream."""
    if hasattr(stream, "read"):
        return loads_model(stream.read())
    with open(stream, encoding="utf-8") as fh:
        return loads_model(fh.read())


def roundtrip(model: TransliterationModel) -> TransliterationModel:
    buf = io.StringIO()
    save_model(model, buf)
    return loads_model(buf.getvalue())
