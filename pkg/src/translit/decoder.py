"""Word and sentence transliteration.

A word is syllabified and each syllable is looked up in the translation
table chosen by the word's entity tag.  The candidates of all syllables form
a lattice; a path through it is scored as

    prod_i  P(t_i | s_i) ** (1 - lm_weight) * P_lm(t_i | t_{i-1}) ** lm_weight

with an extra ``P_lm(</s> | t_last) ** lm_weight`` on the last syllable and
``lm_epsilon`` standing in for unseen bigrams.  With the default
``lm_weight=0`` this is the plain product of translation probabilities and
the best path is the per-syllable argmax.

Syllables missing from the table are spelled letter by letter with the
model's fallback map.  They contribute no factor to the score (the LM still
sees their text as history) and mark the candidate as degraded.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, replace
from typing import Optional

from .corpus.entries import EntityCategory
from .corpus.model import TransliterationModel
from .corpus.tables import BOS, EOS, BigramLM
from .errors import ModelMissingTable, TranslitError
from .ner import Gazetteer, TaggedToken, tag_tokens, tokenize_sentence
from .syllabifier import syllabify

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class DecodeOptions:
    lm_weight: float = 0.0
    beam_width: int = 5
    lm_epsilon: float = 1e-6

    def __post_init__(self):
        if not 0.0 <= self.lm_weight <= 1.0:
            raise ValueError(f"lm_weight must be in [0, 1], got {self.lm_weight}")
        if self.beam_width < 1:
            raise ValueError(f"beam_width must be positive, got {self.beam_width}")
        if not 0.0 < self.lm_epsilon <= 1.0:
            raise ValueError(f"lm_epsilon must be in (0, 1], got {self.lm_epsilon}")


@dataclass(frozen=True)
class SyllableChoice:
    source: str
    target: str
    prob: Optional[float]
    from_fallback: bool = False


@dataclass(frozen=True)
class Candidate:
    choices: tuple
    score: float
    degraded: bool
    table: str = ""  # "ne" or "general"

    @property
    def target(self) -> str:
        return "".join(c.target for c in self.choices)

    @property
    def source(self) -> str:
        return "".join(c.source for c in self.choices)

    def trace(self) -> str:
        """``ku:ਕੁ nal:ਨਲ`` with ``!`` marking fallback syllables."""
        return " ".join(
            f"{c.source}:{c.target}" + ("!" if c.from_fallback else "") for c in self.choices
        )


def fallback_spelling(syllable: str, model: TransliterationModel) -> str:
    if model.fallback_map is None:
        raise ModelMissingTable(
            f"syllable {syllable!r} is not in the table and the model has no fallback map"
        )
    try:
        return "".join(model.fallback_map[c] for c in syllable)
    except KeyError as exc:
        raise ModelMissingTable(f"fallback map has no entry for {exc.args[0]!r}") from None


def build_lattice(word, tag, model, opts) -> list[list[SyllableChoice]]:
    table = model.table_for(tag)
    if not table and model.fallback_map is None:
        raise ModelMissingTable(f"{EntityCategory(tag).value} table is empty and there is no fallback map")
    lattice = []
    for syl in syllabify(word, model.profile):
        row = table.candidates(syl.text)[: opts.beam_width]
        if row:
            lattice.append([SyllableChoice(syl.text, t, p) for t, p in row])
        else:
            target = fallback_spelling(syl.text, model)
            lattice.append([SyllableChoice(syl.text, target, None, True)])
    return lattice


def _lm(lm: BigramLM, history: str, word: str, opts: DecodeOptions) -> float:
    p = lm.prob(history, word)
    return opts.lm_epsilon if p is None else p


def step_factor(prev_target, choice, is_last, lm, opts) -> float:
    """Score multiplier contributed by ``choice`` following ``prev_target``."""
    if choice.from_fallback:
        return 1.0
    weight = opts.lm_weight
    if weight == 0.0:
        return choice.prob
    factor = choice.prob ** (1.0 - weight)
    factor *= _lm(lm, prev_target, choice.target, opts) ** weight
    if is_last:
        factor *= _lm(lm, choice.target, EOS, opts) ** weight
    return factor


def _key(path):
    score, targets, _ = path
    return (-score, targets)


def search(lattice, lm: BigramLM, opts: DecodeOptions, k: int) -> list[Candidate]:
    """k best lattice paths by score, ties broken by the target syllables.

    Position-synchronous dynamic programming that keeps the k best partial
    paths ending in each lattice node; with k=1 this is Viterbi.
    """
    if not lattice:
        return []
    last = len(lattice) - 1
    # per node: list of (score, target tuple, choice tuple)
    frontier = []
    for choice in lattice[0]:
        score = 1.0 * step_factor(BOS, choice, last == 0, lm, opts)
        frontier.append([(score, (choice.target,), (choice,))])

    for i in range(1, len(lattice)):
        new_frontier = []
        for choice in lattice[i]:
            extended = []
            for paths in frontier:
                for score, targets, choices in paths:
                    f = step_factor(targets[-1], choice, i == last, lm, opts)
                    extended.append((score * f, targets + (choice.target,), choices + (choice,)))
            extended.sort(key=_key)
            new_frontier.append(extended[:k])
        frontier = new_frontier

    finals = sorted((p for paths in frontier for p in paths), key=_key)[:k]
    return [
        Candidate(choices, score, any(c.from_fallback for c in choices))
        for score, _, choices in finals
    ]


def top_k(word, tag, model, opts: DecodeOptions = DecodeOptions(), k: int = 5) -> list[Candidate]:
    if k < 1:
        raise ValueError(f"k must be positive, got {k}")
    tag = EntityCategory(tag)
    lattice = build_lattice(word, tag, model, opts)
    table = "ne" if tag.is_entity else "general"
    return [replace(c, table=table) for c in search(lattice, model.lm, opts, k)]


def transliterate_word(word, tag, model, opts: DecodeOptions = DecodeOptions()) -> Candidate:
    return top_k(word, tag, model, opts, 1)[0]


@dataclass(frozen=True)
class TokenResult:
    token: TaggedToken
    candidate: Optional[Candidate] = None
    error: Optional[str] = None

    @property
    def output(self) -> str:
        return self.candidate.target if self.candidate is not None else self.token.text

    def trace(self) -> str:
        """``Teena/PERSON/ne tee:ਤੀ na:ਨਾ``; untransliterated tokens show ``-``."""
        head = f"{self.token.text}/{self.token.tag.value}"
        if self.candidate is None:
            return f"{head}/- {self.token.text}"
        return f"{head}/{self.candidate.table} {self.candidate.trace()}"


def transliterate_sentence(
    text: str,
    model: TransliterationModel,
    gazetteer: Gazetteer = Gazetteer(),
    opts: DecodeOptions = DecodeOptions(),
) -> tuple[str, list[TokenResult]]:
    """Tag, transliterate and re-join a sentence.

    A token that cannot be transliterated (digits, mixed scripts) is copied
    to the output unchanged and its error recorded in the detail list.
    """
    details = []
    for token in tag_tokens(tokenize_sentence(text), gazetteer):
        try:
            cand = transliterate_word(token.text, token.tag, model, opts)
        except TranslitError as exc:
            log.debug("cannot transliterate %r: %s", token.text, exc)
            details.append(TokenResult(token, None, str(exc)))
            continue
        details.append(TokenResult(token, cand))
    return " ".join(d.output for d in details), details
