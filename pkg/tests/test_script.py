import string

import pytest
from hypothesis import given
from hypothesis import strategies as st

from translit.errors import (
    EmptyWord,
    LeadingCombiningMark,
    NonGurmukhiCharacter,
    NonRomanCharacter,
    ProfileError,
)
from translit.script import (
    DEFAULT_PROFILE,
    CharClass,
    ScriptProfile,
    classify_char,
    segment_aksharas,
    tokenize_units,
)

roman_words = st.text(alphabet=string.ascii_letters, min_size=1, max_size=20)


def texts(units):
    return [u.text for u in units]


class TestClassifyChar:
    @pytest.mark.parametrize("c", list("aeiouAEIOU"))
    def test_vowels(self, c):
        assert classify_char(c) is CharClass.VOWEL

    def test_consonant(self):
        assert classify_char("t") is CharClass.CONSONANT
        assert classify_char("Y") is CharClass.CONSONANT

    @pytest.mark.parametrize("c", ["7", "-", " ", "é", "ਕ", "İ"])
    def test_nonletter(self, c):
        assert classify_char(c) is CharClass.NONLETTER

    @given(st.characters())
    def test_total(self, c):
        assert classify_char(c) in set(CharClass)

    def test_custom_vowels(self):
        profile = ScriptProfile(vowels=frozenset("aeiouy"))
        assert classify_char("y", profile) is CharClass.VOWEL


class TestTokenizeUnits:
    def test_digraph(self):
        assert texts(tokenize_units("sidhima")) == ["s", "i", "dh", "i", "m", "a"]

    def test_identical_vowels_merge(self):
        units = tokenize_units("teena")
        assert texts(units) == ["t", "ee", "n", "a"]
        assert units[1].cls is CharClass.VOWEL

    def test_differing_vowels_stay_apart(self):
        assert texts(tokenize_units("going")) == ["g", "o", "i", "n", "g"]

    def test_merge_disabled(self):
        profile = ScriptProfile(merge_identical_vowels=False)
        assert texts(tokenize_units("teena", profile)) == ["t", "e", "e", "n", "a"]

    def test_lowercases(self):
        assert texts(tokenize_units("SHelly")) == ["sh", "e", "l", "l", "y"]

    def test_empty(self):
        with pytest.raises(EmptyWord):
            tokenize_units("")

    def test_non_roman_reports_position(self):
        with pytest.raises(NonRomanCharacter) as info:
            tokenize_units("ab-cd")
        assert info.value.char == "-"
        assert info.value.index == 2

    @given(roman_words)
    def test_roundtrip(self, word):
        assert "".join(texts(tokenize_units(word))) == word.lower()

    @given(roman_words)
    def test_deterministic(self, word):
        assert tokenize_units(word) == tokenize_units(word)

    @given(st.text(alphabet="abdhsktecw", min_size=1, max_size=16))
    def test_digraph_never_split(self, word):
        units = tokenize_units(word)
        starts, pos = {}, 0
        for u in units:
            starts[pos] = u
            pos += len(u.text)
        for i in range(len(word) - 1):
            if word[i:i + 2] in DEFAULT_PROFILE.digraphs:
                assert starts[i].text == word[i:i + 2]


class TestProfile:
    def test_digraph_may_not_start_with_vowel(self):
        with pytest.raises(ProfileError):
            ScriptProfile(digraphs=("ah",))

    def test_duplicate_digraph(self):
        with pytest.raises(ProfileError):
            ScriptProfile(digraphs=("sh", "sh"))

    def test_combining_set_is_gurmukhi_marks(self):
        combining = DEFAULT_PROFILE.gurmukhi_combining
        for cp in (0x0A3C, 0x0A3E, 0x0A41, 0x0A4D, 0x0A70, 0x0A71, 0x0A02):
            assert chr(cp) in combining
        assert "ਕ" not in combining
        assert not combining & set(string.ascii_letters)


class TestSegmentAksharas:
    def test_kunal(self):
        # KA + U sign, NA, LA
        assert segment_aksharas("ਕੁਨਲ") == [
            "ਕੁ", "ਨ", "ਲ",
        ]

    def test_har(self):
        assert segment_aksharas("ਹਰ") == ["ਹ", "ਰ"]

    def test_single_vowel(self):
        assert segment_aksharas("ਆ") == ["ਆ"]

    def test_virama_conjunct(self):
        # PA + VIRAMA + RA + II sign, TA
        assert segment_aksharas("ਪ੍ਰੀਤ") == [
            "ਪ੍ਰੀ", "ਤ",
        ]

    def test_tippi_and_nukta_attach(self):
        # I, TIPPI | GA ; SA + NUKTA
        assert segment_aksharas("ਇੰਗ") == ["ਇੰ", "ਗ"]
        assert segment_aksharas("ਸ਼ੇ") == ["ਸ਼ੇ"]

    def test_errors(self):
        with pytest.raises(EmptyWord):
            segment_aksharas("")
        with pytest.raises(NonGurmukhiCharacter):
            segment_aksharas("ਕa")
        with pytest.raises(LeadingCombiningMark):
            segment_aksharas("ੁਕ")

    @given(st.lists(st.sampled_from(
        ["ਕ", "ਨ", "ਲ", "ਆ", "ਇ", "ੁ", "ਾ", "੍", "ੰ", "਼"]),
        min_size=1, max_size=12))
    def test_roundtrip(self, chars):
        word = "".join(chars)
        if word[0] in DEFAULT_PROFILE.gurmukhi_combining:
            with pytest.raises(LeadingCombiningMark):
                segment_aksharas(word)
            return
        pieces = segment_aksharas(word)
        assert "".join(pieces) == word
        for piece in pieces:
            assert piece[0] not in DEFAULT_PROFILE.gurmukhi_combining
