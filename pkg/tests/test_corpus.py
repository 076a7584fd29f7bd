import io
import logging
from collections import Counter
from fractions import Fraction

import pytest

from translit.corpus import (
    BOS,
    EOS,
    AlignmentSkipped,
    BigramLM,
    CountTable,
    EntityCategory,
    ParallelEntry,
    align_pair,
    count_pairs,
    dumps_model,
    load_model,
    loads_model,
    parse_corpus,
    roundtrip,
    save_model,
    train_bigram,
    train_model,
    train_translation,
)
from translit.errors import (
    CorruptSection,
    EmptyTrainingSet,
    EntryValidationError,
    MalformedLine,
    UnknownCategory,
    UnsupportedVersion,
)
from randgen import random_corpus, rng_for

KUNAL = "ਕੁਨਲ"


def entry(source, target, category="PERSON", segs=None):
    return ParallelEntry(source, target, EntityCategory(category), segs)


class TestParseCorpus:
    def test_explicit_segmentation(self):
        [e] = parse_corpus("kunal\tਕੁਨਲ\tPERSON\tਕੁ|ਨਲ\n")
        assert e.source == "kunal"
        assert e.target == KUNAL
        assert e.category is EntityCategory.PERSON
        assert e.target_syllables == ("ਕੁ", "ਨਲ")

    def test_comments_and_blanks(self):
        assert parse_corpus("# comment\n\n") == []

    def test_no_segmentation(self):
        [e] = parse_corpus("haryana\tਹਰਿਆਣਾ\tLOCATION")
        assert e.target_syllables is None
        assert e.category is EntityCategory.LOCATION

    def test_file_order_and_stream_input(self):
        text = "ku\tਕੁ\tPERSON\nna\tਨਾ\tOTHER\n"
        entries = parse_corpus(io.StringIO(text))
        assert [e.source for e in entries] == ["ku", "na"]

    def test_malformed_line_number(self):
        with pytest.raises(MalformedLine) as info:
            parse_corpus("# c\nkunal ਕੁਨਲ PERSON\n")
        assert info.value.lineno == 2

    def test_unknown_category(self):
        with pytest.raises(UnknownCategory) as info:
            parse_corpus("kunal\tਕੁਨਲ\tORG\n")
        assert info.value.lineno == 1

    def test_segments_must_concatenate(self):
        with pytest.raises(EntryValidationError):
            parse_corpus("kunal\tਕੁਨਲ\tPERSON\tਕੁ|ਨ\n")

    def test_invalid_scripts(self):
        with pytest.raises(EntryValidationError):
            parse_corpus("ku-nal\tਕੁਨਲ\tPERSON\n")
        with pytest.raises(EntryValidationError):
            parse_corpus("kunal\tkunal\tPERSON\n")

    def test_nfc_normalizes_target(self):
        # SHA (U+0A36) is a composition exclusion: NFC gives SA + NUKTA
        [e] = parse_corpus("sha\t\u0a36\u0a3e\tPERSON\n")
        assert e.target == "\u0a38\u0a3c\u0a3e"


class TestAlignPair:
    def test_rightmost_merge(self):
        assert align_pair(entry("kunal", KUNAL)) == [("ku", "ਕੁ"), ("nal", "ਨਲ")]

    def test_explicit_wins(self):
        e = entry("kunal", KUNAL, segs=("ਕੁ", "ਨਲ"))
        assert align_pair(e) == [("ku", "ਕੁ"), ("nal", "ਨਲ")]

    def test_explicit_overrides_merge_direction(self):
        e = entry("kunal", KUNAL, segs=("ਕੁਨ", "ਲ"))
        assert align_pair(e) == [("ku", "ਕੁਨ"), ("nal", "ਲ")]

    def test_count_mismatch(self):
        with pytest.raises(AlignmentSkipped) as info:
            align_pair(entry("haryana", "ਹਰ"))
        assert info.value.reason == "CountMismatch"

    def test_monotone_and_complete(self, sample_entries):
        for e in sample_entries:
            pairs = align_pair(e)
            assert "".join(s for s, _ in pairs) == e.source
            assert "".join(t for _, t in pairs) == e.target


class TestTrainTranslation:
    def test_relative_frequency(self):
        rows = [entry("ku", "ਕੁ")] * 3 + [entry("ku", "ਕ")]
        ne, general, stats = train_translation(rows)
        assert ne.candidates("ku") == (("ਕੁ", 0.75), ("ਕ", 0.25))
        assert stats.ne.entries_used == 4
        assert not general

    def test_lone_observation(self):
        ne, _, _ = train_translation([entry("na", "ਨਾ")])
        assert ne.prob("na", "ਨਾ") == 1.0

    def test_general_empty_warns(self, caplog):
        with caplog.at_level(logging.WARNING, logger="translit"):
            train_translation([entry("kunal", KUNAL)])
        assert "general table is empty" in caplog.text

    def test_ne_empty_is_error(self):
        with pytest.raises(EmptyTrainingSet):
            train_translation([entry("going", "ਗੋਇੰਗ", "OTHER")])

    def test_routing(self):
        rows = [entry("na", "ਨਾ", "PERSON"), entry("na", "ਨ", "OTHER")]
        ne, general, _ = train_translation(rows)
        assert ne.candidates("na") == (("ਨਾ", 1.0),)
        assert general.candidates("na") == (("ਨ", 1.0),)

    def test_tie_order_is_codepoint(self):
        rows = [entry("ka", "ਕਾ"), entry("ka", "ਕ")]
        ne, _, _ = train_translation(rows)
        assert [t for t, _ in ne.candidates("ka")] == ["ਕ", "ਕਾ"]

    def test_skips_counted(self):
        rows = [entry("kunal", KUNAL), entry("haryana", "ਹਰ", "LOCATION")]
        _, _, stats = train_translation(rows)
        assert stats.ne.entries_skipped == 1
        assert stats.skip_reasons["CountMismatch"] == 1

    def test_count_table_marginals(self):
        counts = CountTable()
        counts.update([("a", "x"), ("a", "y"), ("b", "x")])
        assert counts.check()
        assert counts.source_counts["a"] == 2

    def test_brute_force_tally(self):
        for seed in range(200):
            rows = random_corpus(rng_for(seed))
            expected = {True: Counter(), False: Counter()}
            for e, pairs in rows:
                if pairs is not None:
                    expected[e.category.is_entity].update(pairs)
            if not expected[True]:
                with pytest.raises(EmptyTrainingSet):
                    train_translation([e for e, _ in rows])
                continue
            ne, general, _ = train_translation([e for e, _ in rows])
            for table, tally in ((ne, expected[True]), (general, expected[False])):
                totals = Counter()
                for (s, _), n in tally.items():
                    totals[s] += n
                got = {(s, t): p for s in table.sources() for t, p in table.candidates(s)}
                assert set(got) == set(tally)
                for (s, t), n in tally.items():
                    exact = Fraction(n, totals[s])
                    assert Fraction(got[(s, t)]).limit_denominator(totals[s]) == exact

    def test_order_independent(self, sample_entries):
        a = train_translation(sample_entries)
        b = train_translation(list(reversed(sample_entries)))
        assert a[0].probs == b[0].probs
        assert a[1].probs == b[1].probs


class TestBigram:
    def test_two_sequences(self):
        lm = BigramLM.from_sequences([["ਕੁ", "ਨਲ"], ["ਕੁ", "ਨਾ"]])
        assert lm.prob("ਕੁ", "ਨਲ") == 0.5
        assert lm.prob("ਕੁ", "ਨਾ") == 0.5
        assert lm.prob(BOS, "ਕੁ") == 1.0
        assert lm.unigram_counts["ਕੁ"] == 2

    def test_single_bigram(self):
        lm = train_bigram([entry("kunal", KUNAL)])
        assert lm.prob("ਕੁ", "ਨਲ") == 1.0
        assert lm.prob("ਨਲ", EOS) == 1.0

    def test_start_marker_never_predicted(self, sample_model):
        assert all(w != BOS for _, w in sample_model.lm.bigram)
        assert all(h != EOS for h, _ in sample_model.lm.bigram)

    def test_empty(self):
        with pytest.raises(EmptyTrainingSet):
            train_bigram([])

    def test_rows_sum_to_one(self, sample_model):
        for total in sample_model.lm.row_sums().values():
            assert abs(total - 1.0) <= 1e-9


class TestPersistence:
    def test_roundtrip(self, sample_model):
        loaded = roundtrip(sample_model)
        assert loaded.approx_equal(sample_model)
        assert dumps_model(loaded) == dumps_model(sample_model)

    def test_file_roundtrip(self, sample_model, tmp_path):
        path = tmp_path / "model.txt"
        save_model(sample_model, path)
        assert path.read_text(encoding="utf-8").startswith("TRANSLIT-MODEL v1\n")
        assert load_model(path).approx_equal(sample_model)

    def test_nine_digits(self):
        model, _ = train_model([entry("ku", "ਕੁ")] * 2 + [entry("ku", "ਕ")])
        text = dumps_model(model)
        assert "ku\tਕੁ\t0.666666667" in text

    def test_unsupported_version(self, sample_model):
        text = dumps_model(sample_model).replace("TRANSLIT-MODEL v1", "TRANSLIT-MODEL v9", 1)
        with pytest.raises(UnsupportedVersion):
            loads_model(text)

    def test_truncated_lm(self, sample_model):
        lines = dumps_model(sample_model).splitlines()
        lm_at = next(i for i, l in enumerate(lines) if l.startswith("[LM]"))
        with pytest.raises(CorruptSection) as info:
            loads_model("\n".join(lines[: lm_at + 5]))
        assert info.value.section == "LM"

    def test_lm_section_missing_records(self, sample_model):
        lines = dumps_model(sample_model).splitlines()
        lm_at = next(i for i, l in enumerate(lines) if l.startswith("[LM]"))
        del lines[lm_at + 3]
        with pytest.raises(CorruptSection) as info:
            loads_model("\n".join(lines))
        assert info.value.section == "LM"

    def test_bad_probability(self, sample_model):
        text = dumps_model(sample_model)
        ne_line = text.splitlines()[7]
        assert ne_line.count("\t") == 2
        broken = text.replace(ne_line, ne_line.rsplit("\t", 1)[0] + "\tabc", 1)
        with pytest.raises(CorruptSection) as info:
            loads_model(broken)
        assert info.value.section == "NE-TABLE"
        assert "bad probability" in str(info.value)

    def test_profile_survives(self):
        from translit.script import ScriptProfile

        profile = ScriptProfile(digraphs=("sh", "ng"), merge_identical_vowels=False)
        model, _ = train_model([entry("kunal", KUNAL)], profile)
        assert roundtrip(model).profile == profile


class TestSampleCorpus:
    def test_size(self, sample_entries):
        assert 150 <= len(sample_entries) <= 300

    def test_everything_aligns(self, sample_entries):
        _, _, stats = count_pairs(sample_entries)
        assert stats.skipped == 0

    def test_contains_example_words(self, sample_entries):
        sources = {e.source: e for e in sample_entries}
        for w in ("teena", "haryana", "kunal", "going", "is", "to"):
            assert w in sources
        assert sources["kunal"].target == KUNAL

    def test_gazetteer_reclassification(self, sample_entries, sample_gazetteer):
        rows = list(sample_entries) + [entry("nabha", "ਨਾਭਾ", "OTHER")]
        model, stats = train_model(rows, gazetteer=sample_gazetteer)
        assert stats.reclassified == 1
        assert "bha" in model.ne_table
