import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fuzzygdm.affect import (EmotionLexicon, EmotionVector, LexiconError,
                             SentimentLexicon, compound_sentiment,
                             emotion_score, emotion_vector, fuse_affect,
                             tokenize)
from tests.conftest import load_oracle_corpus


@pytest.fixture(scope="module")
def lex():
    return SentimentLexicon.load()


@pytest.fixture(scope="module")
def emo():
    return EmotionLexicon.load()


class TestTokenize:
    def test_empty(self):
        assert tokenize("") == []

    def test_strips_trailing_punctuation(self):
        assert tokenize("Great food!!") == ["Great", "food"]

    def test_plain_words(self):
        assert tokenize("not good") == ["not", "good"]

    def test_preserves_case(self):
        assert tokenize("GREAT food") == ["GREAT", "food"]

    def test_short_tokens_keep_emoticons(self):
        assert tokenize("see you :)") == ["see", "you", ":)"]

    def test_interior_punctuation_kept(self):
        assert tokenize("well-known spot.") == ["well-known", "spot"]


class TestCompound:
    def test_empty_text(self, lex):
        assert compound_sentiment(lex, "") == 0.0

    def test_lexicon_miss_is_exactly_zero(self, lex):
        assert compound_sentiment(lex, "the table by the window") == 0.0

    def test_canonical_sentence(self, lex):
        # Pre-scored by the reference tool; smart+handsome+funny = 5.8.
        assert compound_sentiment(lex, "VADER is smart, handsome, and funny.") == 0.8316

    def test_single_word_normalization(self, lex):
        value = lex.entries["good"]
        expected = round(value / math.sqrt(value * value + 15), 4)
        assert compound_sentiment(lex, "good") == expected

    def test_negation_flips_and_scales(self, lex):
        good = lex.entries["good"]
        expected = round((good * -0.74) / math.sqrt((good * 0.74) ** 2 + 15), 4)
        assert compound_sentiment(lex, "not good") == expected

    def test_negation_window_reaches_three_tokens(self, lex):
        assert compound_sentiment(lex, "not very tasty at") < 0

    def test_polarity_flip_strictly_decreases(self, lex):
        for word in ("good", "great", "tasty", "friendly"):
            assert compound_sentiment(lex, f"not {word}") < compound_sentiment(lex, word)

    def test_booster_amplifies(self, lex):
        assert compound_sentiment(lex, "very good") > compound_sentiment(lex, "good")

    def test_dampener_attenuates(self, lex):
        assert compound_sentiment(lex, "slightly good") < compound_sentiment(lex, "good")

    def test_caps_emphasis(self, lex):
        assert compound_sentiment(lex, "GREAT food") > compound_sentiment(lex, "great food")

    def test_all_caps_text_gets_no_emphasis(self, lex):
        assert compound_sentiment(lex, "GREAT FOOD") == compound_sentiment(lex, "great food")

    def test_exclamation_emphasis_caps_at_three(self, lex):
        one = compound_sentiment(lex, "good!")
        three = compound_sentiment(lex, "good!!!")
        four = compound_sentiment(lex, "good!!!!")
        assert one < three
        assert three == four

    def test_exclamation_pushes_in_sum_direction(self, lex):
        assert compound_sentiment(lex, "bad!!") < compound_sentiment(lex, "bad")

    def test_oracle_corpus_within_tolerance(self, lex):
        rows = load_oracle_corpus()
        assert len(rows) == 50
        errors = [abs(expected - compound_sentiment(lex, sentence))
                  for expected, sentence in rows]
        assert sum(errors) / len(errors) <= 0.05

    def test_bounds(self, lex):
        big = " ".join(["amazing"] * 80)
        assert compound_sentiment(lex, big) <= 1.0
        assert compound_sentiment(lex, " ".join(["horrible"] * 80)) >= -1.0

    @given(st.lists(st.sampled_from(
        ["good", "bad", "great", "boring", "tasty", "menu", "slow", "lovely"]),
        min_size=1, max_size=8))
    @settings(max_examples=200)
    def test_repetition_never_attenuates(self, lex, words):
        text = " ".join(words)
        single = compound_sentiment(lex, text)
        doubled = compound_sentiment(lex, text + " " + text)
        # Plain-word texts double their valence sum; |normalize| is
        # monotone in |sum|. Rounding to 4 decimals costs at most 1e-4.
        assert abs(doubled) >= abs(single) - 1e-4


class TestEmotion:
    def test_empty(self, emo):
        assert emotion_vector(emo, "") == EmotionVector()

    def test_frequency_normalization(self, emo):
        v = emotion_vector(emo, "happy smile sad fear")
        assert v == EmotionVector(happy=0.5, surprise=0, angry=0, sad=0.25, fear=0.25)

    def test_lexicon_miss(self, emo):
        assert emotion_vector(emo, "table window door") == EmotionVector()

    def test_components_sum_to_one_when_any_hit(self, emo):
        v = emotion_vector(emo, "angry angry surprised")
        total = v.happy + v.surprise + v.angry + v.sad + v.fear
        assert total == pytest.approx(1.0)

    def test_score_is_pes_minus_nes(self):
        assert emotion_score(EmotionVector(0.5, 0.2, 0.1, 0.3, 0.0)) == pytest.approx(0.2)

    def test_score_zero_vector(self):
        assert emotion_score(EmotionVector()) == 0.0

    def test_score_symmetric_max(self):
        assert emotion_score(EmotionVector(0, 1, 0, 0, 1)) == 0.0

    def test_component_out_of_range_rejected(self):
        with pytest.raises(LexiconError):
            EmotionVector(happy=1.5)


class TestFuse:
    def test_weighted_fusion(self):
        assert fuse_affect(0.5, 0.25, 0.6, 0.4).fused == pytest.approx(0.4)

    def test_sentiment_only_mode(self):
        score = fuse_affect(0.21, 0.9, 1.0, 0.0)
        assert score.fused == pytest.approx(0.21)

    def test_zero_inputs(self):
        assert fuse_affect(0.0, 0.0).fused == 0.0

    def test_invalid_weights_rejected(self):
        with pytest.raises(LexiconError, match="invalid affect weights"):
            fuse_affect(0.5, 0.5, 0.7, 0.4)
        with pytest.raises(LexiconError, match="invalid affect weights"):
            fuse_affect(0.5, 0.5, -0.2, 1.2)

    @given(st.floats(-1, 1), st.floats(-1, 1), st.floats(0, 1))
    @settings(max_examples=200)
    def test_linear_and_bounded(self, s, e, alpha):
        score = fuse_affect(s, e, alpha, 1.0 - alpha)
        assert -1.0 <= score.fused <= 1.0
        assert score.fused == pytest.approx(alpha * s + (1 - alpha) * e, abs=1e-9)
