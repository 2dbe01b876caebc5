"""Lexicon-based sentiment and emotion scoring for chat messages.

The sentiment side follows the classic social-media valence heuristics:
token valences from a lexicon file, a three-token negation window
(factor -0.74), degree boosters (+/-0.293, damped with distance),
ALL-CAPS emphasis (0.733), trailing-exclamation emphasis (0.292 each,
capped at three), and sum normalization by sqrt(sum^2 + 15).

The emotion side is a frequency-normalized keyword count over five
categories; the combined emotion score is max(happy, surprise) minus
max(angry, sad, fear).
"""

from __future__ import annotations

import math
import string
from dataclasses import dataclass
from pathlib import Path

NEGATION_SCALAR = -0.74
CAPS_BOOST = 0.733
BANG_BOOST = 0.292
MAX_BANGS = 3
NORMALIZATION = 15.0
BOOST_INCR = 0.293
BOOST_DECR = -0.293

EMOTIONS = ("happy", "surprise", "angry", "sad", "fear")

NEGATORS = frozenset([
    "aint", "arent", "cannot", "cant", "couldnt", "darent", "didnt", "doesnt",
    "ain't", "aren't", "can't", "couldn't", "daren't", "didn't", "doesn't",
    "dont", "hadnt", "hasnt", "havent", "isnt", "mightnt", "mustnt", "neither",
    "don't", "hadn't", "hasn't", "haven't", "isn't", "mightn't", "mustn't",
    "neednt", "needn't", "never", "none", "nope", "nor", "not", "nothing",
    "nowhere", "oughtnt", "shant", "shouldnt", "oughtn't", "shan't",
    "shouldn't", "uhuh", "wasnt", "werent", "uh-uh", "wasn't", "weren't",
    "without", "wont", "wouldnt", "won't", "wouldn't", "rarely", "seldom",
    "despite",
])

BOOSTERS = {
    "absolutely": BOOST_INCR, "amazingly": BOOST_INCR, "awfully": BOOST_INCR,
    "completely": BOOST_INCR, "considerable": BOOST_INCR,
    "considerably": BOOST_INCR, "decidedly": BOOST_INCR, "deeply": BOOST_INCR,
    "enormous": BOOST_INCR, "enormously": BOOST_INCR, "entirely": BOOST_INCR,
    "especially": BOOST_INCR, "exceptional": BOOST_INCR,
    "exceptionally": BOOST_INCR, "extreme": BOOST_INCR, "extremely": BOOST_INCR,
    "fabulously": BOOST_INCR, "fully": BOOST_INCR, "greatly": BOOST_INCR,
    "hella": BOOST_INCR, "highly": BOOST_INCR, "hugely": BOOST_INCR,
    "incredible": BOOST_INCR, "incredibly": BOOST_INCR, "intensely": BOOST_INCR,
    "major": BOOST_INCR, "majorly": BOOST_INCR, "more": BOOST_INCR,
    "most": BOOST_INCR, "particularly": BOOST_INCR, "purely": BOOST_INCR,
    "quite": BOOST_INCR, "really": BOOST_INCR, "remarkably": BOOST_INCR,
    "so": BOOST_INCR, "substantially": BOOST_INCR, "thoroughly": BOOST_INCR,
    "total": BOOST_INCR, "totally": BOOST_INCR, "tremendous": BOOST_INCR,
    "tremendously": BOOST_INCR, "uber": BOOST_INCR, "unbelievably": BOOST_INCR,
    "unusually": BOOST_INCR, "utter": BOOST_INCR, "utterly": BOOST_INCR,
    "very": BOOST_INCR,
    "almost": BOOST_DECR, "barely": BOOST_DECR, "hardly": BOOST_DECR,
    "kinda": BOOST_DECR, "kindof": BOOST_DECR, "kind-of": BOOST_DECR,
    "less": BOOST_DECR, "little": BOOST_DECR, "marginal": BOOST_DECR,
    "marginally": BOOST_DECR, "occasional": BOOST_DECR,
    "occasionally": BOOST_DECR, "partly": BOOST_DECR, "scarce": BOOST_DECR,
    "scarcely": BOOST_DECR, "slight": BOOST_DECR, "slightly": BOOST_DECR,
    "somewhat": BOOST_DECR, "sorta": BOOST_DECR, "sortof": BOOST_DECR,
    "sort-of": BOOST_DECR,
}

_DATA_DIR = Path(__file__).parent / "data"


class LexiconError(ValueError):
    """Raised for malformed lexicon files or invalid affect parameters."""


@dataclass(frozen=True)
class SentimentLexicon:
    entries: dict[str, float]
    boosters: dict[str, float]
    negators: frozenset[str]

    @classmethod
    def load(cls, path=None) -> "SentimentLexicon":
        path = Path(path) if path else _DATA_DIR / "sentiment_lexicon.tsv"
        entries = {}
        for lineno, line in enumerate(_read_lines(path), start=1):
            parts = line.split("\t")
            if len(parts) < 2:
                raise LexiconError(f"{path}:{lineno}: expected token<TAB>valence")
            token = parts[0].strip().lower()
            try:
                entries[token] = float(parts[1])
            except ValueError:
                raise LexiconError(
                    f"{path}:{lineno}: bad valence {parts[1]!r}"
                ) from None
        return cls(entries, dict(BOOSTERS), NEGATORS)


@dataclass(frozen=True)
class EmotionLexicon:
    entries: dict[str, str]

    @classmethod
    def load(cls, path=None) -> "EmotionLexicon":
        path = Path(path) if path else _DATA_DIR / "emotion_lexicon.tsv"
        entries = {}
        for lineno, line in enumerate(_read_lines(path), start=1):
            parts = line.split("\t")
            if len(parts) < 2:
                raise LexiconError(f"{path}:{lineno}: expected token<TAB>label")
            token, label = parts[0].strip().lower(), parts[1].strip().lower()
            if label not in EMOTIONS:
                raise LexiconError(f"{path}:{lineno}: unknown emotion {label!r}")
            entries[token] = label
        return cls(entries)


def _read_lines(path):
    with open(path, encoding="utf-8") as fh:
        for line in fh:
            line = line.rstrip("\n")
            if line and not line.startswith("#"):
                yield line


@dataclass(frozen=True)
class EmotionVector:
    happy: float = 0.0
    surprise: float = 0.0
    angry: float = 0.0
    sad: float = 0.0
    fear: float = 0.0

    def __post_init__(self):
        for name in EMOTIONS:
            v = getattr(self, name)
            if not 0.0 <= v <= 1.0:
                raise LexiconError(f"emotion component {name}={v} outside [0,1]")


@dataclass(frozen=True)
class AffectScore:
    sentiment: float
    emotion: float
    fused: float
    alpha: float
    beta: float


def tokenize(text: str) -> list[str]:
    """Whitespace tokens with leading/trailing punctuation stripped.

    Tokens that would shrink to two characters or fewer keep their
    original form so emoticons like ":)" survive. Case is preserved;
    scoring lowercases on its own.
    """
    tokens = []
    for raw in text.split():
        stripped = raw.strip(string.punctuation)
        tokens.append(raw if len(stripped) <= 2 else stripped)
    return tokens


def _allcap_differential(words: list[str]) -> bool:
    upper = sum(1 for w in words if w.isupper())
    return 0 < len(words) - upper < len(words)


def _is_negator(token: str) -> bool:
    return token in NEGATORS or "n't" in token


def _booster_scalar(word: str, lower: str, valence: float, cap_diff: bool,
                    boosters: dict[str, float]) -> float:
    scalar = boosters.get(lower, 0.0)
    if scalar == 0.0:
        return 0.0
    if valence < 0:
        scalar = -scalar
    if word.isupper() and cap_diff:
        scalar += CAPS_BOOST if valence > 0 else -CAPS_BOOST
    return scalar


def _trailing_bangs(text: str) -> int:
    count = 0
    for ch in reversed(text.rstrip()):
        if ch == "!":
            count += 1
        else:
            break
    return count


def compound_sentiment(lex: SentimentLexicon, text: str) -> float:
    """Normalized sentiment in [-1, 1], rounded to four decimals.

    Texts with no scored tokens come out exactly 0.0.
    """
    words = tokenize(text)
    lower = [w.lower() for w in words]
    cap_diff = _allcap_differential(words)
    entries = lex.entries

    scored = False
    total = 0.0
    for i, (word, wl) in enumerate(zip(words, lower)):
        if wl in lex.boosters or wl not in entries:
            continue
        scored = True
        valence = entries[wl]
        # "no" right before a scored word acts as its negator, not as a
        # scored token of its own.
        if wl == "no" and i + 1 < len(lower) and lower[i + 1] in entries:
            valence = 0.0
        elif (
            (i > 0 and lower[i - 1] == "no")
            or (i > 1 and lower[i - 2] == "no")
            or (i > 2 and lower[i - 3] == "no" and lower[i - 1] in ("or", "nor"))
        ):
            valence = entries[wl] * NEGATION_SCALAR
        if word.isupper() and cap_diff:
            valence += CAPS_BOOST if valence > 0 else -CAPS_BOOST
        for dist in range(3):
            j = i - dist - 1
            if j < 0 or lower[j] in entries:
                continue
            scalar = _booster_scalar(words[j], lower[j], valence, cap_diff,
                                     lex.boosters)
            if dist == 1:
                scalar *= 0.95
            elif dist == 2:
                scalar *= 0.9
            valence += scalar
            if _is_negator(lower[j]):
                valence *= NEGATION_SCALAR
        total += valence

    if not scored or total == 0.0:
        return 0.0
    emphasis = min(_trailing_bangs(text), MAX_BANGS) * BANG_BOOST
    total += emphasis if total > 0 else -emphasis
    compound = total / math.sqrt(total * total + NORMALIZATION)
    return round(max(-1.0, min(1.0, compound)), 4)


def emotion_vector(lex: EmotionLexicon, text: str) -> EmotionVector:
    """Per-category share of emotion-labeled tokens; all zero without hits."""
    counts = dict.fromkeys(EMOTIONS, 0)
    for token in tokenize(text):
        label = lex.entries.get(token.lower())
        if label:
            counts[label] += 1
    hits = sum(counts.values())
    if hits == 0:
        return EmotionVector()
    return EmotionVector(**{k: v / hits for k, v in counts.items()})


def emotion_score(v: EmotionVector) -> float:
    positive = max(v.happy, v.surprise)
    negative = max(v.angry, v.sad, v.fear)
    return positive - negative


def fuse_affect(sentiment: float, emotion: float,
                alpha: float = 0.6, beta: float = 0.4) -> AffectScore:
    """Weighted fusion alpha*S + beta*E; (1, 0) is sentiment-only mode."""
    if alpha < 0 or beta < 0 or abs(alpha + beta - 1.0) > 1e-9:
        raise LexiconError(f"invalid affect weights: alpha={alpha}, beta={beta}")
    s = max(-1.0, min(1.0, sentiment))
    e = max(-1.0, min(1.0, emotion))
    fused = max(-1.0, min(1.0, alpha * s + beta * e))
    return AffectScore(s, e, fused, alpha, beta)


def score_text(sent_lex: SentimentLexicon, emo_lex: EmotionLexicon, text: str,
               alpha: float = 0.6, beta: float = 0.4) -> tuple[AffectScore, EmotionVector]:
    """Full per-message affect: compound, emotion vector, fused preference."""
    vec = emotion_vector(emo_lex, text)
    return fuse_affect(compound_sentiment(sent_lex, text),
                       emotion_score(vec), alpha, beta), vec
