"""Group decision-making with fuzzy preference fusion and consensus measurement."""

__version__ = "0.1.0"

from .affect import (AffectScore, EmotionLexicon, EmotionVector,
                     SentimentLexicon, compound_sentiment, emotion_score,
                     emotion_vector, fuse_affect, tokenize)
from .consensus import (ConsensusReport, ConsensusThresholds,
                        classify_consensus, compute_iqr, feedback_score,
                        load_feedback_fis)
from .fuzzy import (FuzzyError, LinguisticVariable, Rule, RuleBase,
                    TrapezoidMF, infer, membership)
from .pipeline import Ranking, load_preference_fis, rank, total_preference
from .preferences import (Alternative, Assessment, Direction, FeatureSpec,
                          PreferenceMatrix, aggregate, normalize_features,
                          raw_preference, scale_preference)
from .session import AffectConfig, Engines, Phase, Session

__all__ = [
    "AffectConfig", "AffectScore", "Alternative", "Assessment",
    "ConsensusReport", "ConsensusThresholds", "Direction", "EmotionLexicon",
    "EmotionVector", "Engines", "FeatureSpec", "FuzzyError",
    "LinguisticVariable", "Phase", "PreferenceMatrix", "Ranking", "Rule",
    "RuleBase", "Session", "SentimentLexicon", "TrapezoidMF", "aggregate",
    "classify_consensus", "compound_sentiment", "compute_iqr",
    "emotion_score", "emotion_vector", "feedback_score", "fuse_affect",
    "infer", "load_feedback_fis", "load_preference_fis", "membership",
    "normalize_features", "rank", "raw_preference", "scale_preference",
    "tokenize", "total_preference",
]
