"""Voting preferences: feature normalization, per-expert scores, aggregation.

Continuous features are booleanized against the panel mean (direction
configurable per feature), binary features pass through. Each expert's
raw preference for an alternative is the dot product of the boolean
feature vector with their {-1, 0, 1} assessment, scaled onto [0, 100]
as 50 + 10 * raw, then aggregated across the panel by weighted mean.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass, field
from enum import Enum


class PreferenceError(ValueError):
    """Raised for malformed features, assessments, or aggregation input."""


class Direction(str, Enum):
    ABOVE_MEAN = "above-mean-favorable"
    BELOW_MEAN = "below-mean-favorable"


@dataclass(frozen=True)
class FeatureSpec:
    id: str
    kind: str  # "continuous" | "binary"
    direction: Direction | None = None

    def __post_init__(self):
        if self.kind not in ("continuous", "binary"):
            raise PreferenceError(f"feature {self.id!r}: unknown kind {self.kind!r}")
        if self.kind == "binary" and self.direction is not None:
            raise PreferenceError(f"feature {self.id!r}: binary features carry no direction")
        if self.kind == "continuous" and self.direction is None:
            raise PreferenceError(f"feature {self.id!r}: continuous features need a direction")


@dataclass(frozen=True)
class Alternative:
    id: str
    label: str = ""
    feature_values: dict[str, float] = field(default_factory=dict)


@dataclass(frozen=True)
class Assessment:
    participant: str
    values: dict[str, int]


@dataclass(frozen=True)
class PreferenceMatrix:
    """Per-(participant, alternative) preference cells plus panel aggregates."""

    participants: tuple[str, ...]
    alternatives: tuple[str, ...]
    raw: dict[tuple[str, str], int]
    scaled: dict[tuple[str, str], float]
    collective_voting: dict[str, float]
    collective_sentiment: dict[str, float]
    weights: dict[str, float]


def normalize_features(features: list[FeatureSpec],
                       alternatives: list[Alternative]) -> dict[str, list[int]]:
    """Boolean feature matrix keyed by alternative id.

    Continuous features map to 1 only strictly on the favorable side of
    the mean across alternatives (values at the mean map to 0); binary
    features pass through unchanged.
    """
    if not alternatives:
        raise PreferenceError("no alternatives to normalize")
    for alt in alternatives:
        for spec in features:
            if spec.id not in alt.feature_values:
                raise PreferenceError(
                    f"incomplete alternative {alt.id!r}: missing {spec.id!r}"
                )
    matrix: dict[str, list[int]] = {alt.id: [] for alt in alternatives}
    for spec in features:
        column = [alt.feature_values[spec.id] for alt in alternatives]
        if spec.kind == "binary":
            for alt, value in zip(alternatives, column):
                if value not in (0, 1):
                    raise PreferenceError(
                        f"alternative {alt.id!r}: binary feature {spec.id!r} "
                        f"has value {value!r}"
                    )
                matrix[alt.id].append(int(value))
            continue
        mean = sum(column) / len(column)
        if len(set(column)) == 1:
            warnings.warn(
                f"feature {spec.id!r}: all alternatives share value "
                f"{column[0]!r}; column normalizes to zero",
                stacklevel=2,
            )
        for alt, value in zip(alternatives, column):
            if spec.direction is Direction.ABOVE_MEAN:
                matrix[alt.id].append(1 if value > mean else 0)
            else:
                matrix[alt.id].append(1 if value < mean else 0)
    return matrix


def raw_preference(feature_vector: list[int], assessment: list[int]) -> int:
    """Dot product of booleanized features with one expert's {-1,0,1} votes."""
    if len(feature_vector) != len(assessment):
        raise PreferenceError(
            f"length mismatch: {len(feature_vector)} features vs "
            f"{len(assessment)} assessment values"
        )
    for z in assessment:
        if z not in (-1, 0, 1):
            raise PreferenceError(f"invalid assessment value {z!r}")
    return sum(f * z for f, z in zip(feature_vector, assessment))


def scale_preference(raw: int) -> float:
    """Affine map raw -> 50 + 10*raw, clamped to [0, 100]."""
    return min(100.0, max(0.0, 50.0 + 10.0 * raw))


def aggregate(features: list[FeatureSpec],
              alternatives: list[Alternative],
              assessments: list[Assessment],
              sentiments: dict[tuple[str, str], float] | None = None,
              weights: dict[str, float] | None = None) -> PreferenceMatrix:
    """Panel-weighted collective voting and sentiment preferences.

    ``sentiments`` maps (participant, alternative id) to a fused affect
    value; participants without a scored message about an alternative
    contribute a neutral 0. Weights default to the uniform 1/m panel.
    """
    if not assessments:
        raise PreferenceError("empty panel")
    participants = tuple(a.participant for a in assessments)
    if len(set(participants)) != len(participants):
        raise PreferenceError("duplicate assessments in panel")
    if weights is None:
        weights = {p: 1.0 / len(participants) for p in participants}
    else:
        if set(weights) != set(participants):
            raise PreferenceError("weights must cover exactly the panel")
        if any(w < 0 for w in weights.values()):
            raise PreferenceError("weights must be non-negative")
        if abs(sum(weights.values()) - 1.0) > 1e-9:
            raise PreferenceError("weights must sum to 1")
    sentiments = sentiments or {}

    feature_order = [spec.id for spec in features]
    for a in assessments:
        if set(a.values) != set(feature_order):
            raise PreferenceError(
                f"assessment of {a.participant!r} does not cover the feature set"
            )
    boolean = normalize_features(features, alternatives)
    raw: dict[tuple[str, str], int] = {}
    scaled: dict[tuple[str, str], float] = {}
    voting: dict[str, float] = {}
    sentiment: dict[str, float] = {}
    for alt in alternatives:
        v_total = 0.0
        s_total = 0.0
        for a in assessments:
            z = [a.values[f] for f in feature_order]
            r = raw_preference(boolean[alt.id], z)
            raw[(a.participant, alt.id)] = r
            scaled[(a.participant, alt.id)] = scale_preference(r)
            v_total += weights[a.participant] * scaled[(a.participant, alt.id)]
            s_total += weights[a.participant] * sentiments.get(
                (a.participant, alt.id), 0.0)
        voting[alt.id] = v_total
        sentiment[alt.id] = s_total
    return PreferenceMatrix(
        participants=participants,
        alternatives=tuple(alt.id for alt in alternatives),
        raw=raw,
        scaled=scaled,
        collective_voting=voting,
        collective_sentiment=sentiment,
        weights=dict(weights),
    )
