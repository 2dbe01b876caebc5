"""Post-decision feedback scoring and IQR-based consensus classification.

Each participant's agreement and confidence (both 0-10) run through the
nine-rule feedback inference system; the interquartile range of the
resulting scores classifies the panel's consensus level.
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path

from . import fisconfig
from .fuzzy import RuleBase, infer

_DATA_DIR = Path(__file__).parent / "data"

AGREEMENT_INPUT = "agreement"
CONFIDENCE_INPUT = "confidence"

HIGH_MAX_DEFAULT = 2.0
MEDIUM_MAX_DEFAULT = 4.0


class ConsensusError(ValueError):
    pass


@dataclass(frozen=True)
class ConsensusThresholds:
    high_max: float = HIGH_MAX_DEFAULT
    medium_max: float = MEDIUM_MAX_DEFAULT

    def __post_init__(self):
        if not 0 <= self.high_max <= self.medium_max:
            raise ConsensusError(
                f"invalid thresholds: high_max={self.high_max}, "
                f"medium_max={self.medium_max}"
            )


@dataclass(frozen=True)
class ConsensusReport:
    scores: tuple[float, ...]
    q1: float
    q3: float
    iqr: float
    level: str  # "High" | "Medium" | "None"
    notes: tuple[str, ...] = ()


def load_feedback_fis(path=None) -> RuleBase:
    rb = fisconfig.load(path or _DATA_DIR / "feedback_fis.fis")
    missing = {AGREEMENT_INPUT, CONFIDENCE_INPUT} - set(rb.input_names)
    if missing:
        raise ConsensusError(f"feedback FIS lacks inputs: {sorted(missing)}")
    return rb


def feedback_score(fis: RuleBase, agreement: float, confidence: float) -> float:
    """Fuzzy feedback score in [0, 10] for one participant's (al, cl) pair."""
    if not 0 <= agreement <= 10 or not 0 <= confidence <= 10:
        raise ConsensusError(
            f"feedback out of range: agreement={agreement}, confidence={confidence}"
        )
    return infer(fis, {AGREEMENT_INPUT: agreement, CONFIDENCE_INPUT: confidence})


def compute_iqr(scores: list[float]) -> tuple[float, float, float]:
    """(Q1, Q3, IQR) with linearly interpolated quantiles.

    For sorted scores s_0..s_{n-1}, quantile q sits at position
    h = q*(n-1) and interpolates between the neighbouring order
    statistics.
    """
    if len(scores) < 2:
        raise ConsensusError("insufficient feedback: need at least 2 scores")

    ordered = sorted(scores)

    def quantile(q: float) -> float:
        h = q * (len(ordered) - 1)
        lo = int(h)
        frac = h - lo
        if frac == 0.0:
            return ordered[lo]
        return ordered[lo] + frac * (ordered[lo + 1] - ordered[lo])

    q1, q3 = quantile(0.25), quantile(0.75)
    return q1, q3, q3 - q1


def classify_consensus(iqr: float,
                       thresholds: ConsensusThresholds | None = None) -> str:
    """High for IQR <= high_max, Medium up to medium_max, else None.

    The boundary value sits in the higher band (2.0 classifies High).
    """
    if iqr < 0:
        raise ConsensusError(f"negative IQR {iqr}")
    t = thresholds or ConsensusThresholds()
    if iqr <= t.high_max:
        return "High"
    if iqr <= t.medium_max:
        return "Medium"
    return "None"


def consensus_report(fis: RuleBase,
                     entries: list[tuple[float, float]],
                     thresholds: ConsensusThresholds | None = None) -> ConsensusReport:
    """Score every (agreement, confidence) pair and classify the spread."""
    scores = tuple(feedback_score(fis, al, cl) for al, cl in entries)
    q1, q3, iqr = compute_iqr(list(scores))
    level = classify_consensus(iqr, thresholds)
    notes = ()
    t = thresholds or ConsensusThresholds()
    # The High/Medium boundary is ambiguous in [2.00, 2.01): the inclusive
    # band puts 2.0 in High while a strict reading would say Medium, and
    # values just above 2.0 fall between the published bands. Surface it.
    if t.high_max == HIGH_MAX_DEFAULT and t.high_max <= iqr < 2.01:
        notes = (f"IQR {iqr:.4f} lies in the ambiguous boundary zone "
                 f"[2.00, 2.01); classified {level}",)
    return ConsensusReport(scores, q1, q3, iqr, level, notes)
