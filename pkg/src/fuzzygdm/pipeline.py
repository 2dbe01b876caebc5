"""Total-preference scoring and ranking of alternatives.

Feeds each alternative's collective voting preference (0-100) and
collective sentiment preference (-1..1) through the 15-rule preference
inference system and sorts by the resulting total preference (0-10).
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path

from . import fisconfig
from .fuzzy import RuleBase, infer

_DATA_DIR = Path(__file__).parent / "data"

VOTING_INPUT = "votingPreference"
SENTIMENT_INPUT = "sentimentPreference"


class PipelineError(ValueError):
    pass


@dataclass(frozen=True)
class Ranking:
    ordered: tuple[tuple[str, float], ...]

    @property
    def top_ranked(self) -> str:
        return self.ordered[0][0]


def load_preference_fis(path=None) -> RuleBase:
    """The shipped calibration, or an override in the same file format."""
    rb = fisconfig.load(path or _DATA_DIR / "preference_fis.fis")
    missing = {VOTING_INPUT, SENTIMENT_INPUT} - set(rb.input_names)
    if missing:
        raise PipelineError(f"preference FIS lacks inputs: {sorted(missing)}")
    return rb


def total_preference(fis: RuleBase, voting: float, sentiment: float) -> float:
    """Crisp total preference in [0, 10]; inputs clamp to their universes."""
    return infer(fis, {VOTING_INPUT: voting, SENTIMENT_INPUT: sentiment})


def rank(totals: dict[str, float]) -> Ranking:
    """Descending by total preference, ties broken by ascending id."""
    if not totals:
        raise PipelineError("nothing to rank")
    ordered = sorted(totals.items(), key=lambda item: (-item[1], item[0]))
    return Ranking(tuple(ordered))
