"""Mamdani fuzzy inference over trapezoidal membership functions.

The engine is deliberately small: linguistic variables hold named
trapezoids on a closed universe, rule bases pair complete AND-rule
tables with a single output variable, and inference is classic
min/max Mamdani with centroid defuzzification over a uniformly
sampled output universe.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping, Sequence

import numpy as np

_trapezoid_rule = getattr(np, "trapezoid", None) or np.trapz

DEFAULT_RESOLUTION = 1000


class FuzzyError(ValueError):
    """Raised for invalid fuzzy vocabulary, rules, or inference inputs."""


@dataclass(frozen=True)
class TrapezoidMF:
    """Trapezoid with breakpoints a <= b <= c <= d.

    Degenerate shapes are allowed: a == b gives a vertical left edge,
    c == d a vertical right edge, b == c a triangle.
    """

    a: float
    b: float
    c: float
    d: float

    def __post_init__(self):
        if not (self.a <= self.b <= self.c <= self.d):
            raise FuzzyError(
                f"trapezoid breakpoints out of order: "
                f"({self.a}, {self.b}, {self.c}, {self.d})"
            )

    def __call__(self, x: float) -> float:
        return membership(self, x)

    def sample(self, xs: np.ndarray) -> np.ndarray:
        """Vectorized membership over a grid of points."""
        left = np.ones_like(xs) if self.a == self.b else (xs - self.a) / (self.b - self.a)
        right = np.ones_like(xs) if self.c == self.d else (self.d - xs) / (self.d - self.c)
        inside = (xs >= self.a) & (xs <= self.d)
        return np.where(inside, np.clip(np.minimum(left, right), 0.0, 1.0), 0.0)

    @property
    def support(self) -> tuple[float, float, bool, bool]:
        """(start, end, start_closed, end_closed) of the set {x : mu(x) > 0}."""
        return (self.a, self.d, self.a == self.b, self.c == self.d)


def membership(mf: TrapezoidMF, x: float) -> float:
    """Degree of membership of ``x``, per the standard trapezoid formula.

    Vertical edges (a == b or c == d) evaluate to 1 on the plateau side
    of the edge and 0 beyond it; outside [a, d] the degree is 0.
    """
    if x < mf.a or x > mf.d:
        return 0.0
    left = 1.0 if mf.a == mf.b else (x - mf.a) / (mf.b - mf.a)
    right = 1.0 if mf.c == mf.d else (mf.d - x) / (mf.d - mf.c)
    return max(min(left, 1.0, right), 0.0)


@dataclass(frozen=True)
class LinguisticVariable:
    name: str
    universe: tuple[float, float]
    terms: dict[str, TrapezoidMF]

    def __post_init__(self):
        lo, hi = self.universe
        if not lo < hi:
            raise FuzzyError(f"variable {self.name!r}: empty universe [{lo}, {hi}]")
        if not self.terms:
            raise FuzzyError(f"variable {self.name!r}: no terms")
        for label, mf in self.terms.items():
            if mf.a < lo or mf.d > hi:
                raise FuzzyError(
                    f"variable {self.name!r}: term {label!r} leaves the universe"
                )
        self._check_coverage()

    def _check_coverage(self) -> None:
        # Exact interval-union argument over the open/closed supports:
        # every x in [lo, hi] must have mu(x) > 0 for at least one term.
        lo, hi = self.universe
        supports = sorted(
            (mf.support for mf in self.terms.values()), key=lambda s: (s[0], not s[2])
        )
        start, end, start_closed, end_closed = supports[0]
        if start > lo or (start == lo and not start_closed):
            raise FuzzyError(f"variable {self.name!r}: universe not covered at {lo}")
        covered_end, covered_closed = end, end_closed
        for start, end, start_closed, end_closed in supports[1:]:
            if covered_end >= hi and (covered_closed or covered_end > hi):
                break
            if start > covered_end or (
                start == covered_end and not (start_closed or covered_closed)
            ):
                raise FuzzyError(
                    f"variable {self.name!r}: coverage gap at {covered_end}"
                )
            if end > covered_end or (end == covered_end and end_closed):
                covered_end, covered_closed = end, end_closed
        if covered_end < hi or (covered_end == hi and not covered_closed):
            raise FuzzyError(f"variable {self.name!r}: universe not covered at {hi}")

    def clamp(self, x: float) -> float:
        lo, hi = self.universe
        return min(max(x, lo), hi)


@dataclass(frozen=True)
class Rule:
    """IF all antecedents hold THEN the consequent holds (AND-combined)."""

    antecedents: tuple[tuple[str, str], ...]
    consequent: tuple[str, str]


@dataclass(frozen=True)
class RuleBase:
    inputs: tuple[LinguisticVariable, ...]
    output: LinguisticVariable
    rules: tuple[Rule, ...]
    resolution: int = DEFAULT_RESOLUTION
    name: str | None = None
    _grid: np.ndarray = field(init=False, repr=False, compare=False)
    _consequent_samples: dict = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        by_name = {v.name: v for v in self.inputs}
        if len(by_name) != len(self.inputs):
            raise FuzzyError("duplicate input variable names")
        seen: set[tuple] = set()
        for rule in self.rules:
            for var, term in rule.antecedents:
                if var not in by_name:
                    raise FuzzyError(f"rule references unknown variable {var!r}")
                if term not in by_name[var].terms:
                    raise FuzzyError(f"rule references unknown term {var}.{term}")
            cvar, cterm = rule.consequent
            if cvar != self.output.name:
                raise FuzzyError(f"rule concludes on {cvar!r}, not the output")
            if cterm not in self.output.terms:
                raise FuzzyError(f"rule references unknown output term {cterm!r}")
            key = tuple(sorted(rule.antecedents))
            if key in seen:
                raise FuzzyError(f"duplicate rule for antecedents {key}")
            seen.add(key)
        expected = 1
        for v in self.inputs:
            expected *= len(v.terms)
        if len(self.rules) != expected:
            raise FuzzyError(
                f"rule base incomplete: {len(self.rules)} rules, "
                f"{expected} input-term combinations"
            )
        lo, hi = self.output.universe
        grid = np.linspace(lo, hi, self.resolution)
        object.__setattr__(self, "_grid", grid)
        object.__setattr__(
            self,
            "_consequent_samples",
            {label: mf.sample(grid) for label, mf in self.output.terms.items()},
        )

    @property
    def input_names(self) -> tuple[str, ...]:
        return tuple(v.name for v in self.inputs)


def infer(rb: RuleBase, inputs: Mapping[str, float]) -> float:
    """Crisp Mamdani output for one crisp value per input variable.

    Inputs are clamped to their universes, antecedents combine by
    minimum, each rule clips its consequent at the antecedent strength,
    rules aggregate by pointwise maximum, and the aggregate is
    defuzzified by centroid over the sampled output universe.
    """
    memberships: dict[str, dict[str, float]] = {}
    for var in rb.inputs:
        if var.name not in inputs:
            raise FuzzyError(f"incomplete inputs: missing {var.name!r}")
        x = var.clamp(float(inputs[var.name]))
        memberships[var.name] = {t: membership(mf, x) for t, mf in var.terms.items()}

    # One clip level per output term: max strength over the rules that use it.
    clip: dict[str, float] = {}
    for rule in rb.rules:
        strength = min(memberships[var][term] for var, term in rule.antecedents)
        label = rule.consequent[1]
        if strength > clip.get(label, 0.0):
            clip[label] = strength
    if not clip:
        raise FuzzyError("no rule fired")

    aggregate = np.zeros_like(rb._grid)
    for label, strength in clip.items():
        np.maximum(aggregate, np.minimum(rb._consequent_samples[label], strength),
                   out=aggregate)
    area = float(_trapezoid_rule(aggregate, rb._grid))
    if area == 0.0:
        raise FuzzyError("no rule fired")
    return float(_trapezoid_rule(rb._grid * aggregate, rb._grid) / area)
