"""Discrete-time screening-paradox simulation.

Each round a fraction ``screening_coverage`` of the population is tested;
diseased individuals are detected with probability ``sensitivity`` and a
fraction ``treatment_efficacy`` of those are removed from the diseased
pool.  No incidence, no reinfection, constant population, so prevalence
decays geometrically by ``1 - a * efficacy * coverage`` per round.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import TestCharacteristics, ppv
from .curvature import prevalence_threshold


@dataclass(frozen=True)
class ParadoxScenario:
    test: TestCharacteristics
    initial_prevalence: float
    treatment_efficacy: float
    screening_coverage: float
    rounds: int

    def __post_init__(self):
        if not (0.0 < self.initial_prevalence < 1.0):
            raise ValueError(
                f"initial_prevalence must lie in (0, 1), got {self.initial_prevalence!r}")
        for name in ("treatment_efficacy", "screening_coverage"):
            v = getattr(self, name)
            if not (0.0 <= v <= 1.0):
                raise ValueError(f"{name} must lie in [0, 1], got {v!r}")
        if isinstance(self.rounds, bool) or not isinstance(self.rounds, int) or self.rounds < 1:
            raise ValueError(f"rounds must be a positive integer, got {self.rounds!r}")

    @property
    def removal_rate(self) -> float:
        return self.test.a * self.treatment_efficacy * self.screening_coverage


@dataclass(frozen=True)
class TrajectoryPoint:
    round: int
    prevalence: float
    ppv: float


@dataclass(frozen=True)
class ParadoxTrajectory:
    series: tuple[TrajectoryPoint, ...]
    crossing_round: int | None
    threshold: float | None


def step(s: ParadoxScenario, phi: float) -> float:
    """Prevalence after one round of screening and treatment."""
    if not (0.0 <= phi <= 1.0):
        raise ValueError(f"prevalence must lie in [0, 1], got {phi!r}")
    return phi * (1.0 - s.removal_rate)


def run(s: ParadoxScenario) -> ParadoxTrajectory:
    threshold = prevalence_threshold(s.test)
    phi = s.initial_prevalence
    series = [TrajectoryPoint(0, phi, ppv(s.test, phi))]
    crossing = None
    if threshold is not None and phi < threshold:
        crossing = 0
    for r in range(1, s.rounds + 1):
        phi = step(s, phi)
        series.append(TrajectoryPoint(r, phi, ppv(s.test, phi)))
        if crossing is None and threshold is not None and phi < threshold:
            crossing = r
    return ParadoxTrajectory(tuple(series), crossing, threshold)
