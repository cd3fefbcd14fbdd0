"""
DebtDyn - Test Fixtures and Utilities
Shared scenarios, multipliers and random scenario generators
"""

import random
from pathlib import Path

import pytest

from debtdyn.domain.types import MultiplierSpec, PerturbationSet, RatePair, Scenario

BACKEND_DIR = Path(__file__).resolve().parent.parent
SCENARIO_DIR = BACKEND_DIR / "scenarios"
FIXTURE_DIR = Path(__file__).resolve().parent / "fixtures"


class ScenarioGenerator:
    """Generate randomized but valid scenarios and perturbation sets"""

    def __init__(self, seed: int):
        self.rng = random.Random(seed)

    def scenario(self, max_horizon: int = 50) -> Scenario:
        horizon = self.rng.randint(1, max_horizon)
        rates = [
            RatePair(self.rng.uniform(-0.05, 0.08), self.rng.uniform(-0.05, 0.08))
            for _ in range(horizon)
        ]
        x_nom = [self.rng.uniform(-0.05, 0.05) for _ in range(horizon)]
        return Scenario(d0=self.rng.uniform(0.0, 2.0), horizon=horizon, rates=tuple(rates), x_nom=tuple(x_nom))

    def perturbations(self, horizon: int, max_shocks: int = 5, size: float = 0.01) -> PerturbationSet:
        count = self.rng.randint(0, min(max_shocks, horizon))
        periods = self.rng.sample(range(1, horizon + 1), count)
        return PerturbationSet.from_pairs((t, self.rng.uniform(-size, size)) for t in periods)

    def eta(self) -> float:
        return self.rng.uniform(0.0, 2.5)


@pytest.fixture
def ten_year_scenario() -> Scenario:
    """Debt 100% of GDP, r = 3%, g = 2%, surplus 2%, ten years (ratio units)"""
    return Scenario.constant(d0=1.0, horizon=10, r=0.03, g_nom=0.02, x_nom=0.02)


@pytest.fixture
def eta_two() -> MultiplierSpec:
    return MultiplierSpec(2.0)


@pytest.fixture
def shock_year1() -> PerturbationSet:
    return PerturbationSet.single(1, 0.01)


@pytest.fixture
def shock_year4() -> PerturbationSet:
    return PerturbationSet.single(4, -0.01)


@pytest.fixture
def no_shock() -> PerturbationSet:
    return PerturbationSet()


@pytest.fixture
def generator() -> ScenarioGenerator:
    return ScenarioGenerator(seed=20240607)


@pytest.fixture
def scenario_path():
    """Path of a checked-in scenario file"""
    def _path(name: str) -> Path:
        return SCENARIO_DIR / name
    return _path


@pytest.fixture
def fixture_path():
    """Path of a test-only scenario document"""
    def _path(name: str) -> Path:
        return FIXTURE_DIR / name
    return _path
