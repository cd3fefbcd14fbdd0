"""
DebtDyn - Domain Types
Immutable value types shared by every engine

Units are dimensionless fractions throughout: d = 1.0 is a debt of 100% of GDP,
x = 0.02 is a primary surplus of 2% of GDP. Period 0 holds the initial
condition; periods 1..T carry rates and surpluses.
"""

from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping, Optional, Tuple

import numpy as np

from debtdyn.core.error_handling import ScenarioValidationError


@dataclass(frozen=True)
class RatePair:
    """Interest rate and nominal growth for one period"""
    r: float
    g_nom: float


@dataclass(frozen=True)
class Scenario:
    """The nominal plan: initial ratio, per-period rates and surpluses.

    Construction does not check invariants; run ``validate_scenario`` before
    handing a scenario to an engine.
    """
    d0: float
    horizon: int
    rates: Tuple[RatePair, ...]
    x_nom: Tuple[float, ...]

    def __post_init__(self):
        object.__setattr__(
            self,
            "rates",
            tuple(rate if isinstance(rate, RatePair) else RatePair(*rate) for rate in self.rates),
        )
        object.__setattr__(self, "x_nom", tuple(self.x_nom))

    @classmethod
    def constant(cls, d0: float, horizon: int, r: float, g_nom: float, x_nom: float) -> "Scenario":
        """Scenario with the same rates and surplus in every period"""
        return cls(
            d0=d0,
            horizon=horizon,
            rates=tuple(RatePair(r, g_nom) for _ in range(horizon)),
            x_nom=tuple(x_nom for _ in range(horizon)),
        )

    def rate(self, t: int) -> RatePair:
        return self.rates[t - 1]

    def surplus(self, t: int) -> float:
        return self.x_nom[t - 1]

    def periods(self) -> range:
        return range(1, self.horizon + 1)


@dataclass(frozen=True)
class MultiplierSpec:
    """The exogenous fiscal multiplier eta, constant across periods"""
    eta: float

    def __post_init__(self):
        if not np.isfinite(self.eta):
            raise ScenarioValidationError("multiplier not finite", f"eta={self.eta!r}", field="eta")
        if self.eta < 0:
            raise ScenarioValidationError("negative multiplier", f"eta={self.eta!r}", field="eta")


@dataclass(frozen=True)
class PerturbationSet:
    """Sparse map from period to surplus deviation dx_t"""
    entries: Tuple[Tuple[int, float], ...] = ()

    def __post_init__(self):
        items = self.entries.items() if isinstance(self.entries, Mapping) else self.entries
        seen = {}
        for t, dx in items:
            if int(t) in seen:
                raise ScenarioValidationError(
                    "duplicate perturbation at t", f"t={t}", period=int(t), field="perturbations"
                )
            seen[int(t)] = float(dx)
        object.__setattr__(self, "entries", tuple(sorted(seen.items())))

    @classmethod
    def from_pairs(cls, pairs: Iterable[Tuple[int, float]]) -> "PerturbationSet":
        """Build from (period, dx) pairs; a repeated period is an error"""
        return cls(tuple(pairs))

    @classmethod
    def single(cls, t: int, dx: float) -> "PerturbationSet":
        return cls(((t, dx),))

    def get(self, t: int) -> float:
        for period, dx in self.entries:
            if period == t:
                return dx
        return 0.0

    def periods(self) -> Tuple[int, ...]:
        return tuple(t for t, _ in self.entries)

    def scaled(self, factor: float) -> "PerturbationSet":
        return PerturbationSet(tuple((t, factor * dx) for t, dx in self.entries))

    def combined(self, other: "PerturbationSet") -> "PerturbationSet":
        """Sum of two perturbation sets; deviations in a shared period add"""
        total = dict(self.entries)
        for t, dx in other.entries:
            total[t] = total.get(t, 0.0) + dx
        return PerturbationSet(tuple(total.items()))

    def __len__(self) -> int:
        return len(self.entries)

    def __bool__(self) -> bool:
        return bool(self.entries)


@dataclass(frozen=True)
class Trajectory:
    """Debt ratios d_0..d_T"""
    d: Tuple[float, ...]

    def __post_init__(self):
        object.__setattr__(self, "d", tuple(self.d))

    @property
    def horizon(self) -> int:
        return len(self.d) - 1

    @property
    def terminal(self) -> float:
        return self.d[-1]

    def __getitem__(self, t: int) -> float:
        return self.d[t]

    def __len__(self) -> int:
        return len(self.d)

    def __iter__(self) -> Iterator[float]:
        return iter(self.d)

    def minus(self, baseline: "Trajectory") -> "DeltaTrajectory":
        """Elementwise deviation from a baseline trajectory"""
        return DeltaTrajectory(tuple(a - b for a, b in zip(self.d, baseline.d)))

    def as_array(self) -> np.ndarray:
        return np.asarray(self.d, dtype=np.float64)


@dataclass(frozen=True)
class DeltaTrajectory:
    """Deviations dd_0..dd_T from a nominal trajectory, dd_0 = 0"""
    delta_d: Tuple[float, ...]

    def __post_init__(self):
        object.__setattr__(self, "delta_d", tuple(self.delta_d))

    @property
    def horizon(self) -> int:
        return len(self.delta_d) - 1

    @property
    def terminal(self) -> float:
        return self.delta_d[-1]

    def __getitem__(self, t: int) -> float:
        return self.delta_d[t]

    def __len__(self) -> int:
        return len(self.delta_d)

    def __iter__(self) -> Iterator[float]:
        return iter(self.delta_d)

    def as_array(self) -> np.ndarray:
        return np.asarray(self.delta_d, dtype=np.float64)


@dataclass(frozen=True)
class LevelState:
    """Initial debt and GDP levels in currency units, optionally with the
    real growth and deflator paths that compose into nominal growth"""
    D0: float
    G0: float
    real_growth: Optional[Tuple[float, ...]] = None
    deflator: Optional[Tuple[float, ...]] = None

    def __post_init__(self):
        if self.real_growth is not None:
            object.__setattr__(self, "real_growth", tuple(self.real_growth))
        if self.deflator is not None:
            object.__setattr__(self, "deflator", tuple(self.deflator))


@dataclass(frozen=True)
class LevelPath:
    """Debt levels D_t and GDP levels G_t for t = 0..T"""
    debt: Tuple[float, ...]
    gdp: Tuple[float, ...]

    def ratios(self) -> Trajectory:
        return Trajectory(tuple(D / G for D, G in zip(self.debt, self.gdp)))

    def __iter__(self) -> Iterator[Tuple[float, ...]]:
        return iter((self.debt, self.gdp))
