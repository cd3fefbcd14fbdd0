"""
DebtDyn - Scenario Validation
Checks every Scenario / PerturbationSet / LevelState invariant and names the
first one violated
"""

import math
from typing import Optional

from debtdyn.core.error_handling import DomainArithmeticError, ScenarioValidationError
from debtdyn.domain.growth import compose_nominal_growth
from debtdyn.domain.types import LevelState, PerturbationSet, RatePair, Scenario

GROWTH_CONSISTENCY_TOL = 1e-12


def _require_finite(value: float, name: str, period: Optional[int] = None) -> None:
    if not isinstance(value, (int, float)) or isinstance(value, bool) or not math.isfinite(value):
        where = f" at t={period}" if period is not None else ""
        raise ScenarioValidationError(
            "value not finite", f"{name}{where} is {value!r}", period=period, field=name
        )


def validate_scenario(s: Scenario) -> Scenario:
    """Return ``s`` unchanged if every Scenario invariant holds"""
    if isinstance(s.horizon, bool) or not isinstance(s.horizon, int) or s.horizon < 1:
        raise ScenarioValidationError(
            "horizon must be a positive integer", f"horizon={s.horizon!r}", field="horizon"
        )
    _require_finite(s.d0, "d0")

    if len(s.rates) != s.horizon:
        raise ScenarioValidationError(
            "length mismatch", f"{len(s.rates)} rate periods for horizon {s.horizon}", field="rates"
        )
    if len(s.x_nom) != s.horizon:
        raise ScenarioValidationError(
            "length mismatch", f"{len(s.x_nom)} surplus periods for horizon {s.horizon}", field="x_nom"
        )

    for t in s.periods():
        rate = s.rate(t)
        if not isinstance(rate, RatePair):
            raise ScenarioValidationError("malformed rate entry", f"t={t}", period=t, field="rates")
        _require_finite(rate.r, "r", t)
        _require_finite(rate.g_nom, "g_nom", t)
        _require_finite(s.surplus(t), "x_nom", t)
        if 1.0 + rate.g_nom <= 0.0:
            raise ScenarioValidationError(
                "growth factor non-positive",
                f"1 + g_nom = {1.0 + rate.g_nom!r} at t={t}",
                period=t,
                field="rates",
            )

    return s


def validate_perturbations(p: PerturbationSet, horizon: int) -> PerturbationSet:
    """Every perturbation period must lie in [1, horizon]"""
    for t, dx in p.entries:
        if not 1 <= t <= horizon:
            raise ScenarioValidationError(
                "perturbation period out of range",
                f"t={t} outside 1..{horizon}",
                period=t,
                field="perturbations",
            )
        _require_finite(dx, "dx", t)
    return p


def validate_level_state(ls: LevelState, s: Scenario) -> LevelState:
    """Positive initial GDP; real growth and deflator compose to the scenario's g_nom"""
    _require_finite(ls.D0, "D0")
    _require_finite(ls.G0, "G0")
    if ls.G0 <= 0.0:
        raise ScenarioValidationError("initial GDP non-positive", f"G0={ls.G0!r}", field="G0")

    if ls.real_growth is None or ls.deflator is None:
        return ls

    for name, path in (("real_growth", ls.real_growth), ("deflator", ls.deflator)):
        if len(path) != s.horizon:
            raise ScenarioValidationError(
                "length mismatch", f"{len(path)} {name} periods for horizon {s.horizon}", field=name
            )

    for t in s.periods():
        composed = compose_nominal_growth(ls.real_growth[t - 1], ls.deflator[t - 1])
        if abs(composed - s.rate(t).g_nom) > GROWTH_CONSISTENCY_TOL:
            raise ScenarioValidationError(
                "level state inconsistent",
                f"composed growth {composed!r} != g_nom {s.rate(t).g_nom!r} at t={t}",
                period=t,
                field="deflator",
            )
    return ls


def require_finite_state(value: float, name: str, period: int) -> float:
    """Simulated state must stay finite; overflow is a domain error at ``period``"""
    if not math.isfinite(value):
        raise DomainArithmeticError(f"{name} not finite at t={period}: {value!r}", period=period)
    return value
