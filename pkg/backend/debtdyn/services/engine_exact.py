"""
DebtDyn - Exact Engine
Nonlinear ratio dynamics with multiplier feedback on growth, and the
level-space debt/GDP recursions they are derived from
"""

import logging
from typing import List, Tuple

from debtdyn.core.error_handling import DomainArithmeticError
from debtdyn.domain.types import (
    DeltaTrajectory,
    LevelPath,
    LevelState,
    MultiplierSpec,
    PerturbationSet,
    Scenario,
    Trajectory,
)
from debtdyn.domain.validation import (
    require_finite_state,
    validate_level_state,
    validate_perturbations,
    validate_scenario,
)

logger = logging.getLogger(__name__)


def effective_rates(s: Scenario, p: PerturbationSet, m: MultiplierSpec, t: int) -> Tuple[float, float, float]:
    """(r_t, g_t, x_t) for period t after applying dx_t and its growth feedback.

    Feedback hits only the deviation dx_t, never the nominal surplus, and only
    in the same period.
    """
    rate = s.rate(t)
    dx = p.get(t)
    g = rate.g_nom - m.eta * dx
    if 1.0 + g <= 0.0:
        raise DomainArithmeticError(
            f"growth factor non-positive after multiplier feedback at t={t}: 1 + g = {1.0 + g!r}",
            period=t,
        )
    return rate.r, g, s.surplus(t) + dx


def exact_step(d_prev: float, r: float, g: float, x: float) -> float:
    """One period of d_t = d_{t-1}(1+r_t)/(1+g_t) - x_t"""
    return d_prev * (1.0 + r) / (1.0 + g) - x


def exact_step_derivative(d_prev: float, r: float, g: float, eta: float) -> float:
    """Derivative of the one-step exact map with respect to dx_t at fixed d_{t-1}"""
    return eta * d_prev * (1.0 + r) / (1.0 + g) ** 2 - 1.0


def simulate_exact(s: Scenario, p: PerturbationSet, m: MultiplierSpec) -> Trajectory:
    """Debt ratio trajectory under the exact dynamics"""
    validate_scenario(s)
    validate_perturbations(p, s.horizon)

    d: List[float] = [s.d0]
    for t in s.periods():
        r, g, x = effective_rates(s, p, m, t)
        d.append(require_finite_state(exact_step(d[-1], r, g, x), "debt ratio", t))

    logger.debug(f"exact run: horizon={s.horizon} eta={m.eta} shocks={len(p)} d_T={d[-1]!r}")
    return Trajectory(tuple(d))


def simulate_levels(ls: LevelState, s: Scenario, p: PerturbationSet, m: MultiplierSpec) -> LevelPath:
    """Debt levels D_t = D_{t-1}(1+r_t) - X_t and GDP levels G_t = G_{t-1}(1+g_t).

    Payments are made at period-t prices, X_t = x_t G_t, so D_t / G_t reproduces
    the ratio recursion exactly.
    """
    validate_scenario(s)
    validate_perturbations(p, s.horizon)
    validate_level_state(ls, s)

    debt: List[float] = [ls.D0]
    gdp: List[float] = [ls.G0]
    for t in s.periods():
        r, g, x = effective_rates(s, p, m, t)
        G = require_finite_state(gdp[-1] * (1.0 + g), "GDP level", t)
        debt.append(require_finite_state(debt[-1] * (1.0 + r) - x * G, "debt level", t))
        gdp.append(G)

    return LevelPath(debt=tuple(debt), gdp=tuple(gdp))


def tangent_delta_dynamics(s: Scenario, p: PerturbationSet, m: MultiplierSpec) -> DeltaTrajectory:
    """First-order deviations of the exact dynamics around the exact nominal path.

    dd_t = dd_{t-1}(1+r_t)/(1+g_nom_t) + (eta d_{t-1}(1+r_t)/(1+g_nom_t)^2 - 1) dx_t
    The residual against simulate_exact is second order in the shock size.
    """
    nominal = simulate_exact(s, PerturbationSet(), m)
    validate_perturbations(p, s.horizon)

    delta: List[float] = [0.0]
    for t in s.periods():
        rate = s.rate(t)
        propagation = (1.0 + rate.r) / (1.0 + rate.g_nom)
        impact = exact_step_derivative(nominal[t - 1], rate.r, rate.g_nom, m.eta)
        delta.append(require_finite_state(delta[-1] * propagation + impact * p.get(t), "deviation", t))
    return DeltaTrajectory(tuple(delta))
