"""
DebtDyn - Linearized Engine
First-order debt dynamics: the nominal path, the perturbed path and the
deviation recursion between them
"""

import logging
from enum import Enum
from typing import List, Tuple

from debtdyn.domain.types import DeltaTrajectory, MultiplierSpec, PerturbationSet, Scenario, Trajectory
from debtdyn.domain.validation import require_finite_state, validate_perturbations, validate_scenario

logger = logging.getLogger(__name__)


class PropagationConvention(str, Enum):
    """Per-period growth factor applied to an inherited deviation"""
    ADDITIVE = "additive"  # 1 + r_t - g_nom_t
    RATIO = "ratio"  # (1 + r_t) / (1 + g_nom_t)

    def factor(self, r: float, g_nom: float) -> float:
        if self is PropagationConvention.RATIO:
            return (1.0 + r) / (1.0 + g_nom)
        return 1.0 + r - g_nom


DEFAULT_CONVENTION = PropagationConvention.ADDITIVE


def propagation_factors(s: Scenario, conv: PropagationConvention) -> Tuple[float, ...]:
    """F_1..F_T, indexed so that factors[t] is period t (factors[0] is unused and 1.0)"""
    return (1.0,) + tuple(conv.factor(s.rate(t).r, s.rate(t).g_nom) for t in s.periods())


def simulate_linear_nominal(s: Scenario) -> Trajectory:
    """d_t = d_{t-1}(1 + r_t - g_nom_t) - x_nom_t"""
    validate_scenario(s)

    d: List[float] = [s.d0]
    for t in s.periods():
        rate = s.rate(t)
        d.append(require_finite_state(d[-1] * (1.0 + rate.r - rate.g_nom) - s.surplus(t), "debt ratio", t))
    return Trajectory(tuple(d))


def simulate_linear_perturbed(s: Scenario, p: PerturbationSet, m: MultiplierSpec) -> Trajectory:
    """d_t = d_{t-1}(1 + r_t - g_nom_t) - x_nom_t + (eta d_{t-1} - 1) dx_t"""
    validate_scenario(s)
    validate_perturbations(p, s.horizon)

    d: List[float] = [s.d0]
    for t in s.periods():
        rate = s.rate(t)
        prev = d[-1]
        step = prev * (1.0 + rate.r - rate.g_nom) - s.surplus(t) + (m.eta * prev - 1.0) * p.get(t)
        d.append(require_finite_state(step, "debt ratio", t))
    return Trajectory(tuple(d))


def impact_coefficient(d_nom_prev: float, m: MultiplierSpec) -> float:
    """eta d_{t-1} - 1: first-order effect of dx_t on d_t"""
    return m.eta * d_nom_prev - 1.0


def delta_dynamics(
    s: Scenario,
    p: PerturbationSet,
    m: MultiplierSpec,
    conv: PropagationConvention = DEFAULT_CONVENTION,
) -> DeltaTrajectory:
    """dd_t = dd_{t-1} F_t + (eta d_nom_{t-1} - 1) dx_t, dd_0 = 0.

    The impact coefficient is evaluated on the nominal linear path. Under ADDITIVE
    with a single shock this is exactly simulate_linear_perturbed minus
    simulate_linear_nominal; with several shocks that difference also carries the
    propagated cross term eta dd_{t-1} dx_t, which the recursion drops.
    """
    nominal = simulate_linear_nominal(s)
    validate_perturbations(p, s.horizon)
    factors = propagation_factors(s, conv)

    delta: List[float] = [0.0]
    for t in s.periods():
        step = delta[-1] * factors[t] + impact_coefficient(nominal[t - 1], m) * p.get(t)
        delta.append(require_finite_state(step, "deviation", t))

    logger.debug(f"delta run: convention={conv.value} eta={m.eta} dd_T={delta[-1]!r}")
    return DeltaTrajectory(tuple(delta))
