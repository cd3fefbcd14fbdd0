"""
DebtDyn - Sensitivity & Policy Analysis
Multiperiod superposition, sensitivity matrices, austerity-threshold
classification and multiplier sweeps
"""

import asyncio
import logging
import math
from dataclasses import dataclass
from enum import Enum
from typing import List, Optional, Sequence, Tuple

import numpy as np

from debtdyn.core.error_handling import DomainArithmeticError, ScenarioValidationError
from debtdyn.domain.types import DeltaTrajectory, MultiplierSpec, PerturbationSet, Scenario
from debtdyn.domain.validation import validate_perturbations, validate_scenario
from debtdyn.services.engine_exact import simulate_exact
from debtdyn.services.engine_linear import (
    DEFAULT_CONVENTION,
    PropagationConvention,
    delta_dynamics,
    impact_coefficient,
    propagation_factors,
    simulate_linear_nominal,
)

logger = logging.getLogger(__name__)

CLASSIFICATION_TOL = 1e-9


class ThresholdClassification(str, Enum):
    """First-order effect of raising the surplus in a period"""
    AUSTERITY_RAISES_DEBT_RATIO = "AUSTERITY_RAISES_DEBT_RATIO"
    NEUTRAL = "NEUTRAL"
    AUSTERITY_LOWERS_DEBT_RATIO = "AUSTERITY_LOWERS_DEBT_RATIO"


class PolicyDirection(str, Enum):
    """Surplus move that lowers the next debt ratio to first order"""
    DECREASE_SURPLUS = "decrease_surplus"
    INCREASE_SURPLUS = "increase_surplus"
    NONE = "none"


@dataclass(frozen=True)
class SensitivityMatrix:
    """coeff[m, t] = d(dd_t)/d(dx_m) for shock period m and observation period t >= m.

    Stored as a (T+1) x (T+1) array; row and column 0 and the strict lower
    triangle t < m are zero.
    """
    coeff: np.ndarray
    eta: float
    convention: PropagationConvention

    @property
    def horizon(self) -> int:
        return self.coeff.shape[0] - 1

    def coefficient(self, m: int, t: int) -> float:
        if t < m:
            return 0.0
        return float(self.coeff[m, t])

    def column(self, t: int) -> Tuple[float, ...]:
        """Coefficients of every shock period m = 1..t on dd_t"""
        return tuple(float(self.coeff[m, t]) for m in range(1, t + 1))

    def contract(self, p: PerturbationSet, t: int) -> float:
        """First-order dd_t for a perturbation set: sum_m coeff[m, t] dx_m"""
        return math.fsum(self.coefficient(m, t) * dx for m, dx in p.entries)

    def entries(self) -> List[Tuple[int, int, float]]:
        """(m, t, coeff) for every pair with t >= m, row-major"""
        T = self.horizon
        return [(m, t, float(self.coeff[m, t])) for m in range(1, T + 1) for t in range(m, T + 1)]


@dataclass(frozen=True)
class ThresholdRecord:
    t: int
    d_nom_prev: float
    eta_d_prev: float
    classification: ThresholdClassification
    direction: PolicyDirection


@dataclass(frozen=True)
class ThresholdReport:
    records: Tuple[ThresholdRecord, ...]
    eta: float
    break_even: Optional[float]


@dataclass(frozen=True)
class SweepRecord:
    eta: float
    delta_linear: float
    delta_exact: float


def check_observation_period(s: Scenario, T_obs: int) -> None:
    if not 1 <= T_obs <= s.horizon:
        raise ScenarioValidationError(
            "observation period out of range", f"T_obs={T_obs} outside 1..{s.horizon}", field="at"
        )


def superpose_delta(
    s: Scenario,
    p: PerturbationSet,
    m: MultiplierSpec,
    conv: PropagationConvention = DEFAULT_CONVENTION,
    T_obs: Optional[int] = None,
) -> float:
    """Closed form of the deviation recursion at T_obs.

    sum over shocks m <= T_obs of (eta d_nom_{m-1} - 1) dx_m times the product of
    F_j for j = m+1..T_obs (T_obs - m propagation factors).
    """
    validate_scenario(s)
    validate_perturbations(p, s.horizon)
    T_obs = s.horizon if T_obs is None else T_obs
    check_observation_period(s, T_obs)

    nominal = simulate_linear_nominal(s)
    factors = propagation_factors(s, conv)
    terms = []
    for shock_period, dx in p.entries:
        if shock_period > T_obs:
            continue
        propagated = math.prod(factors[shock_period + 1:T_obs + 1])
        terms.append(impact_coefficient(nominal[shock_period - 1], m) * dx * propagated)
    return math.fsum(terms)


def single_shock_response(
    s: Scenario,
    m: MultiplierSpec,
    period: int,
    dx: float,
    conv: PropagationConvention = DEFAULT_CONVENTION,
    T_obs: Optional[int] = None,
) -> float:
    """First-order dd at T_obs from one surplus change in one period"""
    return superpose_delta(s, PerturbationSet.single(period, dx), m, conv, T_obs)


def sensitivity_matrix(
    s: Scenario,
    m: MultiplierSpec,
    conv: PropagationConvention = DEFAULT_CONVENTION,
) -> SensitivityMatrix:
    """Unit-shock coefficients for every (shock, observation) pair"""
    validate_scenario(s)
    T = s.horizon
    nominal = simulate_linear_nominal(s).as_array()
    factors = np.asarray(propagation_factors(s, conv), dtype=np.float64)

    coeff = np.zeros((T + 1, T + 1), dtype=np.float64)
    for shock_period in range(1, T + 1):
        propagated = np.cumprod(np.concatenate(([1.0], factors[shock_period + 1:])))
        coeff[shock_period, shock_period:] = (m.eta * nominal[shock_period - 1] - 1.0) * propagated

    return SensitivityMatrix(coeff=coeff, eta=m.eta, convention=conv)


def classify(eta_d_prev: float) -> ThresholdClassification:
    if eta_d_prev > 1.0 + CLASSIFICATION_TOL:
        return ThresholdClassification.AUSTERITY_RAISES_DEBT_RATIO
    if abs(eta_d_prev - 1.0) <= CLASSIFICATION_TOL:
        return ThresholdClassification.NEUTRAL
    return ThresholdClassification.AUSTERITY_LOWERS_DEBT_RATIO


def policy_direction(classification: ThresholdClassification) -> PolicyDirection:
    """Surplus move that lowers the debt ratio in the period classified"""
    return {
        ThresholdClassification.AUSTERITY_RAISES_DEBT_RATIO: PolicyDirection.DECREASE_SURPLUS,
        ThresholdClassification.AUSTERITY_LOWERS_DEBT_RATIO: PolicyDirection.INCREASE_SURPLUS,
        ThresholdClassification.NEUTRAL: PolicyDirection.NONE,
    }[classification]


def threshold_report(s: Scenario, m: MultiplierSpec) -> ThresholdReport:
    """Classify each period by eta d_nom_{t-1} against the break-even 1."""
    validate_scenario(s)
    nominal = simulate_linear_nominal(s)

    records = []
    for t in s.periods():
        eta_d = m.eta * nominal[t - 1]
        classification = classify(eta_d)
        records.append(
            ThresholdRecord(
                t=t,
                d_nom_prev=nominal[t - 1],
                eta_d_prev=eta_d,
                classification=classification,
                direction=policy_direction(classification),
            )
        )

    break_even = 1.0 / m.eta if m.eta > 0 else None
    return ThresholdReport(records=tuple(records), eta=m.eta, break_even=break_even)


def _sweep_point(
    s: Scenario,
    p: PerturbationSet,
    eta: float,
    conv: PropagationConvention,
    T_obs: int,
) -> SweepRecord:
    try:
        m = MultiplierSpec(eta)
        linear = delta_dynamics(s, p, m, conv)
        exact = simulate_exact(s, p, m)
    except DomainArithmeticError as err:
        raise err.with_eta(eta) from err
    nominal = simulate_exact(s, PerturbationSet(), m)
    return SweepRecord(eta=eta, delta_linear=linear[T_obs], delta_exact=exact[T_obs] - nominal[T_obs])


def _check_sweep(s: Scenario, p: PerturbationSet, etas: Sequence[float], T_obs: Optional[int]) -> int:
    validate_scenario(s)
    validate_perturbations(p, s.horizon)
    if len(etas) == 0:
        raise ScenarioValidationError("empty multiplier grid", field="etas")
    for eta in etas:
        MultiplierSpec(eta)
    T_obs = s.horizon if T_obs is None else T_obs
    check_observation_period(s, T_obs)
    return T_obs


async def eta_sweep_async(
    s: Scenario,
    p: PerturbationSet,
    etas: Sequence[float],
    conv: PropagationConvention = DEFAULT_CONVENTION,
    T_obs: Optional[int] = None,
    max_concurrency: int = 4,
) -> List[SweepRecord]:
    """Evaluate both engines at every eta concurrently; records keep input order"""
    T_obs = _check_sweep(s, p, etas, T_obs)
    semaphore = asyncio.Semaphore(max_concurrency)

    async def evaluate(eta: float) -> SweepRecord:
        async with semaphore:
            return await asyncio.to_thread(_sweep_point, s, p, eta, conv, T_obs)

    results = await asyncio.gather(*(evaluate(eta) for eta in etas), return_exceptions=True)

    # first failure in input order, whatever order the workers finished in
    for result in results:
        if isinstance(result, BaseException):
            raise result
    logger.debug(f"sweep: {len(results)} multipliers at T_obs={T_obs}")
    return list(results)


def eta_sweep(
    s: Scenario,
    p: PerturbationSet,
    etas: Sequence[float],
    conv: PropagationConvention = DEFAULT_CONVENTION,
    T_obs: Optional[int] = None,
    max_concurrency: int = 4,
) -> List[SweepRecord]:
    """Synchronous entry point for eta_sweep_async"""
    return asyncio.run(eta_sweep_async(s, p, etas, conv, T_obs, max_concurrency))


def sweep_zero_crossings(records: Sequence[SweepRecord]) -> List[Tuple[float, float]]:
    """Adjacent eta pairs between which the linear deviation changes sign.

    A record with an exactly zero deviation yields a degenerate (eta, eta) pair.
    """
    crossings: List[Tuple[float, float]] = []
    for index, record in enumerate(records):
        if record.delta_linear == 0.0:
            crossings.append((record.eta, record.eta))
            continue
        if index == 0:
            continue
        previous = records[index - 1]
        if previous.delta_linear != 0.0 and (previous.delta_linear > 0) != (record.delta_linear > 0):
            crossings.append((previous.eta, record.eta))
    return crossings


def linearization_gap(
    s: Scenario,
    p: PerturbationSet,
    m: MultiplierSpec,
    conv: PropagationConvention = DEFAULT_CONVENTION,
) -> DeltaTrajectory:
    """Per-period dd_exact - dd_linear"""
    exact = simulate_exact(s, p, m).minus(simulate_exact(s, PerturbationSet(), m))
    linear = delta_dynamics(s, p, m, conv)
    return DeltaTrajectory(tuple(a - b for a, b in zip(exact, linear)))


def eta_grid(start: float, stop: float, steps: int) -> List[float]:
    """``steps`` evenly spaced multipliers from start to stop inclusive"""
    if steps < 1:
        raise ScenarioValidationError("multiplier grid needs at least one step", f"steps={steps}", field="eta_steps")
    return [float(eta) for eta in np.linspace(start, stop, steps)]
