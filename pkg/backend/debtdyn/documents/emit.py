"""
DebtDyn - Result Tables
Runs the engines for a scenario bundle and renders the tables as CSV or JSON
"""

import json
from typing import Callable, Optional, Sequence, Union

import pandas as pd

from debtdyn import __version__
from debtdyn.domain.growth import ratio_to_percent
from debtdyn.domain.types import PerturbationSet
from debtdyn.documents.scenario_io import ScenarioBundle, scenario_document
from debtdyn.schemas.results import (
    ResultMetadata,
    ResultRow,
    ResultTable,
    SensitivityRow,
    SensitivityTable,
    SweepRow,
    SweepTable,
    ThresholdRow,
    ThresholdTable,
)
from debtdyn.schemas.scenario_file import Units
from debtdyn.services.engine_exact import simulate_exact
from debtdyn.services.engine_linear import delta_dynamics
from debtdyn.services.sensitivity import (
    SweepRecord,
    check_observation_period,
    sensitivity_matrix,
    sweep_zero_crossings,
    threshold_report,
)

AnyTable = Union[ResultTable, SensitivityTable, ThresholdTable, SweepTable]

DIMENSIONLESS = "dimensionless"


def _display(units: Units, round_digits: Optional[int]) -> Callable[[float], float]:
    """Converter from internal ratios to display values"""
    def convert(value: float) -> float:
        shown = ratio_to_percent(value) if units is Units.PERCENT else value
        return round(shown, round_digits) if round_digits is not None else shown
    return convert


def build_result_table(
    bundle: ScenarioBundle,
    units: Optional[Units] = None,
    round_digits: Optional[int] = None,
) -> ResultTable:
    """Nominal, exact and first-order trajectories for one scenario.

    d_nom is the exact path without perturbations. Both delta columns are taken
    against it: d_exact = d_nom + delta_exact and d_linear = d_nom + delta_linear,
    where delta_linear is the convention's deviation recursion.
    """
    s, p, m, conv = bundle.scenario, bundle.perturbations, bundle.multiplier, bundle.convention
    units = units or bundle.units
    show = _display(units, round_digits)

    d_nom = simulate_exact(s, PerturbationSet(), m)
    d_exact = simulate_exact(s, p, m)
    delta_linear = delta_dynamics(s, p, m, conv)
    delta_exact = d_exact.minus(d_nom)

    rows = [
        ResultRow(
            t=t,
            d_nom=show(d_nom[t]),
            d_exact=show(d_exact[t]),
            d_linear=show(d_nom[t] + delta_linear[t]),
            delta_exact=show(delta_exact[t]),
            delta_linear=show(delta_linear[t]),
        )
        for t in range(s.horizon + 1)
    ]
    metadata = ResultMetadata(
        eta=m.eta,
        convention=conv.value,
        units=units.value,
        version=__version__,
        horizon=s.horizon,
        terminal_gap=show(delta_exact.terminal - delta_linear.terminal),
        scenario=scenario_document(bundle),
    )
    return ResultTable(rows=rows, metadata=metadata)


def build_sensitivity_table(bundle: ScenarioBundle, at: Optional[int] = None) -> SensitivityTable:
    """Sensitivity coefficients, all pairs or only those observed at ``at``"""
    matrix = sensitivity_matrix(bundle.scenario, bundle.multiplier, bundle.convention)
    if at is not None:
        check_observation_period(bundle.scenario, at)
    rows = [
        SensitivityRow(m=m, t=t, coeff=coeff)
        for m, t, coeff in matrix.entries()
        if at is None or t == at
    ]
    metadata = {
        "eta": matrix.eta,
        "convention": matrix.convention.value,
        "horizon": matrix.horizon,
        "at": at,
        "units": DIMENSIONLESS,
        "version": __version__,
    }
    return SensitivityTable(rows=rows, metadata=metadata)


def build_threshold_table(bundle: ScenarioBundle) -> ThresholdTable:
    """Per-period austerity classification; ratios are dimensionless here"""
    report = threshold_report(bundle.scenario, bundle.multiplier)
    rows = [
        ThresholdRow(
            t=record.t,
            d_nom_prev=record.d_nom_prev,
            eta_d_prev=record.eta_d_prev,
            classification=record.classification.value,
            direction=record.direction.value,
            break_even=report.break_even,
        )
        for record in report.records
    ]
    metadata = {
        "eta": report.eta,
        "break_even": report.break_even,
        "horizon": bundle.scenario.horizon,
        "units": Units.RATIO.value,
        "version": __version__,
    }
    return ThresholdTable(rows=rows, metadata=metadata)


def build_sweep_table(
    bundle: ScenarioBundle,
    records: Sequence[SweepRecord],
    at: int,
    units: Optional[Units] = None,
    round_digits: Optional[int] = None,
) -> SweepTable:
    units = units or bundle.units
    show = _display(units, round_digits)
    rows = [
        SweepRow(eta=record.eta, delta_linear=show(record.delta_linear), delta_exact=show(record.delta_exact))
        for record in records
    ]
    metadata = {
        "at": at,
        "convention": bundle.convention.value,
        "units": units.value,
        "zero_crossings": [list(pair) for pair in sweep_zero_crossings(records)],
        "version": __version__,
    }
    return SweepTable(rows=rows, metadata=metadata)


def emit_results(table: AnyTable, fmt: str = "csv") -> str:
    """Render a table as CSV (header + one line per row) or JSON (rows + metadata)"""
    if fmt == "json":
        return json.dumps(table.model_dump(mode="json"), indent=2) + "\n"
    if fmt != "csv":
        raise ValueError(f"unknown output format: {fmt}")

    frame = pd.DataFrame([row.model_dump() for row in table.rows], columns=list(table.columns))
    return frame.to_csv(index=False, lineterminator="\n", na_rep="")
