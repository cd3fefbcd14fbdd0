"""
DebtDyn - Scenario Endpoints
HTTP surface over the same engines the CLI drives
"""

from typing import Any, Dict, Optional

from fastapi import APIRouter, Body, Query

from debtdyn.core.config import get_settings
from debtdyn.documents.emit import (
    build_result_table,
    build_sensitivity_table,
    build_sweep_table,
    build_threshold_table,
)
from debtdyn.documents.scenario_io import load_scenario_document
from debtdyn.schemas.results import ResultTable, SensitivityTable, SweepRequest, SweepTable, ThresholdTable
from debtdyn.schemas.scenario_file import Units
from debtdyn.services.sensitivity import eta_grid, eta_sweep_async

router = APIRouter()


@router.post("/simulate", response_model=ResultTable)
async def simulate(
    document: Dict[str, Any] = Body(..., description="Scenario document"),
    units: Optional[Units] = Query(None, description="Display units (default: the document's)"),
    round_digits: Optional[int] = Query(None, alias="round", ge=0),
):
    """Nominal, exact and first-order trajectories."""
    bundle = load_scenario_document(document)
    return build_result_table(bundle, units, round_digits)


@router.post("/sensitivity", response_model=SensitivityTable)
async def sensitivity(
    document: Dict[str, Any] = Body(...),
    at: Optional[int] = Query(None, description="Observation period"),
):
    """First-order sensitivity coefficients."""
    return build_sensitivity_table(load_scenario_document(document), at)


@router.post("/threshold", response_model=ThresholdTable)
async def threshold(document: Dict[str, Any] = Body(...)):
    """Austerity threshold classification per period."""
    return build_threshold_table(load_scenario_document(document))


@router.post("/sweep", response_model=SweepTable)
async def sweep(request: SweepRequest):
    """Both engines over a multiplier grid."""
    bundle = load_scenario_document(request.scenario)
    at = request.at if request.at is not None else bundle.scenario.horizon
    records = await eta_sweep_async(
        bundle.scenario,
        bundle.perturbations,
        eta_grid(request.eta_from, request.eta_to, request.eta_steps),
        bundle.convention,
        at,
        max_concurrency=get_settings().SWEEP_MAX_CONCURRENCY,
    )
    return build_sweep_table(bundle, records, at)
