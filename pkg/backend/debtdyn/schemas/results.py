"""
DebtDyn - Result Schemas
Tables emitted by the CLI and returned by the HTTP surface
"""

from typing import Any, ClassVar, Dict, List, Optional, Tuple

from pydantic import BaseModel, Field

RESULT_COLUMNS = ("t", "d_nom", "d_exact", "d_linear", "delta_exact", "delta_linear")
SENSITIVITY_COLUMNS = ("m", "t", "coeff")
THRESHOLD_COLUMNS = ("t", "d_nom_prev", "eta_d_prev", "classification", "direction", "break_even")
SWEEP_COLUMNS = ("eta", "delta_linear", "delta_exact")


class ResultRow(BaseModel):
    t: int
    d_nom: float
    d_exact: float
    d_linear: float
    delta_exact: float
    delta_linear: float


class ResultMetadata(BaseModel):
    eta: float
    convention: str
    units: str
    version: str
    horizon: int
    terminal_gap: float = Field(..., description="delta_exact - delta_linear at the horizon")
    scenario: Dict[str, Any] = Field(..., description="Echo of the input scenario in ratio units")


class ResultTable(BaseModel):
    """Nominal, exact and linear trajectories side by side, one row per period"""
    rows: List[ResultRow]
    metadata: ResultMetadata

    columns: ClassVar[Tuple[str, ...]] = RESULT_COLUMNS


class SensitivityRow(BaseModel):
    m: int
    t: int
    coeff: float


class SensitivityTable(BaseModel):
    rows: List[SensitivityRow]
    metadata: Dict[str, Any]

    columns: ClassVar[Tuple[str, ...]] = SENSITIVITY_COLUMNS


class ThresholdRow(BaseModel):
    t: int
    d_nom_prev: float
    eta_d_prev: float
    classification: str
    direction: str
    break_even: Optional[float] = None


class ThresholdTable(BaseModel):
    rows: List[ThresholdRow]
    metadata: Dict[str, Any]

    columns: ClassVar[Tuple[str, ...]] = THRESHOLD_COLUMNS


class SweepRow(BaseModel):
    eta: float
    delta_linear: float
    delta_exact: float


class SweepTable(BaseModel):
    rows: List[SweepRow]
    metadata: Dict[str, Any]

    columns: ClassVar[Tuple[str, ...]] = SWEEP_COLUMNS


class SweepRequest(BaseModel):
    """HTTP sweep request: scenario document plus the multiplier grid"""
    scenario: Dict[str, Any]
    eta_from: float = Field(..., ge=0)
    eta_to: float = Field(..., ge=0)
    eta_steps: int = Field(..., ge=1)
    at: Optional[int] = None
