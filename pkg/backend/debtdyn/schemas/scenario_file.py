"""
DebtDyn - Scenario File Schema
Pydantic model of the scenario document with validation
"""

from enum import Enum
from typing import List, Optional, Union

from pydantic import BaseModel, ConfigDict, Field, field_validator


class Units(str, Enum):
    """Unit system of every rate, ratio and surplus in a document"""
    RATIO = "ratio"
    PERCENT = "percent"


class _Strict(BaseModel):
    model_config = ConfigDict(extra="forbid")


class ConstantRates(_Strict):
    """Constant shorthand: the same r and g_nom in every period"""
    r: float
    g_nom: float


class RateEntry(_Strict):
    """Rates for one period"""
    t: int = Field(..., ge=1)
    r: float
    g_nom: float


class PerturbationEntry(_Strict):
    """Surplus deviation dx in period t"""
    t: int = Field(..., ge=1)
    dx: float


class ScenarioFile(_Strict):
    """Scenario document: nominal plan, multiplier, perturbations and convention"""
    d0: float = Field(..., description="Initial debt-to-GDP ratio")
    horizon: int = Field(..., description="Number of simulated periods")
    eta: float = Field(..., description="Fiscal multiplier")
    units: Optional[str] = Field(None, description="'ratio' or 'percent'")
    rates: Union[ConstantRates, List[RateEntry]]
    x_nom: Union[float, List[float]]
    perturbations: List[PerturbationEntry] = Field(default_factory=list)
    convention: str = Field("additive", description="'additive' or 'ratio'")

    @field_validator("convention")
    @classmethod
    def validate_convention(cls, v: str) -> str:
        if v not in ("additive", "ratio"):
            raise ValueError("convention must be 'additive' or 'ratio'")
        return v
