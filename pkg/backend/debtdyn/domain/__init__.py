"""
Domain module initialization
"""

from .growth import compose_nominal_growth, percent_to_ratio, ratio_to_percent
from .types import (
    DeltaTrajectory,
    LevelPath,
    LevelState,
    MultiplierSpec,
    PerturbationSet,
    RatePair,
    Scenario,
    Trajectory,
)
from .validation import validate_level_state, validate_perturbations, validate_scenario

__all__ = [
    "compose_nominal_growth", "percent_to_ratio", "ratio_to_percent",
    "DeltaTrajectory", "LevelPath", "LevelState", "MultiplierSpec",
    "PerturbationSet", "RatePair", "Scenario", "Trajectory",
    "validate_level_state", "validate_perturbations", "validate_scenario",
]
