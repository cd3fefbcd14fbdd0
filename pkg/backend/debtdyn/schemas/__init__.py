"""
Schemas module initialization
"""

from .results import *
from .scenario_file import *

__all__ = [
    "RESULT_COLUMNS", "SENSITIVITY_COLUMNS", "THRESHOLD_COLUMNS", "SWEEP_COLUMNS",
    "ResultRow", "ResultMetadata", "ResultTable", "SensitivityRow", "SensitivityTable",
    "ThresholdRow", "ThresholdTable", "SweepRow", "SweepTable", "SweepRequest",
    "Units", "ConstantRates", "RateEntry", "PerturbationEntry", "ScenarioFile",
]
