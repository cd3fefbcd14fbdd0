"""
Scenario documents in, result tables out
"""

from .emit import (
    build_result_table,
    build_sensitivity_table,
    build_sweep_table,
    build_threshold_table,
    emit_results,
)
from .scenario_io import (
    EXAMPLE_DOCUMENT,
    ScenarioBundle,
    load_scenario_document,
    parse_scenario_file,
    scenario_document,
)

__all__ = [
    "build_result_table", "build_sensitivity_table", "build_sweep_table",
    "build_threshold_table", "emit_results", "EXAMPLE_DOCUMENT", "ScenarioBundle",
    "load_scenario_document", "parse_scenario_file", "scenario_document",
]
