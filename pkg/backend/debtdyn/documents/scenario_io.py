"""
DebtDyn - Scenario Documents
Reads scenario documents into validated domain values and writes them back
"""

import json
import logging
from typing import Any, Dict, List, NamedTuple, Optional

from pydantic import ValidationError

from debtdyn.core.error_handling import ScenarioParseError, ScenarioValidationError, UnitError
from debtdyn.domain.growth import percent_to_ratio
from debtdyn.domain.types import MultiplierSpec, PerturbationSet, RatePair, Scenario
from debtdyn.domain.validation import validate_perturbations, validate_scenario
from debtdyn.schemas.scenario_file import ConstantRates, ScenarioFile, Units
from debtdyn.services.engine_linear import PropagationConvention

logger = logging.getLogger(__name__)

# Debt 100% of GDP, r = 3%, g = 2%, surplus 2% of GDP, multiplier 2, ten years
EXAMPLE_DOCUMENT: Dict[str, Any] = {
    "d0": 100,
    "horizon": 10,
    "eta": 2,
    "units": "percent",
    "rates": {"r": 3, "g_nom": 2},
    "x_nom": 2,
    "perturbations": [],
    "convention": "additive",
}


class ScenarioBundle(NamedTuple):
    """Everything one scenario document describes, in internal ratio units"""
    scenario: Scenario
    perturbations: PerturbationSet
    multiplier: MultiplierSpec
    convention: PropagationConvention
    units: Units


def _locate_key(text: Optional[str], key: str) -> Optional[int]:
    """1-based line of the first occurrence of a quoted key"""
    if not text:
        return None
    needle = f'"{key}"'
    for number, line in enumerate(text.splitlines(), start=1):
        if needle in line:
            return number
    return None


def _parse_units(raw: Dict[str, Any]) -> Units:
    if "units" not in raw or raw["units"] is None:
        raise UnitError("units key missing: declare \"units\": \"ratio\" or \"percent\"")
    try:
        return Units(raw["units"])
    except ValueError:
        raise UnitError(f"unknown units {raw['units']!r}: expected 'ratio' or 'percent'") from None


def _schema_error(err: ValidationError, text: Optional[str]) -> ScenarioParseError:
    first = err.errors()[0]
    loc = [str(part) for part in first["loc"]]
    key = loc[0] if loc else None
    path = ".".join(loc)
    if first["type"] == "extra_forbidden":
        message = f"unknown key '{loc[-1]}'"
    elif first["type"] == "missing":
        message = f"missing key '{path}'"
    else:
        message = f"invalid value at '{path}': {first['msg']}"
    line = _locate_key(text, loc[-1] if first["type"] == "extra_forbidden" else key) if key else None
    return ScenarioParseError(message, key=key, line=line)


def _expand_rates(doc: ScenarioFile, convert) -> List[RatePair]:
    if isinstance(doc.rates, ConstantRates):
        pair = RatePair(convert(doc.rates.r), convert(doc.rates.g_nom))
        return [pair] * max(doc.horizon, 0)

    by_period: Dict[int, RatePair] = {}
    for entry in doc.rates:
        if entry.t in by_period:
            raise ScenarioValidationError(
                "duplicate rate period", f"t={entry.t}", period=entry.t, field="rates"
            )
        by_period[entry.t] = RatePair(convert(entry.r), convert(entry.g_nom))
    periods = sorted(by_period)
    if periods != list(range(1, len(periods) + 1)):
        missing = next(t for t in range(1, len(periods) + 2) if t not in by_period)
        raise ScenarioValidationError(
            "rate periods not contiguous", f"no rates for t={missing}", period=missing, field="rates"
        )
    return [by_period[t] for t in periods]


def load_scenario_document(raw: Any, text: Optional[str] = None) -> ScenarioBundle:
    """Validate a decoded scenario document and normalize it to ratio units"""
    if not isinstance(raw, dict):
        raise ScenarioParseError("scenario document must be an object", line=1 if text else None)

    units = _parse_units(raw)
    try:
        doc = ScenarioFile.model_validate(raw)
    except ValidationError as err:
        raise _schema_error(err, text) from None

    convert = percent_to_ratio if units is Units.PERCENT else float

    x_nom = (
        [convert(x) for x in doc.x_nom]
        if isinstance(doc.x_nom, list)
        else [convert(doc.x_nom)] * max(doc.horizon, 0)
    )
    scenario = Scenario(
        d0=convert(doc.d0),
        horizon=doc.horizon,
        rates=tuple(_expand_rates(doc, convert)),
        x_nom=tuple(x_nom),
    )
    validate_scenario(scenario)

    perturbations = PerturbationSet.from_pairs((entry.t, convert(entry.dx)) for entry in doc.perturbations)
    validate_perturbations(perturbations, scenario.horizon)

    bundle = ScenarioBundle(
        scenario=scenario,
        perturbations=perturbations,
        multiplier=MultiplierSpec(doc.eta),
        convention=PropagationConvention(doc.convention),
        units=units,
    )
    logger.debug(
        f"loaded scenario: horizon={scenario.horizon} eta={doc.eta} "
        f"units={units.value} shocks={len(perturbations)}"
    )
    return bundle


def parse_scenario_file(text: str) -> ScenarioBundle:
    """Parse a JSON scenario document"""
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as err:
        raise ScenarioParseError(f"malformed document: {err.msg}", line=err.lineno, column=err.colno) from None
    return load_scenario_document(raw, text)


def scenario_document(bundle: ScenarioBundle) -> Dict[str, Any]:
    """Full-precision ratio-unit document that parses back to the same bundle"""
    s = bundle.scenario
    return {
        "d0": s.d0,
        "horizon": s.horizon,
        "eta": bundle.multiplier.eta,
        "units": Units.RATIO.value,
        "rates": [{"t": t, "r": s.rate(t).r, "g_nom": s.rate(t).g_nom} for t in s.periods()],
        "x_nom": list(s.x_nom),
        "perturbations": [{"t": t, "dx": dx} for t, dx in bundle.perturbations.entries],
        "convention": bundle.convention.value,
    }
