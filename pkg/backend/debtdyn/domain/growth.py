"""
DebtDyn - Growth & Unit Arithmetic
"""

from debtdyn.core.error_handling import DomainArithmeticError

PERCENT = 100.0


def compose_nominal_growth(g_real: float, deflator: float) -> float:
    """Nominal growth from real growth and the GDP deflator: (1+g')(1+p) - 1"""
    if 1.0 + g_real <= 0.0:
        raise DomainArithmeticError(f"real growth factor non-positive: 1 + {g_real!r} <= 0")
    if 1.0 + deflator <= 0.0:
        raise DomainArithmeticError(f"deflator factor non-positive: 1 + {deflator!r} <= 0")
    return (1.0 + g_real) * (1.0 + deflator) - 1.0


def percent_to_ratio(value: float) -> float:
    return value / PERCENT


def ratio_to_percent(value: float) -> float:
    return value * PERCENT
