"""
DebtDyn - Debt-to-GDP dynamics under fiscal multiplier feedback
"""

__version__ = "1.0.0"
