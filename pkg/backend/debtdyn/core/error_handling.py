"""
DebtDyn - Error Handling
Exception hierarchy with exit codes, HTTP status codes and structured payloads
"""

import logging
from datetime import datetime, timezone
from typing import Any, Dict, Optional

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_INPUT_ERROR = 1
EXIT_DOMAIN_ERROR = 2


class DebtDynError(Exception):
    """Base exception class for DebtDyn"""

    def __init__(
        self,
        message: str,
        code: str = "UNKNOWN_ERROR",
        exit_code: int = EXIT_INPUT_ERROR,
        status_code: int = 500,
    ):
        self.message = message
        self.code = code
        self.exit_code = exit_code
        self.status_code = status_code
        super().__init__(self.message)

    def context(self) -> Dict[str, Any]:
        """Error-specific fields for diagnostics"""
        return {}


class ScenarioValidationError(DebtDynError):
    """A scenario, perturbation set or multiplier violates a domain invariant"""

    def __init__(
        self,
        invariant: str,
        detail: str = "",
        period: Optional[int] = None,
        field: Optional[str] = None,
    ):
        self.invariant = invariant
        self.period = period
        self.field = field
        message = invariant if not detail else f"{invariant}: {detail}"
        super().__init__(
            message=message,
            code="VALIDATION_ERROR",
            exit_code=EXIT_INPUT_ERROR,
            status_code=422,
        )

    def context(self) -> Dict[str, Any]:
        return {"invariant": self.invariant, "period": self.period, "field": self.field}


class ScenarioParseError(DebtDynError):
    """A scenario document could not be read"""

    def __init__(
        self,
        message: str,
        key: Optional[str] = None,
        line: Optional[int] = None,
        column: Optional[int] = None,
    ):
        self.key = key
        self.line = line
        self.column = column
        location = []
        if key:
            location.append(f"key '{key}'")
        if line is not None:
            location.append(f"line {line}" + (f", column {column}" if column is not None else ""))
        if location:
            message = f"{message} ({'; '.join(location)})"
        super().__init__(
            message=message,
            code="PARSE_ERROR",
            exit_code=EXIT_INPUT_ERROR,
            status_code=400,
        )

    def context(self) -> Dict[str, Any]:
        return {"key": self.key, "line": self.line, "column": self.column}


class UnitError(DebtDynError):
    """Missing or unknown unit declaration"""

    def __init__(self, message: str):
        super().__init__(
            message=message,
            code="UNIT_ERROR",
            exit_code=EXIT_INPUT_ERROR,
            status_code=400,
        )


class UsageError(DebtDynError):
    """Bad command-line usage"""

    def __init__(self, message: str):
        super().__init__(
            message=message,
            code="USAGE_ERROR",
            exit_code=EXIT_INPUT_ERROR,
            status_code=400,
        )


class DomainArithmeticError(DebtDynError):
    """Arithmetic outside the model's domain, e.g. a growth factor 1+g <= 0"""

    def __init__(self, message: str, period: Optional[int] = None, eta: Optional[float] = None):
        self.period = period
        self.eta = eta
        self.detail = message
        if eta is not None:
            message = f"{message} (eta={eta!r})"
        super().__init__(
            message=message,
            code="DOMAIN_ERROR",
            exit_code=EXIT_DOMAIN_ERROR,
            status_code=422,
        )

    def with_eta(self, eta: float) -> "DomainArithmeticError":
        """Copy of this error tagged with the multiplier that produced it"""
        return DomainArithmeticError(self.detail, period=self.period, eta=eta)

    def context(self) -> Dict[str, Any]:
        return {"period": self.period, "eta": self.eta}


def error_payload(error: Exception, operation: str = "operation") -> Dict[str, Any]:
    """Create standardized error payload"""

    payload: Dict[str, Any] = {
        "timestamp": datetime.now(timezone.utc).isoformat(),
        "operation": operation,
    }

    if isinstance(error, DebtDynError):
        payload.update({
            "error": error.message,
            "code": error.code,
            "status_code": error.status_code,
            "context": error.context(),
        })
    else:
        logger.error(f"Unexpected error during {operation}: {error!r}")
        payload.update({
            "error": "An unexpected error occurred",
            "code": "UNEXPECTED_ERROR",
            "status_code": 500,
            "message": str(error),
        })

    return payload
