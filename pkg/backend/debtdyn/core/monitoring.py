"""
DebtDyn - Logging & Monitoring
Structured diagnostics on the error stream, never on the data stream
"""

import json
import logging
import logging.config
import time
from contextlib import contextmanager
from datetime import datetime, timezone
from typing import Any, Dict, Iterator, Optional

LOGGER_ROOT = "debtdyn"

LOGGING_CONFIG: Dict[str, Any] = {
    "version": 1,
    "disable_existing_loggers": False,
    "formatters": {
        "standard": {
            "format": "%(asctime)s [%(levelname)s] %(name)s: %(message)s",
            "datefmt": "%Y-%m-%d %H:%M:%S",
        },
        "json": {
            "class": "pythonjsonlogger.jsonlogger.JsonFormatter",
            "format": "%(asctime)s %(name)s %(levelname)s %(message)s",
        },
    },
    "handlers": {
        "console": {
            "class": "logging.StreamHandler",
            "level": "DEBUG",
            "formatter": "standard",
            "stream": "ext://sys.stderr",
        },
    },
    "loggers": {
        LOGGER_ROOT: {
            "level": "WARNING",
            "handlers": ["console"],
            "propagate": False,
        },
        "uvicorn": {
            "level": "INFO",
            "handlers": ["console"],
            "propagate": False,
        },
    },
}


def setup_logging(level: str = "WARNING", fmt: str = "standard") -> logging.Logger:
    """Initialize logging configuration; safe to call repeatedly"""
    if fmt not in LOGGING_CONFIG["formatters"]:
        raise ValueError(f"unknown log format: {fmt}")

    config = json.loads(json.dumps(LOGGING_CONFIG))
    config["handlers"]["console"]["formatter"] = fmt
    config["loggers"][LOGGER_ROOT]["level"] = level.upper()
    logging.config.dictConfig(config)

    logger = logging.getLogger(f"{LOGGER_ROOT}.setup")
    logger.debug("Logging system initialized")
    return logger


class StructuredLogger:
    """Structured event logger"""

    def __init__(self, name: str):
        self.logger = logging.getLogger(f"{LOGGER_ROOT}.{name}")

    def log_run(
        self,
        command: str,
        horizon: Optional[int] = None,
        eta: Optional[float] = None,
        convention: Optional[str] = None,
        elapsed: Optional[float] = None,
        **kwargs: Any,
    ) -> None:
        """Log one completed engine run"""
        log_data = {
            "event_type": "run",
            "command": command,
            "horizon": horizon,
            "eta": eta,
            "convention": convention,
            "elapsed_ms": elapsed * 1000 if elapsed is not None else None,
            "timestamp": datetime.now(timezone.utc).isoformat(),
            **kwargs,
        }
        self.logger.info(json.dumps(log_data))

    def log_error(self, error: Exception, context: Optional[Dict[str, Any]] = None) -> None:
        """Log errors with context"""
        log_data = {
            "event_type": "error",
            "error_type": type(error).__name__,
            "error_code": getattr(error, "code", None),
            "error_message": str(error),
            "context": context or {},
            "timestamp": datetime.now(timezone.utc).isoformat(),
        }
        self.logger.error(json.dumps(log_data))


@contextmanager
def log_context(command: str, **kwargs: Any) -> Iterator[Dict[str, Any]]:
    """Time an operation and log it as a run event on success"""
    logger = StructuredLogger("operations")
    start_time = time.perf_counter()
    fields: Dict[str, Any] = dict(kwargs)

    logger.logger.debug(f"Starting {command}")
    yield fields
    logger.log_run(command, elapsed=time.perf_counter() - start_time, **fields)
