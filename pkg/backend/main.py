"""
DebtDyn - FastAPI Application
HTTP surface over the debt dynamics engines
"""

import logging
from contextlib import asynccontextmanager

import uvicorn
from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse

from debtdyn.api.v1 import api_router
from debtdyn.core.config import settings
from debtdyn.core.error_handling import DebtDynError, error_payload
from debtdyn.core.monitoring import StructuredLogger, setup_logging

logger = logging.getLogger("debtdyn.main")
events = StructuredLogger("api")


@asynccontextmanager
async def lifespan(app: FastAPI):
    """Application lifespan manager"""
    setup_logging(settings.LOG_LEVEL, settings.LOG_FORMAT)
    logger.info(f"Starting {settings.PROJECT_NAME} v{settings.VERSION}")
    yield
    logger.info(f"Shutting down {settings.PROJECT_NAME}")


app = FastAPI(
    title=settings.PROJECT_NAME,
    version=settings.VERSION,
    description="""
    Debt-to-GDP trajectories under fiscal multiplier feedback.

    ## Endpoints
    - **simulate**: nominal, exact and first-order trajectories side by side
    - **sensitivity**: first-order effect of a surplus change in period m on the ratio in period t
    - **threshold**: per-period austerity classification against the break-even ratio 1/eta
    - **sweep**: both engines over a grid of multipliers
    """,
    openapi_url=f"{settings.API_V1_STR}/openapi.json",
    docs_url=f"{settings.API_V1_STR}/docs",
    lifespan=lifespan,
)

app.include_router(api_router, prefix=settings.API_V1_STR)


@app.exception_handler(DebtDynError)
async def debtdyn_error_handler(request: Request, exc: DebtDynError):
    """Domain, validation and parse errors with their own status codes"""
    events.log_error(exc, {"path": request.url.path, **exc.context()})
    return JSONResponse(
        status_code=exc.status_code,
        content=error_payload(exc, f"request to {request.url.path}"),
    )


@app.get("/", tags=["Root"])
async def root():
    """Service information"""
    return {
        "service": settings.PROJECT_NAME,
        "version": settings.VERSION,
        "docs": app.docs_url,
        "endpoints": [f"{settings.API_V1_STR}/{name}" for name in ("simulate", "sensitivity", "threshold", "sweep")],
    }


@app.get("/health", tags=["Health"])
async def health_check():
    """Simple health check endpoint"""
    return {"status": "healthy", "version": settings.VERSION}


if __name__ == "__main__":
    uvicorn.run("main:app", host=settings.HOST, port=settings.PORT)
