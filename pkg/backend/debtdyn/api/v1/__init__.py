"""
DebtDyn - API v1 Router
"""

from fastapi import APIRouter

from .scenarios import router as scenarios_router

api_router = APIRouter()

api_router.include_router(scenarios_router, tags=["scenarios"])
