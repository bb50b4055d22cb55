"""Application Services"""
from src.application.services.reduction_service import ReductionService
from src.application.services.solver_service import SolverService

__all__ = ["ReductionService", "SolverService"]
