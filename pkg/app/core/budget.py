# app/core/budget.py
# Guardia de presupuesto: la contabilidad de coste va SIEMPRE antes de enumerar.
from loguru import logger

from app.core.config import get_settings
from app.core.errors import BudgetExceededError


def resolve_budget(budget: int | None) -> int:
    """Devuelve el presupuesto explícito o el de la configuración."""
    return budget if budget is not None else get_settings().budget


def require_budget(what: str, estimate: int, budget: int | None = None) -> None:
    """Lanza BudgetExceededError si estimate supera el presupuesto efectivo."""
    limit = resolve_budget(budget)
    if estimate > limit:
        logger.warning("[BUDGET] refused {} | estimate={} > budget={}", what, estimate, limit)
        raise BudgetExceededError(what, estimate, limit)
    logger.debug("[BUDGET] ok {} | estimate={} <= budget={}", what, estimate, limit)
