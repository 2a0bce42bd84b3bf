# app/core/errors.py
# =================================================================================
# 🚨 Jerarquía de errores del laboratorio
# ---------------------------------------------------------------------------------
# Todas las excepciones propias heredan de RsDistError, así la CLI puede
# traducirlas a un código de salida (3 = uso/presupuesto) sin capturar de más.
# =================================================================================


class RsDistError(Exception):
    """Error base del proyecto."""


class FieldError(RsDistError):
    """Parámetros de cuerpo finito inválidos (p no primo, s = 0, q sobre el tope)."""


class PolyError(RsDistError):
    """Polinomio inválido para la operación (cero, no mónico, longitudes distintas)."""


class ClassMismatchError(RsDistError):
    """Clases de coeficientes líderes con ℓ o cuerpo distintos."""


class PreconditionError(RsDistError):
    """Precondición analítica violada (γ > 1, c fuera de (0,1), ...)."""


class MethodLimitError(RsDistError):
    """El evaluador elegido no admite ese tamaño (p.ej. j demasiado grande)."""


class BudgetExceededError(RsDistError):
    """La estimación de coste supera el presupuesto de operaciones primitivas."""

    def __init__(self, what: str, estimate: int, budget: int):
        self.what = what
        self.estimate = estimate
        self.budget = budget
        super().__init__(
            f"Presupuesto excedido en {what}: estimación={estimate:.3e} operaciones > presupuesto={budget:.3e}. "
            "Sube RSDIST_BUDGET o usa --budget si de verdad quieres esperar."
        )
