# app/kernel/binom.py
# Binomiales generalizados C(a, k) con a racional o intervalo, y su logaritmo.
from __future__ import annotations

from fractions import Fraction
from math import factorial

from app.core.errors import PreconditionError
from app.kernel.scalars import Interval, Scalar, is_exact, ln, to_interval


def gen_binom(a: Scalar, k: int) -> Scalar:
    """∏_{i<k} (a - i) / k!; exacto si a es exacto, encierro si es intervalo."""
    if k < 0:
        raise PreconditionError(f"gen_binom requiere k >= 0 (k={k}).")
    if is_exact(a):
        a = Fraction(a)
        num = Fraction(1)
        for i in range(k):
            num *= a - i
            if num == 0:
                return Fraction(0)
        return num / factorial(k)
    x = to_interval(a)
    acc = to_interval(1)
    for i in range(k):
        acc = acc * (x - i) / (i + 1)
    return acc


def ln_gen_binom(a: Scalar, k: int) -> Interval | None:
    """ln C(a, k) sumando ln((a - i)/(i + 1)) factor a factor.

    Devuelve None si algún factor es exactamente cero (C(a, k) = 0). Los
    factores deben ser positivos: pensado para a = x + k - 1 con x > 0.
    """
    if k < 0:
        raise PreconditionError(f"ln_gen_binom requiere k >= 0 (k={k}).")
    total = to_interval(0)
    for i in range(k):
        factor = a - i
        if is_exact(factor) and Fraction(factor) == 0:
            return None
        ratio = Fraction(factor) / (i + 1) if is_exact(factor) else to_interval(factor) / (i + 1)
        total = total + ln(ratio)
    return total
