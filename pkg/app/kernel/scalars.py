# app/kernel/scalars.py
# =================================================================================
# 🔢 ESCALARES: racionales exactos (Fraction) e intervalos con redondeo dirigido
# ---------------------------------------------------------------------------------
# - Exacto: fractions.Fraction (los enteros se tratan como Fraction).
# - Intervalo: mpmath.iv (cada operación devuelve un encierro del valor real).
# - La precisión SIEMPRE se pasa explícita; working_precision() la fija y la
#   restaura al salir (iv.prec es estado global del contexto de mpmath).
# - certify(): veredicto de tres valores con escalera 53 → 128 → 256 → 512 bits.
# =================================================================================

from __future__ import annotations

from contextlib import contextmanager
from fractions import Fraction
from typing import Any, Callable, Iterator, Union

from loguru import logger
from mpmath import iv, mp

from app.core.config import ALLOWED_PRECISIONS, get_settings
from app.core.errors import PreconditionError
from app.models import Verdict, VerdictEnum

Interval = Any                                          # mpmath iv.mpf (no exporta un tipo público).
Scalar = Union[int, Fraction, Interval]

PRINT_DIGITS = 20                                       # Dígitos al imprimir intervalos.


# ---------------------------------------------------------------------------------
# ⚙️ Precisión de trabajo
# ---------------------------------------------------------------------------------
def default_precision() -> int:
    return get_settings().precision_bits


@contextmanager
def working_precision(bits: int) -> Iterator[int]:
    """Fija iv.prec = bits dentro del bloque y restaura el valor anterior."""
    previous = iv.prec
    iv.prec = bits
    try:
        yield bits
    finally:
        iv.prec = previous


# ---------------------------------------------------------------------------------
# 🔁 Conversión y consultas
# ---------------------------------------------------------------------------------
def is_exact(x: Scalar) -> bool:
    return isinstance(x, (int, Fraction))


def exact(x: Scalar) -> Fraction:
    if not is_exact(x):
        raise TypeError(f"Se esperaba un escalar exacto, recibido {x!r}.")
    return Fraction(x)


def to_interval(x: Scalar) -> Interval:
    """Encierro de x a la precisión vigente (un Fraction se divide con redondeo hacia fuera)."""
    if isinstance(x, Fraction):
        if x.denominator == 1:
            return iv.mpf(x.numerator)
        return iv.mpf(x.numerator) / iv.mpf(x.denominator)
    if isinstance(x, int):
        return iv.mpf(x)
    return iv.mpf(x)


def lift(*xs: Scalar) -> tuple:
    """Todos exactos → Fractions; si alguno es intervalo → todos intervalos."""
    if all(is_exact(x) for x in xs):
        return tuple(Fraction(x) for x in xs)
    return tuple(to_interval(x) for x in xs)


def lower(x: Scalar):
    """Extremo inferior como mpf (redondeado hacia abajo si x es exacto)."""
    return mp.make_mpf(to_interval(x)._mpi_[0])


def upper(x: Scalar):
    return mp.make_mpf(to_interval(x)._mpi_[1])


def sign_of(x: Scalar) -> int | None:
    """+1 / -1 / 0 certificados; None si el encierro contiene al cero sin ser cero."""
    if is_exact(x):
        v = Fraction(x)
        return (v > 0) - (v < 0)
    lo, hi = lower(x), upper(x)
    if lo > 0:
        return 1
    if hi < 0:
        return -1
    if lo == 0 and hi == 0:
        return 0
    return None


def overlaps(x: Scalar, y: Scalar) -> bool:
    return not (upper(x) < lower(y) or upper(y) < lower(x))


def midpoint(x: Scalar):
    if is_exact(x):
        return lower(x)
    return (lower(x) + upper(x)) / 2


# ---------------------------------------------------------------------------------
# 📐 Funciones elementales (el resultado es siempre intervalo)
# ---------------------------------------------------------------------------------
def ln(x: Scalar) -> Interval:
    if is_exact(x) and Fraction(x) <= 0:
        raise PreconditionError(f"ln de un valor no positivo: {x}.")
    return iv.ln(to_interval(x))


def exp(x: Scalar) -> Interval:
    return iv.exp(to_interval(x))


def sqrt(x: Scalar) -> Interval:
    return iv.sqrt(to_interval(x))


# ---------------------------------------------------------------------------------
# 🧾 Texto
# ---------------------------------------------------------------------------------
def fmt_scalar(x: Scalar, digits: int = PRINT_DIGITS) -> str:
    """'num/den' (o entero) para exactos; '[lo, hi]' para intervalos."""
    if is_exact(x):
        v = Fraction(x)
        return str(v.numerator) if v.denominator == 1 else f"{v.numerator}/{v.denominator}"
    return iv.nstr(to_interval(x), digits)


def interval_bounds(x: Scalar, digits: int = PRINT_DIGITS) -> list[str]:
    """[lo, hi] como cadenas decimales (para JSON)."""
    return [mp.nstr(lower(x), digits), mp.nstr(upper(x), digits)]


def parse_rational(text: str) -> Fraction:
    """'a/b', entero o decimal finito → Fraction exacto."""
    raw = (text or "").strip()
    try:
        return Fraction(raw)
    except (ValueError, ZeroDivisionError) as e:
        raise PreconditionError(f"No es un racional válido: '{text}'.") from e


# ---------------------------------------------------------------------------------
# ⚖️ Certificación de desigualdades
# ---------------------------------------------------------------------------------
def precision_ladder(start: int | None = None) -> list[int]:
    start = start or default_precision()
    ladder = [b for b in ALLOWED_PRECISIONS if b >= start]
    return ladder or [ALLOWED_PRECISIONS[-1]]


def certify(
    condition: str,
    margin_fn: Callable[[int], Scalar],
    params: dict | None = None,
    precision: int | None = None,
    strict: bool = False,
) -> Verdict:
    """Evalúa margin_fn(bits) subiendo de precisión hasta decidir margen >= 0 (o > 0 si strict).

    Holds/Fails solo cuando el encierro excluye la frontera; al tope de la
    escalera el veredicto es Unknown.
    """
    params = dict(params or {})
    margin: Scalar = Fraction(0)
    bits = precision_ladder(precision)[0]
    for bits in precision_ladder(precision):
        with working_precision(bits):
            margin = margin_fn(bits)
            if not is_exact(margin):
                margin = to_interval(margin)
        if is_exact(margin):
            lo = hi = Fraction(margin)
        else:
            lo, hi = lower(margin), upper(margin)
        if lo > 0 or (not strict and lo == 0):
            return Verdict(condition, VerdictEnum.holds, margin, bits, params)
        if hi < 0 or (strict and hi == 0):
            return Verdict(condition, VerdictEnum.fails, margin, bits, params)
        logger.debug("[CERT] {} sin decidir a {} bits | margen={}", condition, bits, fmt_scalar(margin, 8))
    logger.warning("[CERT] {} queda Unknown al tope de precisión ({} bits)", condition, bits)
    return Verdict(condition, VerdictEnum.unknown, margin, bits, params)
