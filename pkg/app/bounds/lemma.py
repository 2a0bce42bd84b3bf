# app/bounds/lemma.py
# =================================================================================
# ⛰️ COTAS DE PUNTO DE SILLA PARA ln A_j(q, q₁/q)
# ---------------------------------------------------------------------------------
# Para 0 < y < 1:
#   ln A_j <= -j ln y - q₁ ln(1-y) - ((q-q₁)/p) ln(1-y^p)        (saddle_value)
# - lemma_general: y = (j/(q+j))^{1/p}.
# - lemma_large:   versión simplificada en c = j/q y γ = q₁/q; solo vale con
#                  0 < c <= 1 (se marca si no).
# - saddle_p2:     raíz exacta de la ecuación de silla para p = 2.
# - lemma_chain:   veredictos certificados de la cadena de cotas.
# Todo se evalúa a la precisión vigente (working_precision).
# =================================================================================

from __future__ import annotations

from fractions import Fraction

from mpmath import iv

from app.core.errors import PreconditionError
from app.kernel.aj import characteristic, ln_aj_at_q, q1_gamma
from app.kernel.scalars import (
    Interval,
    Scalar,
    certify,
    default_precision,
    is_exact,
    ln,
    sign_of,
    sqrt,
    to_interval,
    working_precision,
)
from app.models import FlaggedBound, Verdict

EXP1_WINDOW = Fraction(3, 5)                            # e^{-t} <= 1 - 3t/4 para 0 <= t <= 0.6


def _check_j(j: int) -> None:
    if j < 1:
        raise PreconditionError(f"La cota requiere j >= 1 (j={j}).")


def saddle_value(q: int, q1: Scalar, p: int, j: int, y: Scalar) -> Interval:
    """-j ln y - q₁ ln(1-y) - ((q-q₁)/p) ln(1-y^p)."""
    y_iv = to_interval(y)
    q1_iv = to_interval(q1)
    value = -j * iv.ln(y_iv) - ((to_interval(q) - q1_iv) / p) * iv.ln(1 - y_iv**p)
    if not (is_exact(q1) and Fraction(q1) == 0):
        value = value - q1_iv * iv.ln(1 - y_iv)
    return value


def lemma_general(q: int, ell: int, j: int) -> Interval:
    """(j/p) ln((q+j)/j) + ((q-q₁)/p) ln((q+j)/q) - q₁ ln(1 - (j/(q+j))^{1/p})."""
    _check_j(j)
    p = characteristic(q)
    q1, _ = q1_gamma(q, ell)
    value = to_interval(Fraction(j, p)) * ln(Fraction(q + j, j)) + ((to_interval(q) - to_interval(q1)) / p) * ln(Fraction(q + j, q))
    if is_exact(q1) and Fraction(q1) == 0:
        return value
    y = iv.exp(ln(Fraction(j, q + j)) / p)
    return value - to_interval(q1) * iv.ln(1 - y)


def lemma_large(q: int, ell: int, j: int) -> FlaggedBound:
    """q((c/p) ln((1+c)/c) + ((1-γ)/p) ln(1+c) + γ ln(2p)), c = j/q; marca si c ∉ (0, 1]."""
    _check_j(j)
    p = characteristic(q)
    _, gamma = q1_gamma(q, ell)
    c = Fraction(j, q)
    g = to_interval(gamma)
    value = q * (
        to_interval(c / p) * ln((1 + c) / c)
        + ((1 - g) / p) * ln(1 + c)
        + g * ln(2 * p)
    )
    notes = []
    if not (0 < c <= 1):
        notes.append(f"c = j/q = {c} fuera de (0, 1]: ln((q+j)/j) < ln 2")
    if sign_of(to_interval(EXP1_WINDOW) - iv.ln2 / p) != 1:
        notes.append(f"ln 2 / p fuera de [0, 0.6] (p={p})")
    return FlaggedBound(value=value, window_ok=not notes, note="; ".join(notes))


def saddle_p2(gamma: Scalar, c: Scalar) -> Interval:
    """y(γ, c) = (√(γ² + 4c² + 4c) - γ) / (2(1+c)), raíz de la ecuación de silla con p = 2."""
    g, cc = to_interval(gamma), to_interval(c)
    if is_exact(c) and Fraction(c) <= 0:
        raise PreconditionError(f"saddle_p2 requiere c > 0 (c={c}).")
    if is_exact(gamma) and not (0 <= Fraction(gamma) <= 1):
        raise PreconditionError(f"saddle_p2 requiere 0 <= γ <= 1 (γ={gamma}).")
    return (sqrt(g**2 + 4 * cc**2 + 4 * cc) - g) / (2 * (1 + cc))


def saddle_residual(gamma: Scalar, c: Scalar, y: Scalar) -> Interval:
    """γ y/(1-y) + (1-γ) y²/(1-y²) - c (cero en la raíz, ecuación dividida por q)."""
    g, y_iv = to_interval(gamma), to_interval(y)
    return g * y_iv / (1 - y_iv) + (1 - g) * y_iv**2 / (1 - y_iv**2) - to_interval(c)


def saddle_bound_p2(q: int, ell: int, j: int) -> tuple[Interval, Interval]:
    """(y, cota de ln A_j con esa y) para q potencia de 2."""
    _check_j(j)
    p = characteristic(q)
    if p != 2:
        raise PreconditionError(f"saddle_p2 es exacto solo para p = 2 (q={q}).")
    q1, gamma = q1_gamma(q, ell)
    y = saddle_p2(gamma, Fraction(j, q))
    return y, saddle_value(q, q1, 2, j, y)


def lemma_chain(q: int, ell: int, j: int, precision: int | None = None) -> list[Verdict]:
    """ln A_j <= lemma_general <= lemma_large y, para p = 2, silla exacta <= lemma_general.

    Con ℓ = 1 las tres cotas coinciden idénticamente y solo se certifica la primera.
    """
    params = {"q": q, "ell": ell, "j": j}
    out = []
    with working_precision(precision or default_precision()):
        has_log = ln_aj_at_q(q, ell, j) is not None
        window_ok = lemma_large(q, ell, j).window_ok
    if has_log:
        out.append(certify("lemma-general", lambda _b: lemma_general(q, ell, j) - ln_aj_at_q(q, ell, j), params, precision))
    if ell > 1 and window_ok:
        out.append(certify("lemma-large", lambda _b: lemma_large(q, ell, j).value - lemma_general(q, ell, j), params, precision))
    if ell > 1 and characteristic(q) == 2:
        out.append(certify("saddle-p2", lambda _b: lemma_general(q, ell, j) - saddle_bound_p2(q, ell, j)[1], params, precision))
    return out
