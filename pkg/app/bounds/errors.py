# app/bounds/errors.py
# =================================================================================
# 📉 TÉRMINOS DE ERROR: cotas para W_j(ε) y N_{k+ℓ}(ε, r) (D = F_q)
# ---------------------------------------------------------------------------------
# - wj_error_bound:  (1 - q^{-ℓ}) C(ℓ-1, ℓ+k-j) q^{(ℓ+k-j)/2} A_j(q, q₁/q)
# - ndr_error_bound: Σ_{j=k+1}^{k+ℓ} C(j, r) · (lo anterior)
# - pbound_check:    C(q, r) >= C(ℓ-1, ℓ+k-r) q^{(r+ℓ-k)/2} A_r(q, q₁/q) ⇒ P(Y >= r) > 0
# - binomial_lower_bound: cota tipo Stirling para ln C(n, m), 0 < m < n.
# Exacto cuando todo es racional; intervalo si aparece √q irracional.
# Todas las funciones evalúan a la precisión vigente (working_precision).
# =================================================================================

from __future__ import annotations

from fractions import Fraction
from math import comb, isqrt

from mpmath import iv

from app.core.errors import PreconditionError
from app.kernel.aj import aj_at_q
from app.kernel.scalars import Interval, Scalar, certify, is_exact, ln, sqrt, to_interval
from app.models import Verdict


def half_power(q: int, t: int) -> Scalar:
    """q^{t/2}: exacto si t es par o q es cuadrado perfecto."""
    if t % 2 == 0:
        return Fraction(q) ** (t // 2)
    root = isqrt(q)
    if root * root == q:
        return Fraction(root) ** t
    return to_interval(Fraction(q) ** (t // 2)) * sqrt(q)


def _mul(*xs: Scalar) -> Scalar:
    """Producto que se mantiene exacto mientras todos los factores lo sean."""
    acc: Scalar = Fraction(1)
    for x in xs:
        if is_exact(acc) and is_exact(x):
            acc = acc * Fraction(x)
        else:
            acc = to_interval(acc) * to_interval(x)
    return acc


def _add(x: Scalar, y: Scalar) -> Scalar:
    if is_exact(x) and is_exact(y):
        return Fraction(x) + Fraction(y)
    return to_interval(x) + to_interval(y)


def _check_j(k: int, ell: int, j: int) -> None:
    if k < 1 or ell < 1:
        raise PreconditionError(f"Se requiere k >= 1 y ℓ >= 1 (k={k}, ℓ={ell}).")
    if not (k + 1 <= j <= k + ell):
        raise PreconditionError(f"La cota de W_j requiere k+1 <= j <= k+ℓ (j={j}, k={k}, ℓ={ell}).")


# ---------------------------------------------------------------------------------
# W_j y N_{k+ℓ}(ε, r)
# ---------------------------------------------------------------------------------
def wj_error_bound(q: int, k: int, ell: int, j: int) -> Scalar:
    """Cota de |W_j(ε) - C(q, j) q^{k-j}| válida para toda clase ε."""
    _check_j(k, ell, j)
    t = ell + k - j
    return _mul(1 - Fraction(1, q**ell), comb(ell - 1, t), half_power(q, t), aj_at_q(q, ell, j))


def wj_main_term(q: int, k: int, j: int) -> Fraction:
    """C(q, j) q^{k-j}."""
    return comb(q, j) * Fraction(q) ** (k - j)


def ndr_error_bound(q: int, k: int, ell: int, r: int) -> Scalar:
    """Cota de |N_{k+ℓ}(ε, r) - término principal|."""
    if r < 0:
        raise PreconditionError(f"r={r} debe ser >= 0.")
    total: Scalar = Fraction(0)
    for j in range(k + 1, k + ell + 1):
        if comb(j, r) == 0:
            continue
        total = _add(total, _mul(comb(j, r), comb(ell - 1, k + ell - j), half_power(q, k + ell - j), aj_at_q(q, ell, j)))
    return _mul(1 - Fraction(1, q**ell), total)


# ---------------------------------------------------------------------------------
# Condición suficiente P(Y >= r) > 0
# ---------------------------------------------------------------------------------
def pbound_rhs(q: int, k: int, ell: int, r: int) -> Scalar:
    _check_j(k, ell, r)
    return _mul(comb(ell - 1, ell + k - r), half_power(q, r + ell - k), aj_at_q(q, ell, r))


def pbound_check(q: int, k: int, ell: int, r: int, precision: int | None = None) -> Verdict:
    """C(q, r) >= C(ℓ-1, ℓ+k-r) q^{(r+ℓ-k)/2} A_r(q, q₁/q).

    r = k+ℓ: toda palabra de grado k+ℓ es ordinaria; r = k+1: ninguna es agujero profundo.
    """
    _check_j(k, ell, r)

    def margin(_bits: int) -> Scalar:
        rhs = pbound_rhs(q, k, ell, r)
        return Fraction(comb(q, r)) - rhs if is_exact(rhs) else to_interval(comb(q, r)) - rhs

    return certify("pbound", margin, {"q": q, "k": k, "ell": ell, "r": r}, precision)


# ---------------------------------------------------------------------------------
# Cota inferior de binomiales
# ---------------------------------------------------------------------------------
def binomial_lower_bound(n: Scalar, m: Scalar) -> Interval:
    """ln de e^{-1/6} (n / (2π m (n-m)))^{1/2} (n/m)^m (n/(n-m))^{n-m}, para 0 < m < n."""
    n_iv, m_iv = to_interval(n), to_interval(m)
    if is_exact(n) and is_exact(m) and not (0 < Fraction(m) < Fraction(n)):
        raise PreconditionError(f"La cota binomial requiere 0 < m < n (n={n}, m={m}).")
    rest = n_iv - m_iv
    return (
        -to_interval(Fraction(1, 6))
        + iv.ln(n_iv / (2 * iv.pi * m_iv * rest)) / 2
        + m_iv * iv.ln(n_iv / m_iv)
        + rest * iv.ln(n_iv / rest)
    )


def ln_binomial(n: int, m: int) -> Interval:
    """ln C(n, m) exacto encerrado (entero grande → intervalo)."""
    value = comb(n, m)
    if value == 0:
        raise PreconditionError(f"C({n}, {m}) = 0 no tiene logaritmo.")
    return ln(value)
