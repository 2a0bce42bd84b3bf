# app/kernel/aj.py
# =================================================================================
# 🔄 A_j(u, w): FUNCIÓN DE CICLOS DE PERMUTACIONES (tres evaluadores independientes)
# ---------------------------------------------------------------------------------
# A_j(u, w) = (1/j!) Σ_{τ ∈ S_j} u^{l(τ)} w^{l'(τ)}
#   l(τ)  = número total de ciclos
#   l'(τ) = ciclos cuya longitud NO es múltiplo de p
# Evaluadores:
# - aj_permutation: recorre tipos de ciclo (particiones de j) con pesos exactos.
# - aj_series:      [z^j] (1-z)^{-uw} (1-z^p)^{-(u-uw)/p} por convolución.
# - aj_binsum:      Σ_i C(uw+j-ip-1, j-ip) C((u-uw)/p+i-1, i).
# - ln_aj_binsum:   la misma suma en escala logarítmica (j grande).
# Entradas exactas → resultado exacto; si hay un intervalo, todo es intervalo.
# =================================================================================

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial, isqrt, prod
from typing import Literal

from loguru import logger
from mpmath import iv, mp
from sympy import primefactors
from sympy.utilities.iterables import partitions

from app.core.budget import require_budget
from app.core.errors import FieldError, MethodLimitError, PreconditionError
from app.kernel.binom import gen_binom
from app.kernel.scalars import Interval, Scalar, exp, is_exact, lift, ln, sqrt, to_interval
from app.kernel.scalars import midpoint as _mid

PERMUTATION_MAX_J = 20                                  # Particiones de 20: 627 tipos de ciclo.
LOG_SPACE_MIN_J = 64                                    # A partir de aquí A_j(q, q1/q) va por logaritmos.

AjMethod = Literal["perm", "series", "binsum"]


# ---------------------------------------------------------------------------------
# 📦 Parámetros
# ---------------------------------------------------------------------------------
def characteristic(q: int) -> int:
    """p tal que q = p^s; FieldError si q no es potencia de primo."""
    factors = primefactors(q) if q >= 2 else []
    if len(factors) != 1:
        raise FieldError(f"q={q} no es potencia de un primo.")
    return int(factors[0])


def q1_gamma(q: int, ell: int) -> tuple[Scalar, Scalar]:
    """q₁ = min{q, (ℓ-1)√q} y γ = q₁/q; exactos salvo que (ℓ-1)√q sea irracional y < q."""
    if ell < 1:
        raise PreconditionError(f"q₁ requiere ℓ >= 1 (ℓ={ell}).")
    if ell == 1:
        return Fraction(0), Fraction(0)
    if (ell - 1) ** 2 >= q:                              # (ℓ-1)√q >= q
        return Fraction(q), Fraction(1)
    root = isqrt(q)
    if root * root == q:
        q1 = Fraction((ell - 1) * root)
        return q1, q1 / q
    q1 = (ell - 1) * sqrt(q)
    return q1, q1 / q


@dataclass(frozen=True)
class AjParams:
    """j, p y el punto (u, w); exactos cuando son racionales."""

    j: int
    p: int
    u: Scalar
    w: Scalar

    def __post_init__(self) -> None:
        if self.j < 0:
            raise PreconditionError(f"A_j requiere j >= 0 (j={self.j}).")
        if characteristic(self.p) != self.p:
            raise PreconditionError(f"p={self.p} debe ser primo.")
        for name in ("u", "w"):
            v = getattr(self, name)
            if isinstance(v, int):
                object.__setattr__(self, name, Fraction(v))

    @classmethod
    def from_q_ell(cls, j: int, q: int, ell: int) -> AjParams:
        """u = q, w = q₁/q, p = característica de q (a la precisión vigente)."""
        _, gamma = q1_gamma(q, ell)
        return cls(j=j, p=characteristic(q), u=Fraction(q), w=gamma)

    @property
    def is_exact(self) -> bool:
        return is_exact(self.u) and is_exact(self.w)

    def uw_beta(self) -> tuple[Scalar, Scalar]:
        """(uw, (u - uw)/p) en el modo común (exacto o intervalo)."""
        u, w = lift(self.u, self.w)
        uw = u * w
        return uw, (u - uw) / self.p


def _one(exact_mode: bool) -> Scalar:
    return Fraction(1) if exact_mode else to_interval(1)


def _coerce(x: Fraction, exact_mode: bool) -> Scalar:
    return x if exact_mode else to_interval(x)


# ---------------------------------------------------------------------------------
# 1️⃣ Tipos de ciclo
# ---------------------------------------------------------------------------------
def aj_permutation(params: AjParams) -> Scalar:
    """Σ sobre particiones de j de u^{#ciclos} w^{#ciclos no múltiplos de p} / ∏ i^{m_i} m_i!."""
    j, p = params.j, params.p
    if j > PERMUTATION_MAX_J:
        raise MethodLimitError(f"aj_permutation admite j <= {PERMUTATION_MAX_J} (j={j}).")
    u, w = lift(params.u, params.w)
    exact_mode = params.is_exact
    if j == 0:
        return _one(exact_mode)
    total = _coerce(Fraction(0), exact_mode)
    for cycle_type in partitions(j):                     # sympy reutiliza el dict: se consume en el acto.
        cycles = sum(cycle_type.values())
        free = sum(m for size, m in cycle_type.items() if size % p)
        weight = Fraction(1, prod(size**m * factorial(m) for size, m in cycle_type.items()))
        total = total + _coerce(weight, exact_mode) * u**cycles * w**free
    return total


# ---------------------------------------------------------------------------------
# 2️⃣ Serie generatriz
# ---------------------------------------------------------------------------------
def _rising_coeffs(x: Scalar, count: int, exact_mode: bool) -> list[Scalar]:
    """Coeficientes C(x+n-1, n), n = 0..count-1, de (1-t)^{-x} (recurrencia multiplicativa)."""
    out = [_one(exact_mode)]
    for n in range(1, count):
        out.append(out[-1] * (x + n - 1) / n)
    return out


def aj_series(params: AjParams, budget: int | None = None) -> Scalar:
    """[z^j] de (1-z)^{-uw} · (1-z^p)^{-(u-uw)/p} convolucionando ambas series."""
    j, p = params.j, params.p
    require_budget(f"aj_series (j={j}, p={p})", (j + 1) * (j // p + 2), budget)
    exact_mode = params.is_exact
    uw, beta = params.uw_beta()
    left = _rising_coeffs(uw, j + 1, exact_mode)          # (1-z)^{-uw}
    right = _rising_coeffs(beta, j // p + 1, exact_mode)  # (1-t)^{-β} con t = z^p
    dense = [_coerce(Fraction(0), exact_mode)] * (j + 1)
    for i, b in enumerate(right):
        dense[i * p] = b
    total = _coerce(Fraction(0), exact_mode)
    for m in range(j + 1):
        total = total + dense[m] * left[j - m]
    return total


# ---------------------------------------------------------------------------------
# 3️⃣ Suma binomial
# ---------------------------------------------------------------------------------
def aj_binsum(params: AjParams, budget: int | None = None) -> Scalar:
    """Σ_{0<=i<=j/p} C(uw+j-ip-1, j-ip) · C((u-uw)/p+i-1, i)."""
    j, p = params.j, params.p
    require_budget(f"aj_binsum (j={j}, p={p})", (j // p + 1) * (j + 1), budget)
    exact_mode = params.is_exact
    uw, beta = params.uw_beta()
    total = _coerce(Fraction(0), exact_mode)
    for i in range(j // p + 1):
        m = j - i * p
        total = total + gen_binom(uw + m - 1, m) * gen_binom(beta + i - 1, i)
    return total


def _log_rising(x: Scalar, count: int) -> list[Interval | None]:
    """ln C(x+n-1, n) para n = 0..count-1 por sumas prefijas; None = coeficiente nulo."""
    if is_exact(x) and Fraction(x) == 0:
        return [to_interval(0)] + [None] * (count - 1)
    out: list[Interval | None] = [to_interval(0)]
    acc = to_interval(0)
    for n in range(1, count):
        acc = acc + ln((x + n - 1) / n)
        out.append(acc)
    return out


def log_sum_exp(terms: list[Interval]) -> Interval:
    """ln Σ e^{t_i}, referenciado al término de mayor punto medio."""
    ref = max(terms, key=_mid)
    acc = to_interval(0)
    for t in terms:
        acc = acc + exp(t - ref)
    return ref + ln(acc)


def ln_aj_binsum(params: AjParams) -> Interval | None:
    """Encierro de ln A_j(u, w); None si A_j = 0 exactamente (p.ej. uw = 0 y p ∤ j)."""
    j, p = params.j, params.p
    uw, beta = params.uw_beta()
    left = _log_rising(uw, j + 1)
    right = _log_rising(beta, j // p + 1)
    terms = [left[j - i * p] + right[i] for i in range(j // p + 1) if left[j - i * p] is not None and right[i] is not None]
    if not terms:
        return None
    return log_sum_exp(terms)


# ---------------------------------------------------------------------------------
# 🎯 Accesos de conveniencia
# ---------------------------------------------------------------------------------
def evaluate_aj(params: AjParams, method: AjMethod = "binsum", budget: int | None = None) -> Scalar:
    if method == "perm":
        return aj_permutation(params)
    if method == "series":
        return aj_series(params, budget)
    if method == "binsum":
        return aj_binsum(params, budget)
    raise PreconditionError(f"Método desconocido: '{method}' (perm|series|binsum).")


def aj_at_q(q: int, ell: int, j: int) -> Scalar:
    """A_j(q, q₁/q) a la precisión vigente; escala logarítmica para j >= LOG_SPACE_MIN_J."""
    params = AjParams.from_q_ell(j, q, ell)
    if j < LOG_SPACE_MIN_J:
        return aj_series(params, budget=None)
    value = ln_aj_binsum(params)
    logger.debug("[AJ] q={} ℓ={} j={} por logaritmos", q, ell, j)
    return Fraction(0) if value is None else exp(value)


def ln_aj_at_q(q: int, ell: int, j: int) -> Interval | None:
    """ln A_j(q, q₁/q); None si A_j = 0."""
    return ln_aj_binsum(AjParams.from_q_ell(j, q, ell))


def relative_gap(x: Scalar, y: Scalar):
    """|mid(x) - mid(y)| / |mid(y)| a la precisión de los intervalos (para comparar evaluadores)."""
    with mp.workprec(iv.prec):
        mx, my = _mid(x), _mid(y)
        return abs(mx - my) / abs(my) if my != 0 else abs(mx - my)

