# app/bounds/region.py
# =================================================================================
# 🗺️ REGIONES DE PARÁMETROS: f, g, h₁, h₂ y las condiciones suficientes
# ---------------------------------------------------------------------------------
# f(p,c)    = ((p-1)c/p) ln(1/c) + (1-c) ln(1/(1-c)) - ((1+c)/p) ln(1+c)
# g(q,c)    = 1/(6q) + (ln q)/q + (1/(2q)) ln(2qπc(1-c))
# h₁(p,q,c) = (ln q)/√q      + ln(2p) - (1/p) ln(1+c)
# h₂(p,q,c) = (ln q)/(2√q)   + ln(2p) - (1/p) ln(1+c)
# Rama a: c = (k+ℓ)/q con h₁ (toda palabra de grado k+ℓ es ordinaria).
# Rama b: c = (k+1)/q con h₂ (ninguna palabra de grado k+ℓ es agujero profundo).
# Cada desigualdad se certifica en intervalos (Holds / Fails / Unknown).
# =================================================================================

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import ceil
from typing import Callable, Literal

from loguru import logger
from mpmath import iv, mp
from sympy import nextprime

from app.core.errors import PreconditionError
from app.kernel.aj import characteristic, q1_gamma
from app.kernel.scalars import (
    Interval,
    Scalar,
    certify,
    default_precision,
    is_exact,
    ln,
    lower,
    sign_of,
    sqrt,
    to_interval,
    upper,
    working_precision,
)
from app.models import ConstantsReport, MarginRow, RegionBranchEnum, Verdict, VerdictEnum

Branch = Literal["a", "b"]
HALF = Fraction(1, 2)
Q0_SEARCH_MAX_EXP = 256                                 # Tope de s al buscar q₀ = p^s.


# ---------------------------------------------------------------------------------
# 📦 Parámetros
# ---------------------------------------------------------------------------------
@dataclass(frozen=True)
class RegionParams:
    """(p, q, k, ℓ) y la rama; c y γ se derivan."""

    p: int
    q: int
    k: int
    ell: int
    branch: RegionBranchEnum = RegionBranchEnum.a

    def __post_init__(self) -> None:
        if characteristic(self.q) != self.p:
            raise PreconditionError(f"q={self.q} no es potencia de p={self.p}.")
        if self.k < 1 or self.ell < 1:
            raise PreconditionError(f"Se requiere k >= 1 y ℓ >= 1 (k={self.k}, ℓ={self.ell}).")
        object.__setattr__(self, "branch", RegionBranchEnum(self.branch))

    @property
    def c(self) -> Fraction:
        top = self.k + self.ell if self.branch is RegionBranchEnum.a else self.k + 1
        return Fraction(top, self.q)

    def gamma(self) -> Scalar:
        """γ = (ℓ-1)/√q; PreconditionError si γ > 1."""
        if (self.ell - 1) ** 2 > self.q:
            raise PreconditionError(f"γ = (ℓ-1)/√q > 1 (q={self.q}, ℓ={self.ell}).")
        return q1_gamma(self.q, self.ell)[1]

    def as_dict(self) -> dict:
        return {"p": self.p, "q": self.q, "k": self.k, "ell": self.ell, "branch": self.branch.value}


@dataclass(frozen=True)
class RegionValues:
    f: Interval
    g: Interval
    h1: Interval
    h2: Interval


# ---------------------------------------------------------------------------------
# 🧮 Funciones de región
# ---------------------------------------------------------------------------------
def _check_open_unit(c: Scalar) -> None:
    if is_exact(c) and not (0 < Fraction(c) < 1):
        raise PreconditionError(f"Se requiere 0 < c < 1 (c={c}).")


def _one_minus(c: Scalar) -> Scalar:
    return 1 - Fraction(c) if is_exact(c) else 1 - to_interval(c)


def _one_plus(c: Scalar) -> Scalar:
    return 1 + Fraction(c) if is_exact(c) else 1 + to_interval(c)


def f_fn(p: Scalar, c: Scalar) -> Interval:
    _check_open_unit(c)
    pp, cc = to_interval(p), to_interval(c)
    return (
        ((pp - 1) * cc / pp) * (-ln(c))
        + (1 - cc) * (-ln(_one_minus(c)))
        - ((1 + cc) / pp) * ln(_one_plus(c))
    )


def g_fn(q: int, c: Scalar) -> Interval:
    _check_open_unit(c)
    cc = to_interval(c)
    return (
        to_interval(Fraction(1, 6 * q))
        + ln(q) / q
        + iv.ln(2 * q * iv.pi * cc * (1 - cc)) / (2 * q)
    )


def _h(p: Scalar, q: int, c: Scalar, half: bool) -> Interval:
    if is_exact(c) and not (0 <= Fraction(c) < 1):
        raise PreconditionError(f"h requiere 0 <= c < 1 (c={c}).")
    pp = to_interval(p)
    head = ln(q) / sqrt(q)
    if half:
        head = head / 2
    return head + iv.ln(2 * pp) - ln(_one_plus(c)) / pp


def h1_fn(p: Scalar, q: int, c: Scalar) -> Interval:
    return _h(p, q, c, half=False)


def h2_fn(p: Scalar, q: int, c: Scalar) -> Interval:
    return _h(p, q, c, half=True)


def region_functions(p: Scalar, q: int, c: Scalar) -> RegionValues:
    """(f, g, h₁, h₂) encerrados a la precisión vigente."""
    if q < 2:
        raise PreconditionError(f"Se requiere q >= 2 (q={q}).")
    return RegionValues(f=f_fn(p, c), g=g_fn(q, c), h1=h1_fn(p, q, c), h2=h2_fn(p, q, c))


def _h_branch(params: RegionParams) -> Interval:
    if params.branch is RegionBranchEnum.a:
        return h1_fn(params.p, params.q, params.c)
    return h2_fn(params.p, params.q, params.c)


# ---------------------------------------------------------------------------------
# ⚖️ Condiciones suficientes
# ---------------------------------------------------------------------------------
def thm7_check(params: RegionParams, precision: int | None = None) -> Verdict:
    """f(p,c) - g(q,c) >= γ·h_rama(p,q,c)."""
    gamma = params.gamma()
    _check_open_unit(params.c)

    def margin(_bits: int) -> Interval:
        return f_fn(params.p, params.c) - g_fn(params.q, params.c) - to_interval(gamma) * _h_branch(params)

    return certify(f"thm7{params.branch.value}", margin, params.as_dict(), precision)


def thm2_rhs(params: RegionParams) -> Interval:
    """(ℓ-1)(ln q/q ó ln q/(2q) + ln(2p)/√q) + 2/(3q) + 3 ln q/(2q)."""
    q, p = params.q, params.p
    lnq = ln(q)
    head = lnq / q if params.branch is RegionBranchEnum.a else lnq / (2 * q)
    return (params.ell - 1) * (head + ln(2 * p) / sqrt(q)) + to_interval(Fraction(2, 3 * q)) + 3 * lnq / (2 * q)


def thm2_check(params: RegionParams, precision: int | None = None) -> Verdict:
    """Versión simplificada: f(p,c) >= lado derecho impreso de la rama."""
    params.gamma()
    _check_open_unit(params.c)

    def margin(_bits: int) -> Interval:
        return f_fn(params.p, params.c) - thm2_rhs(params)

    return certify(f"thm2{params.branch.value}", margin, params.as_dict(), precision)


def gamma_max(p: int, q: int, c: Scalar, branch: Branch = "b", g_at_half: bool = False) -> Interval:
    """max(0, (f(p,c) - g(q, c ó 1/2)) / h_rama(p,q,c)); g_at_half=True es la variante con g(q, 1/2)."""
    h = h1_fn(p, q, c) if RegionBranchEnum(branch) is RegionBranchEnum.a else h2_fn(p, q, c)
    if sign_of(h) != 1:
        raise PreconditionError(f"h no es positivo en (p={p}, q={q}, c={c}).")
    value = (f_fn(p, c) - g_fn(q, HALF if g_at_half else c)) / h
    lo, hi = lower(value), upper(value)
    zero = mp.mpf(0)
    return iv.mpf((max(lo, zero), max(hi, zero)))


# ---------------------------------------------------------------------------------
# 📋 Márgenes de los corolarios
# ---------------------------------------------------------------------------------
def _row(case: str, p: int, q: int, c: Fraction, g_at: Fraction | None, printed: str, expected=VerdictEnum.holds) -> MarginRow:
    return MarginRow(case=case, p=p, q=q, c=c, g_at=c if g_at is None else g_at, printed=Fraction(printed), expected=expected)


MARGIN_ROWS: tuple[MarginRow, ...] = (
    # Familia 1: c = (k+1)/q, g evaluada en c.
    _row("1a-top", 2, 32, HALF, None, "0.041"),
    _row("1a-bottom", 2, 32, Fraction(4, 32), None, "0.0187"),
    _row("1b-top", 3, 27, HALF, None, "0.1772"),
    _row("1b-bottom", 3, 27, Fraction(2, 27), None, "0.0005"),
    _row("1c-top", 5, 25, HALF, None, "0.2933"),
    _row("1c-bottom", 5, 25, Fraction(2, 25), None, "0.0373"),
    _row("1d-top", 7, 7, HALF, None, "0.0837"),
    _row("1d-bottom", 7, 7, Fraction(2, 7), None, "0.0424"),
    # Familia 2: c = (k+ℓ)/q, g evaluada en 1/2.
    _row("2a-top", 2, 256, Fraction(7, 10), HALF, "0.0009"),
    _row("2a-bottom", 2, 256, Fraction(3, 256), HALF, "0.0069", VerdictEnum.fails),
    _row("2b-top", 3, 81, Fraction(8, 10), HALF, "0.002"),
    _row("2b-bottom", 3, 81, Fraction(3, 81), HALF, "0.0189"),
    _row("2c-top", 5, 125, HALF, HALF, "0.0011"),
    _row("2c-bottom", 5, 125, Fraction(2, 125), HALF, "0.0044"),
    _row("2d-top", 7, 2401, Fraction(95, 100), HALF, "0.0004"),
    _row("2d-bottom", 7, 2401, Fraction(2, 2401), HALF, "0.0007"),
)

# Extremo superior del rango de 2c (c <= 0.9), que es el que reproduce 0.0011.
MARGIN_ALT_ROWS: tuple[MarginRow, ...] = (
    _row("2c-top-range", 5, 125, Fraction(9, 10), HALF, "0.0011"),
)


def margin_check(row: MarginRow, precision: int | None = None) -> Verdict:
    """f(p, c) - g(q, g_at) - printed > 0, certificado."""

    def margin(_bits: int) -> Interval:
        return f_fn(row.p, row.c) - g_fn(row.q, row.g_at) - to_interval(row.printed)

    params = {
        "case": row.case,
        "p": row.p,
        "q": row.q,
        "c": str(row.c),
        "g_at": str(row.g_at),
        "printed": str(row.printed),
        "expected": row.expected.value,
    }
    verdict = certify(f"margin-{row.case}", margin, params, precision, strict=True)
    if verdict.verdict is not row.expected:
        logger.warning("[MARGIN] {} esperado={} obtenido={}", row.case, row.expected.value, verdict.verdict.value)
    return verdict


def margin_status(row: MarginRow, verdict: Verdict) -> VerdictEnum:
    """holds si el veredicto certificado coincide con el esperado para la fila."""
    if verdict.verdict is VerdictEnum.unknown:
        return VerdictEnum.unknown
    return VerdictEnum.holds if verdict.verdict is row.expected else VerdictEnum.fails


def corollary_margins(precision: int | None = None, include_alt: bool = True) -> list[tuple[MarginRow, Verdict]]:
    rows = MARGIN_ROWS + (MARGIN_ALT_ROWS if include_alt else ())
    return [(row, margin_check(row, precision)) for row in rows]


# Rangos (cerrados) de cada caso: (p mínimo, p exacto?, q mínimo, c inferior·q, c superior).
_COVERAGE = {
    "1a": (2, True, 32, 4, HALF),
    "1b": (3, True, 27, 2, HALF),
    "1c": (5, True, 25, 2, HALF),
    "1d": (7, False, None, 2, HALF),
    "2a": (2, True, 256, 3, Fraction(7, 10)),
    "2b": (3, True, 81, 3, Fraction(8, 10)),
    "2c": (5, True, 125, 2, Fraction(9, 10)),
    "2d": (7, False, 2401, 2, Fraction(95, 100)),
}


def corollary_coverage(p: int, q: int, c: Fraction, precision: int | None = None) -> list[dict]:
    """Casos de los corolarios cuyo rango contiene (p, q, c) y si sus márgenes extremos se certifican."""
    verdicts = {row.case: v for row, v in corollary_margins(precision, include_alt=False)}
    out = []
    for case, (p_min, exact_p, q_min, low_num, high) in _COVERAGE.items():
        p_ok = p == p_min if exact_p else p >= p_min
        q_ok = q >= (p if q_min is None else q_min)
        c_ok = Fraction(low_num, q) <= c <= high
        if not (p_ok and q_ok and c_ok):
            continue
        certified = all(verdicts[f"{case}-{end}"].holds for end in ("top", "bottom"))
        out.append({
            "case": case,
            "statement": "d <= q-k-1" if case.startswith("1") else "d = q-k-ℓ",
            "c_meaning": "(k+1)/q" if case.startswith("1") else "(k+ℓ)/q",
            "endpoints_certified": certified,
        })
    return out


# ---------------------------------------------------------------------------------
# 📈 Curvatura
# ---------------------------------------------------------------------------------
def fg_second_derivative(p: int, q: int, c: Fraction, printed: bool = False) -> Fraction:
    """∂²/∂c² (f(p,c) - g(q,c)) en racionales exactos.

    printed=True devuelve la forma cerrada tal como aparece impresa, cuyo primer
    término es (1+c)/(c(c-1)); difiere de la derivada exacta en 1/(c-1) + 1/(p(1+c)).
    """
    c = Fraction(c)
    if not (0 < c < 1):
        raise PreconditionError(f"Se requiere 0 < c < 1 (c={c}).")
    tail = (1 - 2 * c + 2 * c**2) / (2 * q * c**2 * (1 - c) ** 2)
    if printed:
        return (1 + c) / (c * (c - 1)) + 1 / (c * p) + tail
    return 1 / (c * (c - 1)) + 1 / (c * p) - 1 / (p * (1 + c)) + tail


def second_difference(fn: Callable[[Fraction], Interval], c: Fraction, h: Fraction = Fraction(1, 1000)) -> Interval:
    """(F(c+h) - 2F(c) + F(c-h)) / h²."""
    return (fn(c + h) - 2 * fn(c) + fn(c - h)) / to_interval(h * h)


def curvature_signs(fn: Callable[[Fraction], Interval], grid: list[Fraction], h: Fraction = Fraction(1, 1000)) -> list[int | None]:
    """Signo certificado de la segunda diferencia en cada punto de la rejilla."""
    return [sign_of(second_difference(fn, c, h)) for c in grid]


# ---------------------------------------------------------------------------------
# 🧷 Constantes de los teoremas simplificados
# ---------------------------------------------------------------------------------
def thm2_g_checks(qs: tuple[int, ...] = (16, 81, 1024), precision: int | None = None) -> tuple[Verdict, ...]:
    """g(q, c) <= g(q, 1/2) <= 2/(3q) + 3 ln q/(2q) en una rejilla de q (y c ≠ 1/2)."""
    out = []
    for q in qs:
        out.append(certify(
            "thm2-g-half",
            lambda _b, q=q: to_interval(Fraction(2, 3 * q)) + 3 * ln(q) / (2 * q) - g_fn(q, HALF),
            {"q": q},
            precision,
        ))
        for c in (Fraction(1, 10), Fraction(3, 10), Fraction(7, 10), Fraction(9, 10)):
            out.append(certify(
                "thm2-g-max",
                lambda _b, q=q, c=c: g_fn(q, HALF) - g_fn(q, c),
                {"q": q, "c": str(c)},
                precision,
            ))
    return tuple(out)


def _q0_for(prime: int, c: Fraction) -> int:
    """Menor potencia de prime con 2/(3q₀) + 3 ln q₀/(2q₀) < (c/2) ln(1/c) (certificado)."""
    target = to_interval(c / 2) * ln(1 / c)
    for s in range(1, Q0_SEARCH_MAX_EXP + 1):
        q0 = prime**s
        gap = target - (to_interval(Fraction(2, 3 * q0)) + 3 * ln(q0) / (2 * q0))
        if sign_of(gap) == 1:
            return q0
    raise PreconditionError(f"No se encontró q₀ <= {prime}^{Q0_SEARCH_MAX_EXP} para c={c}.")


def thm3a_constants(c: Fraction, precision: int | None = None) -> ConstantsReport:
    """p₀ = (1+c)/(1-c), primo más pequeño >= p₀, q₀ y γ₀ = (f(p₀,c) - g(q₀,1/2))/h₁(p₀,q₀,0)."""
    c = Fraction(c)
    if not (0 < c < 1):
        raise PreconditionError(f"Se requiere 0 < c < 1 (c={c}).")
    p0 = (1 + c) / (1 - c)
    prime = int(nextprime(ceil(p0) - 1))
    bits = precision or default_precision()
    with working_precision(bits):
        q0 = _q0_for(prime, c)
        gamma0 = (f_fn(p0, c) - g_fn(q0, HALF)) / h1_fn(p0, q0, 0)
    checks = (
        certify("thm3a-f-lower", lambda _b: f_fn(prime, c) - to_interval(c / 2) * ln(1 / c), {"p": prime, "c": str(c)}, precision),
        certify("thm3a-gamma0-positive", lambda _b: (f_fn(p0, c) - g_fn(q0, HALF)) / h1_fn(p0, q0, 0), {"c": str(c), "q0": q0}, precision, strict=True),
    )
    logger.debug("[THM3] c={} | p0={} primo={} q0={}", c, p0, prime, q0)
    return ConstantsReport(c=c, p=None, p0=p0, prime=prime, q0=q0, gamma0=gamma0, checks=checks)


def _coverage_at(p: int, q: int, c: Fraction, precision: int | None) -> dict:
    rows = corollary_coverage(p, q, c, precision)
    return {
        "c": str(c),
        "cases": [row["case"] for row in rows],
        "certified": [row["case"] for row in rows if row["endpoints_certified"]],
    }


_COR2_Q0 = {2: 2**8, 3: 3**4, 5: 5**3}
THM3B_C_TOP = Fraction(7, 10)                           # 3 <= k+ℓ <= 0.7q


def thm3b_constants(p: int, precision: int | None = None) -> ConstantsReport:
    """q₀ de la familia 2 para p y γ₀ = (f(p, 0.7) - g(q₀,1/2))/h₁(p,q₀,0), con la cobertura de los extremos."""
    if characteristic(p) != p:
        raise PreconditionError(f"p={p} debe ser primo.")
    q0 = _COR2_Q0.get(p, 7**4)
    bits = precision or default_precision()
    with working_precision(bits):
        gamma0 = (f_fn(p, THM3B_C_TOP) - g_fn(q0, HALF)) / h1_fn(p, q0, 0)
    c_low = Fraction(3, q0)
    checks = tuple(
        certify("thm3b-endpoint", lambda _b, c=c: f_fn(p, c) - g_fn(q0, HALF), {"p": p, "q0": q0, "c": str(c)}, precision, strict=True)
        for c in (c_low, THM3B_C_TOP)
    )
    coverage = tuple(_coverage_at(p, q0, c, precision) for c in (c_low, THM3B_C_TOP))
    return ConstantsReport(c=THM3B_C_TOP, p=p, p0=Fraction(p), prime=p, q0=q0, gamma0=gamma0, checks=checks, coverage=coverage)


def thm23_constants(c: Fraction | None = None, p: int | None = None, precision: int | None = None) -> ConstantsReport:
    """Variante por c (p₀ = (1+c)/(1-c)) o por primo p; ambas añaden las comprobaciones de g."""
    if (c is None) == (p is None):
        raise PreconditionError("Indica exactamente uno: c o p.")
    report = thm3a_constants(c, precision) if c is not None else thm3b_constants(p, precision)
    return ConstantsReport(
        c=report.c,
        p=report.p,
        p0=report.p0,
        prime=report.prime,
        q0=report.q0,
        gamma0=report.gamma0,
        checks=report.checks + thm2_g_checks(precision=precision),
        coverage=report.coverage,
    )
