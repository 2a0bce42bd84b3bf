# app/models.py
# =================================================================================
# 🏛️ MODELOS DE DOMINIO (resultados inmutables del laboratorio)
# ---------------------------------------------------------------------------------
# Este archivo define los resultados que producen los módulos de cálculo:
# - Enums para consistencia (origen de una tabla, rama de un momento,
#   veredicto de una desigualdad, rama del teorema de regiones).
# - Dataclasses congeladas: se pueden pasar entre hilos/procesos sin copia.
# La serialización a JSON vive en app/schemas.py.
# =================================================================================

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any

from app.counting.classes import LeadClass


# 🗂️ ENUMS PARA CONSISTENCIA DE DATOS
# ---------------------------------------------------------------------------------
class SourceEnum(str, enum.Enum):   # Procedencia de una tabla N_d(ε, r).
    formula = "formula"
    brute_force = "brute-force"


class MomentBranchEnum(str, enum.Enum):  # Rama del momento factorial.
    trivial = "trivial"             # m <= k
    boundary = "boundary"           # k+1 <= m <= k+ℓ
    zero = "zero"                   # m > k+ℓ


class VerdictEnum(str, enum.Enum):  # Veredicto de tres valores.
    holds = "holds"
    fails = "fails"
    unknown = "unknown"


class RegionBranchEnum(str, enum.Enum):  # Rama de la condición de región.
    a = "a"                         # c = (k+ℓ)/q, h_1: todas las palabras de grado k+ℓ son ordinarias.
    b = "b"                         # c = (k+1)/q, h_2: ninguna es agujero profundo.


# 📊 TABLAS Y MOMENTOS
# ---------------------------------------------------------------------------------
@dataclass(frozen=True)
class DistTable:
    """N_d(ε, r) para r = 0..d, con su procedencia."""

    d: int
    epsilon: LeadClass
    counts: tuple[int, ...]
    source: SourceEnum

    @property
    def ell(self) -> int:
        return self.epsilon.ell

    @property
    def q(self) -> int:
        return self.epsilon.field.q

    @property
    def total(self) -> int:
        return sum(self.counts)


@dataclass(frozen=True)
class MomentReport:
    """E(Y^{m̲}) exacto y la rama de la fórmula que lo produjo."""

    m: int
    value: Fraction
    branch: MomentBranchEnum


# 🕳️ CLASIFICACIÓN DE PALABRAS
# ---------------------------------------------------------------------------------
@dataclass(frozen=True)
class WordClassification:
    """Distancia de una palabra al código y sus banderas."""

    word: tuple[int, ...]
    coeffs: tuple[int, ...]          # Polinomio interpolador (grado bajo primero).
    degree: int
    distance: int
    n: int
    k: int

    @property
    def is_codeword(self) -> bool:
        return self.degree <= self.k - 1

    @property
    def is_deep_hole(self) -> bool:
        return self.distance == self.n - self.k

    @property
    def is_ordinary(self) -> bool:
        return not self.is_codeword and self.distance == self.n - self.degree

    @property
    def violates_bounds(self) -> bool:
        """True si contradice n-k >= d >= n-deg(u) (solo aplica con k <= deg <= n-1)."""
        if not (self.k <= self.degree <= self.n - 1):
            return False
        return not (self.n - self.k >= self.distance >= self.n - self.degree)


# ⚖️ VEREDICTOS CERTIFICADOS
# ---------------------------------------------------------------------------------
@dataclass(frozen=True)
class Verdict:
    """Resultado de tres valores con el margen certificado (intervalo)."""

    condition: str
    verdict: VerdictEnum
    margin: Any                      # iv.mpf: margen lado izquierdo - lado derecho.
    precision_bits: int
    params: dict[str, Any] = field(default_factory=dict)

    @property
    def holds(self) -> bool:
        return self.verdict is VerdictEnum.holds

    @property
    def fails(self) -> bool:
        return self.verdict is VerdictEnum.fails


# 🔭 BARRIDO DE AGUJEROS PROFUNDOS
# ---------------------------------------------------------------------------------
@dataclass(frozen=True)
class ScanRecord:
    """Una palabra del barrido (representante mónico con coeficientes bajos a cero)."""

    coeffs: tuple[int, ...]
    degree: int
    distance: int
    deep_hole: bool
    ordinary: bool


@dataclass(frozen=True)
class DeepHoleScanReport:
    """Resumen del barrido exhaustivo para (q, k, ℓ)."""

    q: int
    k: int
    ell: int
    words_scanned: int
    degree_k_all_deep: bool
    deep_holes_above_k: tuple[tuple[int, ...], ...]
    bound_violations: tuple[tuple[int, ...], ...]
    ordinary_by_degree: dict[int, int]
    scanned_by_degree: dict[int, int]
    count_mismatches: tuple[tuple[int, ...], ...] = ()


# 📐 COTAS CON BANDERA Y REPORTES ANALÍTICOS
# ---------------------------------------------------------------------------------
@dataclass(frozen=True)
class FlaggedBound:
    """Valor de una cota junto con si su ventana de validez se cumple."""

    value: Any                       # iv.mpf
    window_ok: bool
    note: str = ""


@dataclass(frozen=True)
class LiWanReport:
    """ln C(q/p + q₁ + j - 1, j) frente a ln A_j(q, q₁/q)."""

    q: int
    ell: int
    j: int
    ln_liwan: Any
    ln_aj: Any                       # None si A_j = 0.
    difference: Any                  # None si A_j = 0 (diferencia infinita).
    identity: Any = None             # ln((q₁+j)/q₁) cuando p = q y j < p.


@dataclass(frozen=True)
class ConstantsReport:
    """Constantes derivadas (p₀, q₀, γ₀) y las comprobaciones que las acompañan."""

    c: Fraction | None
    p: int | None
    p0: Fraction | None
    prime: int | None
    q0: int | None
    gamma0: Any
    checks: tuple[Verdict, ...] = ()
    coverage: tuple[dict[str, Any], ...] = ()       # Variante por p: casos que cubren cada extremo de c.


@dataclass(frozen=True)
class MarginRow:
    """Un margen de los corolarios: f(p, c) - g(q, c_g) > printed."""

    case: str
    p: int
    q: int
    c: Fraction
    g_at: Fraction                   # c (familia 1) o 1/2 (familia 2).
    printed: Fraction
    expected: VerdictEnum
