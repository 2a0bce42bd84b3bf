# app/counting/formula.py
# =================================================================================
# 🔢 CONTEO EXACTO: W_j(ε), N_d(ε, r) Y MOMENTOS FACTORIALES
# ---------------------------------------------------------------------------------
# - W_j(ε): pares (η, S) con η ∈ E_{d-j}, S ⊆ D de tamaño j y η·∏⟨x-α⟩ = ε.
#   Se enumeran los subconjuntos por combinaciones lexicográficas y las clases
#   η en orden odómetro; la reducción es una suma exacta de enteros.
# - N_d(ε, r): término principal (racionales exactos) + términos de frontera.
# - E(Y^{m̲}): tres ramas (m <= k, k+1 <= m <= k+ℓ, m > k+ℓ).
# - Extras: distribución exacta de Y y clasificación de palabras por conteo.
# =================================================================================

from __future__ import annotations

import itertools
from collections import Counter
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial, perm
from typing import Literal

from loguru import logger

from app.algebra.field import FieldSpec
from app.algebra.poly import EvalSet, Poly
from app.core.budget import require_budget
from app.core.errors import PolyError, PreconditionError, RsDistError
from app.counting.classes import LeadClass, class_mul, class_of, iter_classes, root_class
from app.models import DistTable, MomentBranchEnum, MomentReport, SourceEnum

SumLimit = Literal["thm5", "thm6"]


# ---------------------------------------------------------------------------------
# 🧮 W_j(ε)
# ---------------------------------------------------------------------------------
def wj_cost(q: int, ell: int, d: int, j: int, n: int) -> int:
    """Estimación de operaciones: q^{min(d-j, ℓ)} · C(n, j) · j."""
    return q ** min(d - j, ell) * comb(n, j) * max(j, 1)


@lru_cache(maxsize=512)
def _wj_distribution(field: FieldSpec, ell: int, d: int, j: int, D: EvalSet) -> dict[tuple[int, ...], int]:
    # Multiconjunto de clases ∏_{α∈S} ⟨x-α⟩ sobre los j-subconjuntos de D (f se anula en S).
    subset_products: Counter[LeadClass] = Counter()
    identity = LeadClass.identity(field, ell)
    linear = {a: root_class(field, ell, a) for a in D}
    for S in itertools.combinations(D.elements, j):
        cls = identity
        for a in S:
            cls = class_mul(cls, linear[a])
        subset_products[cls] += 1

    totals: Counter[tuple[int, ...]] = Counter()
    for eta in iter_classes(field, d - j, ell):
        for cls, mult in subset_products.items():
            totals[class_mul(eta, cls).coeffs] += mult
    logger.debug("[WJ] q={} ℓ={} d={} j={} n={} | clases distintas={}", field.q, ell, d, j, D.n, len(totals))
    return dict(totals)


def wj_distribution(
    field: FieldSpec, ell: int, d: int, j: int, D: EvalSet, budget: int | None = None
) -> dict[tuple[int, ...], int]:
    """W_j(ε) para todas las clases ε a la vez (claves: vectores c_1..c_ℓ)."""
    if not (0 <= j <= d):
        raise PreconditionError(f"W_j requiere 0 <= j <= d (j={j}, d={d}).")
    if j > D.n:
        return {}                                         # C(n, j) = 0: no hay j-subconjuntos.
    require_budget(f"W_{j} (q={field.q}, ℓ={ell}, d={d}, n={D.n})", wj_cost(field.q, ell, d, j, D.n), budget)
    return _wj_distribution(field, ell, d, j, D)


def wj_exact(epsilon: LeadClass, j: int, d: int, D: EvalSet, budget: int | None = None) -> int:
    """W_j(ε) por enumeración exacta de clases × subconjuntos."""
    _check_same_field(epsilon, D)
    return wj_distribution(epsilon.field, epsilon.ell, d, j, D, budget).get(epsilon.coeffs, 0)


# ---------------------------------------------------------------------------------
# 📈 N_d(ε, r)
# ---------------------------------------------------------------------------------
def main_term(n: int, q: int, d: int, ell: int, r: int, limit: SumLimit = "thm5") -> Fraction:
    """C(n, r) q^{d-ℓ-r} Σ_{j=0}^{L} C(n-r, j)(-q)^{-j}, con L = d-ℓ-r (thm5) o d-r (thm6)."""
    if r > n:
        return Fraction(0)                                # C(n, r) = 0.
    top = d - ell - r if limit == "thm5" else d - r
    inner = sum((Fraction(comb(n - r, j)) / Fraction(-q) ** j for j in range(top + 1)), Fraction(0))
    return comb(n, r) * Fraction(q) ** (d - ell - r) * inner


def boundary_terms(epsilon: LeadClass, d: int, r: int, D: EvalSet, budget: int | None = None) -> int:
    """Σ_{j=d-ℓ+1}^{d} C(j, r)(-1)^{j-r} W_j(ε)."""
    total = 0
    for j in range(d - epsilon.ell + 1, d + 1):
        if j < r:
            continue                                      # C(j, r) = 0.
        total += comb(j, r) * (-1) ** (j - r) * wj_exact(epsilon, j, d, D, budget)
    return total


def count_formula(epsilon: LeadClass, d: int, r: int, D: EvalSet, budget: int | None = None) -> int:
    """N_d(ε, r): mónicos de grado d en la clase ε con exactamente r raíces distintas en D."""
    _check_same_field(epsilon, D)
    if d < epsilon.ell:
        raise PreconditionError(f"La fórmula exige d >= ℓ (d={d}, ℓ={epsilon.ell}).")
    if r < 0:
        raise PreconditionError(f"r={r} debe ser >= 0.")
    if r > d:
        return 0
    q = epsilon.field.q
    total = main_term(D.n, q, d, epsilon.ell, r) + boundary_terms(epsilon, d, r, D, budget)
    if total.denominator != 1:
        raise RsDistError(f"N_{d}(ε={epsilon.to_str()}, r={r}) no es entero: {total}. Revisa W_j.")
    return int(total)


def dist_table(epsilon: LeadClass, d: int, D: EvalSet, budget: int | None = None) -> DistTable:
    """Fila completa N_d(ε, r), r = 0..d, vía la fórmula."""
    counts = tuple(count_formula(epsilon, d, r, D, budget) for r in range(d + 1))
    expected = epsilon.field.q ** (d - epsilon.ell)
    if sum(counts) != expected:
        raise RsDistError(f"Σ_r N_{d}(ε, r) = {sum(counts)} ≠ q^(d-ℓ) = {expected}.")
    return DistTable(d=d, epsilon=epsilon, counts=counts, source=SourceEnum.formula)


# ---------------------------------------------------------------------------------
# 🎲 Momentos factoriales y distribución de Y = n - Z
# ---------------------------------------------------------------------------------
def _split_degree(f: Poly, k: int) -> int:
    if f.is_zero or not f.is_monic:
        raise PolyError(f"Se espera un mónico (recibido {f.to_str()}).")
    ell = f.degree - k
    if k < 1 or ell < 1:
        raise PreconditionError(f"Se necesita deg(f) = k+ℓ con k >= 1 y ℓ >= 1 (deg={f.degree}, k={k}).")
    return ell


def moments_formula(f: Poly, k: int, D: EvalSet, m: int, budget: int | None = None) -> MomentReport:
    """E(Y^{m̲}) con Y = n - d(f|_D, g) y g uniforme en RS_{n,k}."""
    ell = _split_degree(f, k)
    if m < 1:
        raise PreconditionError(f"m={m} debe ser >= 1.")
    q = f.field.q
    if m <= k:
        return MomentReport(m=m, value=Fraction(perm(D.n, m), q**m), branch=MomentBranchEnum.trivial)
    if m <= k + ell:
        w = wj_exact(class_of(f, ell), m, k + ell, D, budget)
        return MomentReport(m=m, value=Fraction(factorial(m) * w, q**k), branch=MomentBranchEnum.boundary)
    return MomentReport(m=m, value=Fraction(0), branch=MomentBranchEnum.zero)


def distance_pmf(f: Poly, k: int, D: EvalSet, budget: int | None = None) -> list[Fraction]:
    """P(Y = r) = N_{k+ℓ}(⟨f⟩, r) / q^k para r = 0..k+ℓ."""
    ell = _split_degree(f, k)
    table = dist_table(class_of(f, ell), k + ell, D, budget)
    return [Fraction(c, f.field.q**k) for c in table.counts]


def classify_by_counts(f: Poly, k: int, D: EvalSet, budget: int | None = None) -> dict[str, int | bool]:
    """Distancia de f|_D al código leída de los conteos: n - max{r : N(f, r) > 0}."""
    ell = _split_degree(f, k)
    table = dist_table(class_of(f, ell), k + ell, D, budget)
    best = max(r for r, c in enumerate(table.counts) if c > 0)
    distance = D.n - best
    return {
        "distance": distance,
        "deep_hole": distance == D.n - k,
        "ordinary": table.counts[k + ell] > 0,
    }


def _check_same_field(epsilon: LeadClass, D: EvalSet) -> None:
    if epsilon.field != D.field:
        raise PreconditionError(f"Clase en GF({epsilon.field.q}) y D en GF({D.field.q}).")
