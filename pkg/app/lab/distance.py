# app/lab/distance.py
# =================================================================================
# 🧪 ORÁCULOS DE FUERZA BRUTA (verdad de referencia)
# ---------------------------------------------------------------------------------
# - rs_distance: mínimo exacto sobre las q^k palabras código.
# - classify_word: grado por Lagrange + distancia + banderas.
# - count_Nfr_bruteforce / moments_bruteforce: enumeración directa de f + g.
# - bruteforce_class_table / bruteforce_all_tables: enumeración de M_d(ε).
# Todo se vectoriza con numpy sobre las tablas completas del cuerpo; el coste
# se contabiliza ANTES de enumerar (require_budget).
# =================================================================================

from __future__ import annotations

import itertools
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

import numpy as np

from app.algebra.field import FieldSpec
from app.algebra.poly import EvalSet, Poly, coefficient_grid, eval_many, evaluate_on, lagrange_poly, poly_eval
from app.core.budget import require_budget
from app.core.errors import PolyError, PreconditionError
from app.counting.classes import LeadClass
from app.models import DistTable, SourceEnum, WordClassification


# ---------------------------------------------------------------------------------
# 📚 Palabras código
# ---------------------------------------------------------------------------------
@lru_cache(maxsize=32)
def _codeword_matrix(field: FieldSpec, k: int, D: EvalSet) -> np.ndarray:
    if field.has_full_tables:
        return eval_many(field, coefficient_grid(field, k), D)
    rows = [
        [poly_eval(Poly(field, tuple(c)), a) for a in D]
        for c in itertools.product(field.elements(), repeat=k)
    ]
    return np.asarray(rows, dtype=np.int64)


def codeword_matrix(field: FieldSpec, k: int, D: EvalSet, budget: int | None = None) -> np.ndarray:
    """Matriz (q^k, n): evaluaciones en D de todos los polinomios de grado <= k-1."""
    if not (1 <= k <= D.n):
        raise PreconditionError(f"RS_(n,k) requiere 1 <= k <= n (k={k}, n={D.n}).")
    require_budget(f"códigos RS (q={field.q}, k={k}, n={D.n})", field.q**k * D.n * k, budget)
    return _codeword_matrix(field, k, D)


def _as_word(u: Sequence[int], D: EvalSet) -> np.ndarray:
    if len(u) != D.n:
        raise PolyError(f"Longitudes distintas: |u|={len(u)} vs n={D.n}.")
    return np.asarray([int(a) for a in u], dtype=np.int64)


def _agreements(u: np.ndarray, C: np.ndarray) -> np.ndarray:
    """Coincidencias de u con cada palabra código (= n - distancia)."""
    return (C == u[None, :]).sum(axis=1)


# ---------------------------------------------------------------------------------
# 📏 Distancia y clasificación
# ---------------------------------------------------------------------------------
def rs_distance(u: Sequence[int], k: int, D: EvalSet, budget: int | None = None) -> int:
    """d(u, RS_{n,k}) exacta."""
    word = _as_word(u, D)
    C = codeword_matrix(D.field, k, D, budget)
    return int(D.n - _agreements(word, C).max())


def classify_word(u: Sequence[int], k: int, D: EvalSet, budget: int | None = None) -> WordClassification:
    """Grado (Lagrange), distancia (fuerza bruta) y banderas codeword / deep hole / ordinary."""
    interp = lagrange_poly([int(a) for a in u], D)
    return WordClassification(
        word=tuple(int(a) for a in u),
        coeffs=interp.coeffs,
        degree=interp.degree,
        distance=rs_distance(u, k, D, budget),
        n=D.n,
        k=k,
    )


# ---------------------------------------------------------------------------------
# 🔢 N(f, r) y momentos por enumeración directa
# ---------------------------------------------------------------------------------
def _check_received_poly(f: Poly, k: int) -> None:
    if f.is_zero or not f.is_monic:
        raise PolyError(f"Se espera un mónico (recibido {f.to_str()}).")
    if f.degree < k:
        raise PreconditionError(f"deg(f)={f.degree} debe ser >= k={k}.")


def shift_root_counts(f: Poly, k: int, D: EvalSet, budget: int | None = None) -> np.ndarray:
    """Para cada g (deg g <= k-1, orden odómetro): número de raíces distintas de f+g en D."""
    _check_received_poly(f, k)
    C = codeword_matrix(f.field, k, D, budget)
    fvals = np.asarray(evaluate_on(f, D), dtype=np.int64)
    if f.field.has_full_tables:
        shifted = f.field.add_table[C, fvals[None, :]]
    else:
        shifted = np.vectorize(f.field.add)(C, fvals[None, :])
    return (shifted == 0).sum(axis=1)


def count_Nfr_bruteforce(f: Poly, k: int, r: int, D: EvalSet, budget: int | None = None) -> int:
    """N(f, r) = #{g : deg g <= k-1, f+g tiene exactamente r raíces distintas en D}."""
    if r < 0:
        raise PreconditionError(f"r={r} debe ser >= 0.")
    return int((shift_root_counts(f, k, D, budget) == r).sum())


def moments_bruteforce(f: Poly, k: int, D: EvalSet, m: int, budget: int | None = None) -> Fraction:
    """(1/q^k) Σ_g (n - d(u_f, u_g))^{m̲}, exacto."""
    if m < 0:
        raise PreconditionError(f"m={m} debe ser >= 0.")
    # Y_g = coincidencias de f con -g = raíces de f + g; g recorre todo el código.
    ys = shift_root_counts(f, k, D, budget)
    total = 0
    for y, mult in zip(*np.unique(ys, return_counts=True)):
        y = int(y)
        falling = 1
        for i in range(m):
            falling *= y - i
        total += falling * int(mult)
    return Fraction(total, f.field.q**k)


# ---------------------------------------------------------------------------------
# 🧾 Oráculo a nivel de clase: enumeración de M_d(ε)
# ---------------------------------------------------------------------------------
def _zero_counts(field: FieldSpec, coeffs: np.ndarray, D: EvalSet) -> np.ndarray:
    return (eval_many(field, coeffs, D) == 0).sum(axis=1)


def bruteforce_class_table(epsilon: LeadClass, d: int, D: EvalSet, budget: int | None = None) -> DistTable:
    """N_d(ε, r) contando directamente los q^{d-ℓ} mónicos de la clase."""
    F, ell = epsilon.field, epsilon.ell
    if d < ell:
        raise PreconditionError(f"Se requiere d >= ℓ (d={d}, ℓ={ell}).")
    require_budget(f"M_{d}(ε) (q={F.q}, ℓ={ell})", F.q ** (d - ell) * D.n * (d + 1), budget)
    low = coefficient_grid(F, d - ell)[:, ::-1]           # Coeficientes x^0..x^{d-ℓ-1}.
    head = np.tile(np.asarray(list(reversed(epsilon.coeffs)) + [1], dtype=np.int64), (low.shape[0], 1))
    zeros = _zero_counts(F, np.concatenate([low, head], axis=1), D)
    counts = np.bincount(zeros, minlength=d + 1)[: d + 1]
    return DistTable(d=d, epsilon=epsilon, counts=tuple(int(c) for c in counts), source=SourceEnum.brute_force)


def bruteforce_all_tables(
    field: FieldSpec, ell: int, d: int, D: EvalSet, budget: int | None = None
) -> dict[tuple[int, ...], tuple[int, ...]]:
    """N_d(ε, r) para todas las clases enumerando M_d una sola vez."""
    if d < ell:
        raise PreconditionError(f"Se requiere d >= ℓ (d={d}, ℓ={ell}).")
    require_budget(f"M_{d} completo (q={field.q}, ℓ={ell})", field.q**d * D.n * (d + 1), budget)
    grid = coefficient_grid(field, d)                     # Columnas c_1..c_d (c_1 más lento).
    coeffs = np.concatenate([grid[:, ::-1], np.ones((grid.shape[0], 1), dtype=np.int64)], axis=1)
    zeros = _zero_counts(field, coeffs, D).reshape(field.q**ell, field.q ** (d - ell))
    tables = {}
    for idx, head in enumerate(itertools.product(field.elements(), repeat=ell)):
        counts = np.bincount(zeros[idx], minlength=d + 1)[: d + 1]
        tables[tuple(head)] = tuple(int(c) for c in counts)
    return tables
