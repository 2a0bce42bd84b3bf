# app/lab/scan.py
# =================================================================================
# 🔭 BARRIDO EXHAUSTIVO DE AGUJEROS PROFUNDOS (RS estándar, D = F_q)
# ---------------------------------------------------------------------------------
# - d(u + v, RS) = d(u, RS) para v en el código: se fijan a cero los k
#   coeficientes bajos y se recorre un representante mónico por vector
#   (a_k, ..., a_{k+j-1}) para cada grado k+j, 0 <= j <= ℓ.
# - Los escalados por constantes no nulas tampoco cambian la distancia, así que
#   basta el representante mónico.
# - Registros en orden lexicográfico; se emiten en streaming (callback).
# - Con workers > 1 cada grado va a un proceso y se fusiona en orden.
# =================================================================================

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from typing import Callable, Iterator

import numpy as np
from loguru import logger

from app.algebra.field import field_of_order
from app.algebra.poly import EvalSet, Poly, coefficient_grid, eval_many
from app.core.budget import require_budget
from app.core.config import get_settings
from app.core.errors import PreconditionError
from app.counting.formula import classify_by_counts
from app.lab.distance import codeword_matrix
from app.models import DeepHoleScanReport, ScanRecord

CHUNK_ROWS = 4096  # Palabras por bloque al comparar contra todo el código.


def scan_cost(q: int, k: int, ell: int) -> int:
    """Palabras × palabras código × longitud, tras el cociente por el código."""
    return sum(q**j for j in range(ell + 1)) * q**k * q


def _degree_records(q: int, k: int, j: int) -> list[ScanRecord]:
    """Registros de todos los representantes de grado k+j."""
    F = field_of_order(q)
    D = EvalSet.full(F)
    C = codeword_matrix(F, k, D, budget=q**k * q * k)  # Coste ya contabilizado en scan_deep_holes.
    free = coefficient_grid(F, j)[:, ::-1]                # a_k..a_{k+j-1}, grado bajo primero.
    coeffs = np.concatenate(
        [np.zeros((free.shape[0], k), dtype=np.int64), free, np.ones((free.shape[0], 1), dtype=np.int64)],
        axis=1,
    )
    words = eval_many(F, coeffs, D)
    deg = k + j
    records = []
    for start in range(0, words.shape[0], CHUNK_ROWS):
        block = words[start:start + CHUNK_ROWS]
        best = (block[:, None, :] == C[None, :, :]).sum(axis=2).max(axis=1)
        for row, agree in zip(coeffs[start:start + CHUNK_ROWS], best):
            dist = q - int(agree)
            records.append(
                ScanRecord(
                    coeffs=tuple(int(c) for c in row),
                    degree=deg,
                    distance=dist,
                    deep_hole=dist == q - k,
                    ordinary=dist == q - deg,
                )
            )
    return records


def iter_scan_records(q: int, k: int, ell: int, workers: int = 1) -> Iterator[ScanRecord]:
    """Registros en orden (grado creciente, coeficientes lexicográficos)."""
    degrees = [j for j in range(ell + 1) if k + j <= q - 1]
    if len(degrees) < ell + 1:
        logger.warning("[SCAN] grados >= q omitidos (q={}, k={}, ℓ={})", q, k, ell)
    if workers > 1 and len(degrees) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            for chunk in pool.map(_degree_records, [q] * len(degrees), [k] * len(degrees), degrees):
                yield from chunk
        return
    for j in degrees:
        yield from _degree_records(q, k, j)


def scan_deep_holes(
    q: int,
    k: int,
    ell: int,
    budget: int | None = None,
    workers: int | None = None,
    on_record: Callable[[ScanRecord], None] | None = None,
    cross_check: bool = False,
) -> DeepHoleScanReport:
    """Barre grados k..k+ℓ y reporta agujeros profundos, violaciones y ordinarias."""
    F = field_of_order(q)
    if not (1 <= k <= q - 1):
        raise PreconditionError(f"Se requiere 1 <= k <= q-1 (k={k}, q={q}).")
    require_budget(f"scan-deepholes (q={q}, k={k}, ℓ={ell})", scan_cost(q, k, ell), budget)
    D = EvalSet.full(F)
    workers = workers or get_settings().workers

    scanned: dict[int, int] = {}
    ordinary: dict[int, int] = {}
    above_k, violations, mismatches = [], [], []
    degree_k_all_deep = True
    total = 0

    for rec in iter_scan_records(q, k, ell, workers):
        total += 1
        scanned[rec.degree] = scanned.get(rec.degree, 0) + 1
        ordinary[rec.degree] = ordinary.get(rec.degree, 0) + int(rec.ordinary)
        if rec.degree == k and not rec.deep_hole:
            degree_k_all_deep = False
        if rec.degree > k and rec.deep_hole:
            above_k.append(rec.coeffs)
            logger.info("[SCAN] agujero profundo de grado {} > k: {}", rec.degree, rec.coeffs)
        if not (q - k >= rec.distance >= q - rec.degree):
            violations.append(rec.coeffs)
            logger.error("[SCAN] violación de las cotas elementales: {}", rec.coeffs)
        if cross_check and rec.degree > k:
            by_counts = classify_by_counts(Poly(F, rec.coeffs), k, D, budget)
            if by_counts["distance"] != rec.distance:
                mismatches.append(rec.coeffs)
                logger.error("[SCAN] distancia por conteo ≠ fuerza bruta: {}", rec.coeffs)
        if on_record is not None:
            on_record(rec)

    logger.debug("[SCAN] q={} k={} ℓ={} | palabras={} | profundas>k={}", q, k, ell, total, len(above_k))
    return DeepHoleScanReport(
        q=q,
        k=k,
        ell=ell,
        words_scanned=total,
        degree_k_all_deep=degree_k_all_deep,
        deep_holes_above_k=tuple(above_k),
        bound_violations=tuple(violations),
        ordinary_by_degree=ordinary,
        scanned_by_degree=scanned,
        count_mismatches=tuple(mismatches),
    )
