# tests/acceptance/test_acceptance.py
# =======================
# Criterios de aceptación
# =======================
# Cada criterio corre en dos tamaños:
#   - desk: rejillas reducidas, siempre activas (segundos).
#   - full: las rejillas completas, marcadas `slow` (RSDIST_FULL=1 para correrlas).
# Las comprobaciones son las mismas que emite `rsdist verify-all`.

import pytest

from app.models import VerdictEnum
from app.verification import (
    check_aj,
    check_count_oracle,
    check_curvature,
    check_error_bounds,
    check_figure,
    check_lemma,
    check_liwan,
    check_margins,
    check_moments,
    check_region,
    check_scans,
    run_verification,
    VerifyPlan,
)

PRECISION = 128
BUDGET = 10**8

DESK = VerifyPlan.desk()
FULL = VerifyPlan.full()


def _not_holding(check, plan):
    """Ejecuta una comprobación y devuelve los resultados que no certifican holds."""
    results = list(check(plan, PRECISION, BUDGET))
    assert results, f"{check.__name__} no produjo resultados"
    return [(r.check, r.detail) for r in results if r.status is not VerdictEnum.holds]


# =======================
# 🖥️ Tamaño escritorio
# =======================
def test_01_corollary_margins():
    results = list(check_margins(DESK, PRECISION, BUDGET))
    assert len(results) == 17
    assert all(r.status is VerdictEnum.holds for r in results)
    bottom = next(r for r in results if r.check == "margin-2a-bottom")
    assert bottom.detail["verdict"] == "fails" and bottom.detail["expected"] == "fails"


def test_02_count_formula_matches_enumeration():
    assert _not_holding(check_count_oracle, DESK) == []


def test_03_moments_match_enumeration():
    assert _not_holding(check_moments, DESK) == []


def test_04_error_bounds_never_violated():
    results = list(check_error_bounds(DESK, PRECISION, BUDGET))
    assert all(r.status is VerdictEnum.holds for r in results)
    sum_limit = results[-1]
    assert sum_limit.check == "ndr-sum-limit"
    assert sum_limit.detail["limit_k_plus_ell_minus_r_violations"] == 0


def test_05_aj_evaluators_agree():
    assert _not_holding(check_aj, DESK) == []


def test_06_lemma_chain_and_binomial_factor():
    assert _not_holding(check_lemma, DESK) == []
    assert _not_holding(check_liwan, DESK) == []


def test_07_deep_hole_scan():
    assert _not_holding(check_scans, DESK) == []


def test_08_figure_brackets_and_monotonicity():
    assert _not_holding(check_figure, DESK) == []


def test_09_curvature_and_region_constants():
    assert _not_holding(check_curvature, DESK) == []
    assert _not_holding(check_region, DESK) == []


def test_10_verify_all_streams_every_check():
    seen = []
    results, summary = run_verification(DESK, precision=PRECISION, budget=BUDGET, on_check=seen.append)
    assert seen == results
    assert summary.mode == "desk"
    assert summary.totals == {"holds": len(results), "fails": 0, "unknown": 0}


# =======================
# 🐢 Rejillas completas
# =======================
@pytest.mark.slow
@pytest.mark.parametrize(
    "check",
    [
        check_margins,
        check_count_oracle,
        check_moments,
        check_error_bounds,
        check_aj,
        check_lemma,
        check_liwan,
        check_scans,
        check_figure,
        check_curvature,
        check_region,
    ],
    ids=lambda fn: fn.__name__,
)
def test_11_full_grid(check):
    assert _not_holding(check, FULL) == []
