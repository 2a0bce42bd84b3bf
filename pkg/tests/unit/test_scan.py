# tests/unit/test_scan.py
# Barrido exhaustivo de agujeros profundos sobre D = F_q.
import pytest

from app.core.errors import BudgetExceededError, PreconditionError
from app.lab.scan import scan_cost, scan_deep_holes


@pytest.mark.parametrize("q,k,ell,words", [(5, 2, 1, 6), (3, 1, 1, 4)])
def test_01_small_scans_respect_elementary_bounds(q, k, ell, words):
    report = scan_deep_holes(q, k, ell, workers=1)
    assert report.words_scanned == words
    assert report.degree_k_all_deep
    assert report.bound_violations == ()
    assert report.scanned_by_degree[k] == 1


def test_02_records_stream_in_order():
    seen = []
    scan_deep_holes(5, 2, 1, workers=1, on_record=seen.append)
    assert [r.degree for r in seen] == [2, 3, 3, 3, 3, 3]
    tails = [r.coeffs[2] for r in seen if r.degree == 3]
    assert tails == sorted(tails)


def test_03_parallel_scan_matches_serial():
    serial = scan_deep_holes(7, 2, 2, workers=1)
    parallel = scan_deep_holes(7, 2, 2, workers=2)
    assert serial == parallel


def test_04_counts_agree_with_brute_force():
    report = scan_deep_holes(5, 2, 2, workers=1, cross_check=True)
    assert report.count_mismatches == ()


def test_05_preconditions_and_budget():
    with pytest.raises(PreconditionError):
        scan_deep_holes(5, 5, 1, workers=1)
    with pytest.raises(BudgetExceededError):
        scan_deep_holes(9, 3, 2, budget=scan_cost(9, 3, 2) - 1, workers=1)
