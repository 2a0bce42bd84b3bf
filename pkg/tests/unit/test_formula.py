# tests/unit/test_formula.py
# N_d(ε, r), W_j(ε) y momentos factoriales frente a sus ejemplos y a la enumeración.
import itertools
from fractions import Fraction

import pytest

from app.algebra.poly import EvalSet, Poly
from app.core.errors import BudgetExceededError, PreconditionError
from app.counting.classes import LeadClass, enumerate_classes
from app.counting.formula import (
    classify_by_counts,
    count_formula,
    dist_table,
    distance_pmf,
    main_term,
    moments_formula,
    wj_distribution,
    wj_exact,
)
from app.lab.distance import bruteforce_all_tables, bruteforce_class_table, moments_bruteforce
from app.models import MomentBranchEnum, SourceEnum


def test_01_wj_examples(gf3):
    D = EvalSet.full(gf3)
    eps = LeadClass(gf3, (0,))
    assert wj_exact(eps, 2, 2, D) == 1
    assert wj_exact(eps, 1, 2, D) == 3
    assert wj_exact(eps, 3, 3, EvalSet(gf3, (0, 1))) == 0


def test_02_count_examples(gf3):
    D = EvalSet.full(gf3)
    eps = LeadClass(gf3, (0,))
    assert [count_formula(eps, 2, r, D) for r in range(3)] == [1, 1, 1]
    assert count_formula(eps, 2, 5, D) == 0
    assert count_formula(LeadClass(gf3, (1,)), 3, 3, EvalSet(gf3, (0, 2))) == 0


def test_03_table_rows_sum_to_class_size(gf4):
    D = EvalSet.full(gf4)
    for eps in enumerate_classes(gf4, 4, 2):
        table = dist_table(eps, 4, D)
        assert table.source is SourceEnum.formula
        assert table.total == 4 ** 2


@pytest.mark.parametrize("q,ell,d", [(3, 1, 3), (4, 2, 3), (5, 2, 4), (3, 3, 4)])
def test_04_formula_matches_enumeration(q, ell, d, request):
    F = request.getfixturevalue(f"gf{q}")
    D = EvalSet.full(F)
    brute = bruteforce_all_tables(F, ell, d, D)
    for coeffs, counts in brute.items():
        assert dist_table(LeadClass(F, coeffs), d, D).counts == counts


def test_05_formula_matches_enumeration_on_subsets(gf5, rng):
    for _ in range(3):
        D = EvalSet(gf5, tuple(sorted(rng.sample(range(5), rng.randint(1, 4)))))
        for eps in enumerate_classes(gf5, 3, 2):
            assert dist_table(eps, 3, D).counts == bruteforce_class_table(eps, 3, D).counts


def test_06_wj_distribution_total(gf4):
    # Σ_ε W_j(ε) = C(n, j) · |E_{d-j}| = C(n, j) · q^{min(d-j, ℓ)}
    D = EvalSet.full(gf4)
    dist = wj_distribution(gf4, 2, 4, 3, D)
    assert sum(dist.values()) == 4 * 4 ** 1


def test_07_main_term_limits_differ_by_boundary_parts():
    assert main_term(3, 3, 2, 1, 0, limit="thm6") - main_term(3, 3, 2, 1, 0, limit="thm5") == Fraction(1)
    assert main_term(3, 3, 2, 1, 2, limit="thm5") == 0
    assert main_term(2, 3, 4, 1, 3) == 0


def test_08_moment_examples(gf3):
    D = EvalSet.full(gf3)
    f = Poly.monomial(gf3, 2)                           # x²
    one = moments_formula(f, 1, D, 1)
    assert one.value == 1 and one.branch is MomentBranchEnum.trivial
    two = moments_formula(f, 1, D, 2)
    assert two.value == Fraction(2, 3) and two.branch is MomentBranchEnum.boundary
    four = moments_formula(f, 1, D, 4)
    assert four.value == 0 and four.branch is MomentBranchEnum.zero
    assert moments_bruteforce(f, 1, D, 0) == 1


@pytest.mark.parametrize("q,k", [(5, 1), (5, 2), (4, 2)])
def test_09_moments_match_bruteforce(q, k, request, rng):
    F = request.getfixturevalue(f"gf{q}")
    D = EvalSet.full(F)
    for ell in (1, 2):
        for _ in range(3):
            f = Poly(F, tuple(rng.randrange(q) for _ in range(k + ell)) + (1,))
            for m in range(1, k + ell + 3):
                assert moments_formula(f, k, D, m).value == moments_bruteforce(f, k, D, m)


def test_10_pmf_and_count_classification(gf3):
    D = EvalSet.full(gf3)
    f = Poly.monomial(gf3, 2)
    assert distance_pmf(f, 1, D) == [Fraction(1, 3)] * 3
    summary = classify_by_counts(f, 1, D)
    assert summary == {"distance": 1, "deep_hole": False, "ordinary": True}


def test_11_preconditions_and_budget(gf5):
    D = EvalSet.full(gf5)
    with pytest.raises(PreconditionError):
        count_formula(LeadClass(gf5, (0, 0)), 1, 0, D)
    with pytest.raises(PreconditionError):
        moments_formula(Poly.monomial(gf5, 2), 2, D, 1)
    with pytest.raises(BudgetExceededError):
        wj_distribution(gf5, 2, 5, 3, D, budget=10)


@pytest.mark.parametrize("points", [(0, 1), (1, 2, 4), (0, 2, 4)])
def test_12_subsets_not_closed_under_negation(gf5, points):
    # f se anula en S ⇔ ∏(x - α) divide a f: D = {0, 1} distingue ⟨x - α⟩ de ⟨x + α⟩.
    D = EvalSet(gf5, points)
    for eps in enumerate_classes(gf5, 3, 2):
        assert dist_table(eps, 3, D).counts == bruteforce_class_table(eps, 3, D).counts
    for tail in itertools.product(range(5), repeat=3):
        f = Poly(gf5, tail + (1,))
        for m in range(1, 6):
            assert moments_formula(f, 1, D, m).value == moments_bruteforce(f, 1, D, m), (tail, m)
