# tests/unit/test_distance.py
# Oráculos de fuerza bruta: distancia al código, banderas y N(f, r).
import pytest

from app.algebra.poly import EvalSet, Poly
from app.core.errors import BudgetExceededError, PolyError, PreconditionError
from app.counting.classes import class_of
from app.counting.formula import dist_table
from app.lab.distance import (
    classify_word,
    codeword_matrix,
    count_Nfr_bruteforce,
    moments_bruteforce,
    rs_distance,
)


def test_01_distance_examples(gf3):
    D = EvalSet.full(gf3)
    assert rs_distance((0, 1, 1), 1, D) == 1           # x² evaluado en F_3
    assert rs_distance((0, 1, 2), 1, D) == 2
    assert rs_distance((2, 2, 2), 1, D) == 0


def test_02_classification_flags(gf3):
    D = EvalSet.full(gf3)
    square = classify_word((0, 1, 1), 1, D)
    assert square.degree == 2
    assert square.is_ordinary and not square.is_deep_hole and not square.is_codeword

    linear = classify_word((0, 1, 2), 1, D)
    assert linear.degree == 1
    assert linear.is_deep_hole

    const = classify_word((2, 2, 2), 1, D)
    assert const.is_codeword and const.distance == 0
    assert not const.violates_bounds


def test_03_count_examples(gf3):
    D = EvalSet.full(gf3)
    f = Poly.monomial(gf3, 2)
    assert [count_Nfr_bruteforce(f, 1, r, D) for r in range(3)] == [1, 1, 1]
    assert moments_bruteforce(f, 1, D, 0) == 1
    assert moments_bruteforce(f, 1, D, 1) == 1


@pytest.mark.parametrize("fixture,k", [("gf4", 2), ("gf5", 2), ("gf8", 1)])
def test_04_shift_counts_match_class_table(fixture, k, request, rng):
    # f + g recorre M_{k+ℓ}(⟨f⟩) cuando g recorre los polinomios de grado < k.
    F = request.getfixturevalue(fixture)
    D = EvalSet.full(F)
    for ell in (1, 2):
        f = Poly(F, tuple(rng.randrange(F.q) for _ in range(k + ell)) + (1,))
        expected = dist_table(class_of(f, ell), k + ell, D).counts
        assert tuple(count_Nfr_bruteforce(f, k, r, D) for r in range(k + ell + 1)) == expected


def test_05_errors_and_budget(gf3, gf9):
    D3 = EvalSet.full(gf3)
    with pytest.raises(PolyError):
        rs_distance((0, 1), 1, D3)
    with pytest.raises(PreconditionError):
        codeword_matrix(gf3, 0, D3)
    with pytest.raises(PreconditionError):
        count_Nfr_bruteforce(Poly.monomial(gf3, 2), 1, -1, D3)
    with pytest.raises(PolyError):
        count_Nfr_bruteforce(Poly.monomial(gf3, 2, 2), 1, 0, D3)
    with pytest.raises(BudgetExceededError):
        codeword_matrix(gf9, 3, EvalSet.full(gf9), budget=100)
