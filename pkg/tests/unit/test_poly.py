# tests/unit/test_poly.py
# Polinomios sobre F_q: evaluación, raíces, interpolación y conjuntos de evaluación.
import itertools

import numpy as np
import pytest

from app.algebra.poly import (
    EvalSet,
    Poly,
    coefficient_grid,
    distinct_roots_in,
    eval_many,
    evaluate_on,
    lagrange_poly,
    linear_factor_roots,
    monic_polys,
    poly_divmod,
    poly_eval,
)
from app.core.errors import PolyError

FIELDS_UP_TO_9 = ["gf2", "gf3", "gf4", "gf5", "gf7", "gf8", "gf9"]


def test_01_parse_trims_leading_zeros(gf3):
    f = Poly.parse(gf3, "1,0,1,0,0")
    assert f.coeffs == (1, 0, 1)
    assert f.degree == 2
    assert Poly(gf3).degree < 0
    with pytest.raises(PolyError):
        Poly.parse(gf3, "1,x")
    with pytest.raises(PolyError):
        Poly(gf3, (3,))


def test_02_evaluation_examples(gf3):
    f = Poly.parse(gf3, "1,0,1")                        # x² + 1
    assert poly_eval(f, 0) == 1
    assert poly_eval(f, 1) == 2


@pytest.mark.parametrize("fixture", ["gf4", "gf5", "gf9"])
def test_03_frobenius_polynomial_vanishes(fixture, request):
    F = request.getfixturevalue(fixture)
    f = Poly.monomial(F, F.q) - Poly.x(F)               # x^q - x
    assert all(poly_eval(f, a) == 0 for a in F.elements())


def test_04_distinct_roots(gf3):
    D = EvalSet.full(gf3)
    assert distinct_roots_in(Poly.parse(gf3, "2,0,1"), D) == 2   # x² - 1
    assert distinct_roots_in(Poly.parse(gf3, "1,0,1"), D) == 0   # x² + 1
    assert distinct_roots_in(Poly.constant(gf3, 1), D) == 0
    with pytest.raises(PolyError):
        distinct_roots_in(Poly(gf3), D)


def test_05_linear_factor_roots_ignore_multiplicity(gf5):
    f = Poly.from_roots(gf5, [1, 1, 3])
    assert linear_factor_roots(f) == [1, 3]


def test_06_lagrange_examples(gf3, gf5):
    D3 = EvalSet.full(gf3)
    assert lagrange_poly((0, 1, 2), D3).coeffs == (0, 1)
    assert lagrange_poly((2, 2, 2), D3).coeffs == (2,)
    assert lagrange_poly((0, 0, 0), D3).is_zero
    D5 = EvalSet.full(gf5)
    x2 = Poly.monomial(gf5, 2)
    assert lagrange_poly(evaluate_on(x2, D5), D5) == x2


def test_07_lagrange_on_proper_subset(gf9, rng):
    D = EvalSet(gf9, (0, 2, 3, 5, 7))
    for _ in range(20):
        f = Poly(gf9, tuple(rng.randrange(9) for _ in range(D.n)))
        assert lagrange_poly(evaluate_on(f, D), D) == f


def test_08_divmod_reconstructs(gf8, rng):
    for _ in range(20):
        f = Poly(gf8, tuple(rng.randrange(8) for _ in range(6)))
        g = Poly(gf8, tuple(rng.randrange(8) for _ in range(3)) + (1,))
        quot, rem = poly_divmod(f, g)
        assert quot * g + rem == f
        assert rem.degree < g.degree


def test_09_eval_set_rejects_duplicates(gf5):
    with pytest.raises(PolyError):
        EvalSet(gf5, (1, 1))
    with pytest.raises(PolyError):
        EvalSet.parse(gf5, "1,7")
    assert EvalSet.parse(gf5, "all").is_full
    assert EvalSet.parse(gf5, "0,4").n == 2


def test_10_vectorized_evaluation_matches_horner(gf4):
    D = EvalSet.full(gf4)
    grid = coefficient_grid(gf4, 3)
    values = eval_many(gf4, grid, D)
    for row, out in zip(grid, values):
        f = Poly(gf4, tuple(int(c) for c in row))
        assert tuple(int(v) for v in out) == evaluate_on(f, D)
    assert grid.shape == (64, 3)
    assert np.array_equal(coefficient_grid(gf4, 0), np.zeros((1, 0), dtype=np.int64))


def test_11_monic_enumeration_counts(gf3):
    polys = list(monic_polys(gf3, 2))
    assert len(polys) == 9
    assert all(f.is_monic and f.degree == 2 for f in polys)


@pytest.mark.parametrize("fixture", FIELDS_UP_TO_9)
def test_12_root_count_matches_factorization_up_to_degree_3(fixture, request):
    F = request.getfixturevalue(fixture)
    D = EvalSet.full(F)
    for coeffs in itertools.product(F.elements(), repeat=4):
        f = Poly(F, coeffs)
        if f.is_zero:
            continue
        assert distinct_roots_in(f, D) == len(linear_factor_roots(f)), coeffs


@pytest.mark.parametrize("fixture", FIELDS_UP_TO_9)
def test_13_lagrange_inverts_every_low_degree_polynomial(fixture, request):
    F = request.getfixturevalue(fixture)
    sets = [EvalSet(F, tuple(range(min(F.q, 4))))]
    if F.q <= 4:
        sets.append(EvalSet.full(F))
    else:
        sets.append(EvalSet(F, (1, F.q - 1, F.q - 2)))
    for D in sets:
        for coeffs in itertools.product(F.elements(), repeat=D.n):
            g = Poly(F, coeffs)                         # grado <= n-1 (o cero)
            assert lagrange_poly(evaluate_on(g, D), D) == g
