# tests/unit/test_field.py
# Aritmética de F_q: construcción, tablas log/antilog y axiomas de cuerpo.
import itertools

import numpy as np
import pytest

from app.algebra.field import build_field, field_of_order, smallest_irreducible
from app.core.errors import FieldError


def test_01_prime_field_has_no_modulus():
    F = build_field(3, 1)
    assert F.q == 3
    assert F.modulus is None


def test_02_gf8_uses_smallest_irreducible():
    F = build_field(2, 3)
    assert F.q == 8
    assert F.modulus == (1, 1, 0, 1)                     # x³ + x + 1, grado bajo primero
    assert smallest_irreducible(3, 2) == (1, 0, 1)      # x² + 1 sobre F_3


def test_03_non_prime_characteristic_is_rejected():
    with pytest.raises(FieldError):
        build_field(4, 2)
    with pytest.raises(FieldError):
        field_of_order(6)
    with pytest.raises(FieldError):
        field_of_order(1)


def test_04_build_field_is_cached():
    assert build_field(3, 2) is build_field(3, 2)
    assert field_of_order(9) is build_field(3, 2)


@pytest.mark.parametrize("q", [2, 3, 4, 5, 7, 8, 9, 16, 25, 27])
def test_05_every_nonzero_element_has_an_inverse(q):
    F = field_of_order(q)
    for a in F.nonzero():
        assert F.mul(a, F.inv(a)) == 1
        assert F.add(a, F.neg(a)) == 0


@pytest.mark.parametrize("fixture", ["gf4", "gf8", "gf9"])
def test_06_ring_axioms_hold_exhaustively(fixture, request):
    F = request.getfixturevalue(fixture)
    for a, b, c in itertools.product(F.elements(), repeat=3):
        assert F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c))
        assert F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c))
    assert all(F.mul(a, b) == F.mul(b, a) for a, b in itertools.product(F.elements(), repeat=2))


def test_07_generator_has_full_order(gf9):
    g = gf9.generator
    powers = {gf9.pow(g, i) for i in range(gf9.q - 1)}
    assert powers == set(gf9.nonzero())


def test_08_frobenius_fixes_prime_subfield(gf9):
    fixed = [a for a in gf9.elements() if gf9.pow(a, gf9.p) == a]
    assert len(fixed) == gf9.p


@pytest.mark.parametrize("fixture", ["gf4", "gf8", "gf9"])
def test_09_numpy_tables_match_scalar_ops(fixture, request):
    F = request.getfixturevalue(fixture)
    for a, b in itertools.product(F.elements(), repeat=2):
        assert F.add_table[a, b] == F.add(a, b)
        assert F.mul_table[a, b] == F.mul(a, b)
    assert np.array_equal(F.exp_table[F.log_table[1:]], np.arange(1, F.q))


def test_10_zero_has_no_inverse(gf5):
    with pytest.raises(ZeroDivisionError):
        gf5.inv(0)
