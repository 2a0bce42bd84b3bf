# tests/unit/test_aj.py
# A_j(u, w): los tres evaluadores, binomiales generalizados y q₁/γ.
from fractions import Fraction

import pytest

from app.core.errors import FieldError, MethodLimitError, PreconditionError
from app.kernel.aj import (
    AjParams,
    aj_at_q,
    aj_binsum,
    aj_permutation,
    aj_series,
    characteristic,
    evaluate_aj,
    ln_aj_at_q,
    ln_aj_binsum,
    q1_gamma,
)
from app.kernel.binom import gen_binom, ln_gen_binom
from app.kernel.scalars import is_exact, ln, overlaps, to_interval, working_precision


def test_01_generalized_binomials():
    assert gen_binom(Fraction(5, 2), 2) == Fraction(15, 8)
    assert gen_binom(Fraction(7, 3), 0) == 1
    assert gen_binom(3, 5) == 0
    assert ln_gen_binom(3, 5) is None
    with working_precision(128):
        assert overlaps(ln_gen_binom(Fraction(9, 2), 3), ln(gen_binom(Fraction(9, 2), 3)))
    with pytest.raises(PreconditionError):
        gen_binom(2, -1)


@pytest.mark.parametrize(
    "j,p,u,w,expected",
    [
        (2, 2, 4, Fraction(1, 2), 4),
        (5, 2, 2, 1, 6),
        (3, 3, 1, 1, 1),
        (0, 5, 7, Fraction(1, 3), 1),
    ],
)
def test_02_known_values_by_every_method(j, p, u, w, expected):
    params = AjParams(j=j, p=p, u=u, w=w)
    for method in ("perm", "series", "binsum"):
        value = evaluate_aj(params, method)
        assert is_exact(value)
        assert value == expected


def test_03_exact_methods_agree_on_rational_points():
    for j in range(0, 13):
        for p in (2, 3, 5, 7):
            params = AjParams(j=j, p=p, u=Fraction(9, 2), w=Fraction(2, 7))
            perm = aj_permutation(params)
            assert aj_series(params) == perm
            assert aj_binsum(params) == perm


def test_04_normalization_at_one():
    # u = w = 1: todos los ciclos cuentan con peso 1 → j!/j! = 1.
    for j in range(8):
        assert aj_series(AjParams(j=j, p=3, u=1, w=1)) == 1


def test_05_q1_gamma_cases():
    assert q1_gamma(64, 2) == (Fraction(8), Fraction(1, 8))
    assert q1_gamma(9, 5) == (Fraction(9), Fraction(1))
    assert q1_gamma(25, 1) == (Fraction(0), Fraction(0))
    with working_precision(128):
        q1, gamma = q1_gamma(7, 2)
        assert not is_exact(gamma)
        assert overlaps(q1 * q1, to_interval(7))
    with pytest.raises(PreconditionError):
        q1_gamma(9, 0)


def test_06_interval_methods_overlap():
    with working_precision(128):
        params = AjParams.from_q_ell(12, 7, 2)
        series = aj_series(params)
        binsum = aj_binsum(params)
        perm = aj_permutation(params)
        assert overlaps(series, binsum) and overlaps(series, perm)
        assert overlaps(ln_aj_binsum(params), ln(series))


def test_07_log_space_matches_exact_value():
    with working_precision(128):
        exact = aj_series(AjParams.from_q_ell(70, 64, 2))
        assert is_exact(exact)
        assert overlaps(aj_at_q(64, 2, 70), to_interval(exact))
        assert overlaps(ln_aj_at_q(64, 2, 70), ln(exact))


def test_08_zero_when_p_does_not_divide_j_and_ell_is_one():
    assert aj_at_q(9, 1, 4) == 0
    assert ln_aj_at_q(9, 1, 4) is None
    assert aj_at_q(9, 1, 6) > 0


def test_09_parameter_errors():
    assert characteristic(81) == 3
    with pytest.raises(FieldError):
        characteristic(12)
    with pytest.raises(PreconditionError):
        AjParams(j=2, p=4, u=1, w=1)
    with pytest.raises(PreconditionError):
        AjParams(j=-1, p=2, u=1, w=1)
    with pytest.raises(MethodLimitError):
        aj_permutation(AjParams(j=21, p=2, u=1, w=1))
    with pytest.raises(PreconditionError):
        evaluate_aj(AjParams(j=2, p=2, u=1, w=1), "fft")
