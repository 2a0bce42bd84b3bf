# tests/unit/test_bounds.py
# Cotas de error, punto de silla y comparación con el factor binomial.
import itertools
from fractions import Fraction

import pytest

from app.algebra.field import field_of_order
from app.algebra.poly import EvalSet
from app.bounds.errors import (
    binomial_lower_bound,
    half_power,
    ln_binomial,
    ndr_error_bound,
    pbound_check,
    wj_error_bound,
    wj_main_term,
)
from app.bounds.lemma import (
    lemma_chain,
    lemma_general,
    lemma_large,
    saddle_bound_p2,
    saddle_p2,
    saddle_residual,
)
from app.bounds.liwan import liwan_compare, liwan_lower_bound
from app.core.errors import PreconditionError
from app.counting.formula import wj_distribution
from app.kernel.aj import ln_aj_at_q
from app.kernel.scalars import is_exact, lower, overlaps, sign_of, to_interval, upper, working_precision
from app.models import VerdictEnum


def test_01_half_power_stays_exact_when_possible():
    assert half_power(7, 4) == 49
    assert half_power(9, 3) == 27
    with working_precision(128):
        assert not is_exact(half_power(7, 3))
        assert overlaps(half_power(7, 3), to_interval(7) * half_power(7, 1))


def test_02_error_bound_vanishes_when_aj_is_zero():
    # ℓ = 1, p = 3 ∤ 2: A_2(3, 0) = 0.
    assert wj_error_bound(3, 1, 1, 2) == 0
    assert ndr_error_bound(5, 2, 2, 6) == 0
    with pytest.raises(PreconditionError):
        wj_error_bound(3, 1, 1, 1)


@pytest.mark.parametrize("q,k,ell", [(4, 1, 2), (5, 1, 2), (4, 2, 2)])
def test_03_wj_within_error_bound_for_every_class(q, k, ell):
    F = field_of_order(q)
    D = EvalSet.full(F)
    with working_precision(128):
        for j in range(k + 1, k + ell + 1):
            dist = wj_distribution(F, ell, k + ell, j, D)
            bound = wj_error_bound(q, k, ell, j)
            main = wj_main_term(q, k, j)
            for eps in itertools.product(range(q), repeat=ell):
                assert lower(abs(dist.get(eps, 0) - main)) <= upper(bound)


def test_04_pbound_exact_verdicts():
    assert pbound_check(4, 1, 1, 2).verdict is VerdictEnum.fails    # C(4,2)=6 < 4·A_2(4,0)=8
    assert pbound_check(5, 1, 1, 2).verdict is VerdictEnum.holds    # A_2(5,0)=0


@pytest.mark.parametrize("q,ell,j", [(81, 10, 27), (256, 5, 64), (64, 2, 16), (64, 9, 16), (256, 17, 128)])
def test_05_lemma_chain_holds(q, ell, j):
    verdicts = lemma_chain(q, ell, j, precision=128)
    assert verdicts
    assert all(v.verdict is VerdictEnum.holds for v in verdicts), [v.condition for v in verdicts]


def test_06_lemma_chain_with_ell_one_only_certifies_general():
    names = [v.condition for v in lemma_chain(64, 1, 16, precision=128)]
    assert names == ["lemma-general"]


def test_07_large_bound_flags_window():
    with working_precision(128):
        assert lemma_large(256, 5, 64).window_ok
        out = lemma_large(16, 2, 32)
        assert not out.window_ok and "c = j/q" in out.note


def test_08_exact_saddle_root():
    with working_precision(128):
        y = saddle_p2(Fraction(1, 8), Fraction(1, 4))
        assert overlaps(y, to_interval(Fraction(2, 5)))
        assert sign_of(saddle_residual(Fraction(1, 8), Fraction(1, 4), y)) in (None, 0)
        _, bound = saddle_bound_p2(64, 2, 16)
        assert sign_of(lemma_general(64, 2, 16) - bound) == 1
        assert sign_of(bound - ln_aj_at_q(64, 2, 16)) == 1
    with pytest.raises(PreconditionError):
        saddle_bound_p2(81, 2, 9)
    with pytest.raises(PreconditionError):
        saddle_p2(Fraction(1, 2), 0)


def test_09_binomial_factor_against_aj():
    with working_precision(128):
        prime = liwan_compare(7, 2, 3)
        assert overlaps(prime.difference, prime.identity)
        large = liwan_compare(256, 5, 64)
        assert sign_of(large.difference) == 1
        assert large.identity is None
        full = liwan_compare(64, 9, 16)               # γ = 1: A_j = C(q+j-1, j).
        assert sign_of(full.difference) == 1
        trivial = liwan_compare(64, 2, 0)
        assert overlaps(trivial.ln_liwan, to_interval(0)) and overlaps(trivial.ln_aj, to_interval(0))
        zero = liwan_compare(9, 1, 4)
        assert zero.ln_aj is None and zero.difference is None


def test_10_liwan_lower_bound():
    with working_precision(128):
        report = liwan_compare(256, 2, 64)
        assert sign_of(report.ln_liwan - liwan_lower_bound(256, 2, 64)) == 1
    with pytest.raises(PreconditionError):
        liwan_lower_bound(7, 2, 3)


@pytest.mark.parametrize("n,m", [(2, 1), (10, 3), (100, 50), (1000, 7)])
def test_11_stirling_bound_below_log_binomial(n, m):
    with working_precision(128):
        assert sign_of(ln_binomial(n, m) - binomial_lower_bound(n, m)) == 1
    with pytest.raises(PreconditionError):
        binomial_lower_bound(5, 5)
