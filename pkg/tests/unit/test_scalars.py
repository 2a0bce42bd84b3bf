# tests/unit/test_scalars.py
# Escalares exactos/intervalo y el veredicto de tres valores.
from fractions import Fraction

import pytest
from mpmath import iv

from app.core.config import ALLOWED_PRECISIONS
from app.core.errors import PreconditionError
from app.kernel.scalars import (
    certify,
    fmt_scalar,
    interval_bounds,
    lift,
    ln,
    overlaps,
    parse_rational,
    precision_ladder,
    sign_of,
    sqrt,
    to_interval,
    working_precision,
)
from app.models import VerdictEnum


def test_01_working_precision_restores_previous_value():
    before = iv.prec
    with working_precision(512) as bits:
        assert bits == 512 and iv.prec == 512
    assert iv.prec == before
    with pytest.raises(RuntimeError):
        with working_precision(256):
            raise RuntimeError("boom")
    assert iv.prec == before


def test_02_fraction_enclosure_contains_value():
    with working_precision(53):
        third = to_interval(Fraction(1, 3))
        assert overlaps(third * 3, to_interval(1))
        assert sign_of(third - to_interval(Fraction(1, 3))) is None      # El encierro toca el cero.
    assert sign_of(Fraction(-2, 5)) == -1
    assert sign_of(0) == 0


def test_03_lift_keeps_exact_mode_when_possible():
    assert lift(1, Fraction(1, 2)) == (Fraction(1), Fraction(1, 2))
    with working_precision(128):
        a, b = lift(1, sqrt(2))
        assert overlaps(a, to_interval(1)) and overlaps(b * b, to_interval(2))


def test_04_certify_three_verdicts():
    holds = certify("sqrt2>1.41", lambda bits: sqrt(2) - to_interval(Fraction(141, 100)))
    assert holds.verdict is VerdictEnum.holds and holds.holds
    fails = certify("ln2>0.7", lambda bits: ln(2) - to_interval(Fraction(7, 10)))
    assert fails.verdict is VerdictEnum.fails and fails.fails
    unknown = certify("straddle", lambda bits: iv.mpf([-1, 1]))
    assert unknown.verdict is VerdictEnum.unknown
    assert unknown.precision_bits == ALLOWED_PRECISIONS[-1]


def test_05_certify_exact_zero_depends_on_strictness():
    assert certify("eq", lambda bits: Fraction(0)).verdict is VerdictEnum.holds
    assert certify("eq", lambda bits: Fraction(0), strict=True).verdict is VerdictEnum.fails


def test_06_certify_climbs_the_ladder():
    seen = []

    def margin(bits):
        seen.append(bits)
        # Margen 2^-100: a 53 bits el encierro es [0, 2^-52] y con strict no decide.
        return to_interval(1) + to_interval(Fraction(1, 2**100)) - to_interval(1)

    verdict = certify("tiny", margin, precision=53, strict=True)
    assert verdict.holds
    assert seen[0] == 53 and seen[-1] == verdict.precision_bits > 53
    assert precision_ladder(256) == [256, 512]


def test_07_text_helpers():
    assert fmt_scalar(Fraction(3, 4)) == "3/4"
    assert fmt_scalar(5) == "5"
    with working_precision(128):
        lo, hi = interval_bounds(sqrt(2), 10)
        assert lo.startswith("1.41421") and hi.startswith("1.41421")
    assert parse_rational("3/256") == Fraction(3, 256)
    assert parse_rational("0.25") == Fraction(1, 4)
    with pytest.raises(PreconditionError):
        parse_rational("tres")
    with pytest.raises(PreconditionError):
        ln(0)
