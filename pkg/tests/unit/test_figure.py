# tests/unit/test_figure.py
# Rejilla de signos de f(p, c) y brackets de sus raíces.
from fractions import Fraction

import pytest

from app.bounds.figure import FIGURE_COLUMNS, FIGURE_PRIMES, c_grid, figure_scan, write_figure_csv
from app.core.errors import PreconditionError


def test_01_grid_is_exact_and_open_at_one():
    grid = c_grid(Fraction(1, 4))
    assert grid == [Fraction(1, 4), Fraction(1, 2), Fraction(3, 4)]
    assert len(c_grid(Fraction(1, 100))) == 99
    for bad in (Fraction(0), Fraction(1), Fraction(-1, 10)):
        with pytest.raises(PreconditionError):
            c_grid(bad)


def test_02_one_bracket_per_prime():
    scan = figure_scan(FIGURE_PRIMES, Fraction(1, 100), precision=128)
    assert list(scan.brackets["p"]) == list(FIGURE_PRIMES)
    assert (scan.brackets["c_left"] < scan.brackets["c_right"]).all()
    assert set(scan.table["sign"]) <= {"+", "-"}
    assert len(scan.table) == len(FIGURE_PRIMES) * 99


def test_03_sign_goes_from_positive_to_negative():
    scan = figure_scan((2,), Fraction(1, 10), precision=128)
    signs = list(scan.table["sign"])
    assert signs[0] == "+" and signs[-1] == "-"
    first_minus = signs.index("-")
    assert all(s == "-" for s in signs[first_minus:])


def test_04_csv_layout(tmp_path):
    scan = figure_scan((3,), Fraction(1, 5), precision=128)
    out = tmp_path / "figure.csv"
    text = write_figure_csv(scan, out)
    assert text.splitlines()[0] == ",".join(FIGURE_COLUMNS)
    assert len(text.splitlines()) == 1 + 4
    assert "\r" not in text
    assert out.read_text(encoding="utf-8") == text
