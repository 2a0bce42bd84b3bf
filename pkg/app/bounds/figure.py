# app/bounds/figure.py
# =================================================================================
# 📊 DATOS DE LA FIGURA: signo certificado de f(p, c) en una rejilla de c
# ---------------------------------------------------------------------------------
# - Una fila por (p, c) con el encierro [f_lo, f_hi] y el signo ('+', '-', '?').
# - Los cambios de signo certificados entre puntos vecinos dan los brackets
#   donde f(p, ·) cruza el cero.
# - Salida como pandas.DataFrame (CSV con to_csv, finales de línea LF).
# =================================================================================

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Iterable

import pandas as pd
from loguru import logger
from mpmath import mp

from app.bounds.region import f_fn
from app.core.errors import PreconditionError
from app.kernel.scalars import default_precision, lower, sign_of, upper, working_precision

FIGURE_PRIMES = (2, 3, 5, 7, 17)
FIGURE_COLUMNS = ["p", "c", "f_lo", "f_hi", "sign"]
BRACKET_COLUMNS = ["p", "c_left", "c_right"]
CSV_DIGITS = 17

_SIGN_TEXT = {1: "+", -1: "-", 0: "0", None: "?"}


@dataclass(frozen=True)
class FigureScan:
    table: pd.DataFrame
    brackets: pd.DataFrame


def c_grid(step: Fraction) -> list[Fraction]:
    """c = step, 2·step, ... < 1."""
    step = Fraction(step)
    if step <= 0 or step >= 1:
        raise PreconditionError(f"El paso debe estar en (0, 1) (step={step}).")
    out = []
    c = step
    while c < 1:
        out.append(c)
        c += step
    return out


def figure_scan(primes: Iterable[int] = FIGURE_PRIMES, step: Fraction = Fraction(1, 1000), precision: int | None = None) -> FigureScan:
    """Signo de f(p, c) en la rejilla y brackets de sus raíces."""
    grid = c_grid(step)
    rows, brackets = [], []
    with working_precision(precision or default_precision()):
        for p in primes:
            prev_c, prev_sign = None, None
            for c in grid:
                value = f_fn(p, c)
                s = sign_of(value)
                rows.append({
                    "p": p,
                    "c": float(c),
                    "f_lo": mp.nstr(lower(value), CSV_DIGITS),
                    "f_hi": mp.nstr(upper(value), CSV_DIGITS),
                    "sign": _SIGN_TEXT[s],
                })
                if prev_sign in (1, -1) and s in (1, -1) and s != prev_sign:
                    brackets.append({"p": p, "c_left": float(prev_c), "c_right": float(c)})
                if s is not None:
                    prev_c, prev_sign = c, s
    logger.debug("[FIGURE] primos={} | puntos={} | brackets={}", list(primes), len(rows), len(brackets))
    return FigureScan(
        table=pd.DataFrame(rows, columns=FIGURE_COLUMNS),
        brackets=pd.DataFrame(brackets, columns=BRACKET_COLUMNS),
    )


def write_figure_csv(scan: FigureScan, path: str | Path | None = None) -> str:
    """Escribe (o devuelve) el CSV de la rejilla."""
    text = scan.table.to_csv(index=False, lineterminator="\n")
    if path is not None:
        Path(path).write_text(text, encoding="utf-8")
    return text
