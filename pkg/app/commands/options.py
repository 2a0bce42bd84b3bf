# app/commands/options.py
# Piezas comunes de los subcomandos: contexto de ejecución y tipos de argparse.
from __future__ import annotations

import argparse
from dataclasses import dataclass
from fractions import Fraction

from app.algebra.field import FieldSpec, field_of_order
from app.algebra.poly import EvalSet, Poly
from app.core.errors import RsDistError
from app.kernel.scalars import parse_rational
from app.schemas import RunConfig
from app.utils.output import ReportWriter


@dataclass(frozen=True)
class CommandContext:
    config: RunConfig
    writer: ReportWriter


def rational(text: str) -> Fraction:
    """Tipo argparse: 'a/b', entero o decimal finito."""
    try:
        return parse_rational(text)
    except RsDistError as e:
        raise argparse.ArgumentTypeError(str(e)) from e


def int_list(text: str) -> list[int]:
    """Tipo argparse: '2,3,5'."""
    try:
        return [int(t) for t in text.split(",") if t.strip()]
    except ValueError as e:
        raise argparse.ArgumentTypeError(f"Lista de enteros mal formada: '{text}'.") from e


def field_and_set(q: int, d_text: str | None) -> tuple[FieldSpec, EvalSet]:
    """F_q y D (por defecto D = F_q)."""
    F = field_of_order(q)
    return F, EvalSet.parse(F, d_text)


def poly_arg(F: FieldSpec, text: str) -> Poly:
    return Poly.parse(F, text)


def add_eval_set(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--D", dest="D", default=None, help="Conjunto de evaluación 'a,b,c' (por defecto F_q completo)")
