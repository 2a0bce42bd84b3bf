# app/commands/region.py
# =================================================================================
# 🗺️ Subcomandos: region thm7|thm2|gamma-max|thm23, margins, figure
# ---------------------------------------------------------------------------------
# - region: una condición suficiente certificada (o γ máximo / constantes).
# - margins: los márgenes de los corolarios, un veredicto por línea; el estado
#   de salida compara cada veredicto con el esperado.
# - figure: CSV p, c, f_lo, f_hi, sign (o los brackets de raíces).
# =================================================================================

from __future__ import annotations

import argparse
from fractions import Fraction

from loguru import logger

from app.bounds.figure import BRACKET_COLUMNS, FIGURE_PRIMES, figure_scan, write_figure_csv
from app.bounds.region import (
    RegionParams,
    corollary_margins,
    gamma_max,
    margin_status,
    thm2_check,
    thm7_check,
    thm23_constants,
)
from app.commands.options import CommandContext, int_list, rational
from app.kernel.scalars import fmt_scalar, working_precision
from app.models import VerdictEnum
from app.schemas import BoundOut, ConstantsOut, VerdictOut


def _region_params(args: argparse.Namespace) -> RegionParams:
    return RegionParams(p=args.p, q=args.q, k=args.k, ell=args.ell, branch=args.branch)


def cmd_thm7(args: argparse.Namespace, ctx: CommandContext) -> list[VerdictEnum]:
    verdict = thm7_check(_region_params(args), ctx.config.precision)
    ctx.writer.document(VerdictOut.from_domain(verdict))
    return [verdict.verdict]


def cmd_thm2(args: argparse.Namespace, ctx: CommandContext) -> list[VerdictEnum]:
    verdict = thm2_check(_region_params(args), ctx.config.precision)
    ctx.writer.document(VerdictOut.from_domain(verdict))
    return [verdict.verdict]


def cmd_gamma_max(args: argparse.Namespace, ctx: CommandContext) -> list[VerdictEnum]:
    with working_precision(ctx.config.precision):
        value = gamma_max(args.p, args.q, args.c, args.branch, g_at_half=args.g_half)
    params = {"p": args.p, "q": args.q, "c": fmt_scalar(args.c), "branch": args.branch, "g_at_half": args.g_half}
    ctx.writer.document(BoundOut(bound="gamma_max", params=params, value=fmt_scalar(value)))
    return []


def cmd_thm23(args: argparse.Namespace, ctx: CommandContext) -> list[VerdictEnum]:
    report = thm23_constants(c=args.c, p=args.p, precision=ctx.config.precision)
    ctx.writer.document(ConstantsOut.from_domain(report))
    return [v.verdict for v in report.checks]


def cmd_margins(args: argparse.Namespace, ctx: CommandContext) -> list[VerdictEnum]:
    statuses = []
    for row, verdict in corollary_margins(ctx.config.precision, include_alt=not args.printed_only):
        ctx.writer.document(VerdictOut.from_domain(verdict))
        statuses.append(margin_status(row, verdict))
    return statuses


def cmd_figure(args: argparse.Namespace, ctx: CommandContext) -> list[VerdictEnum]:
    scan = figure_scan(args.primes, args.step, ctx.config.precision)
    if args.brackets:
        ctx.writer.raw(scan.brackets.to_csv(index=False, lineterminator="\n", columns=BRACKET_COLUMNS))
    else:
        ctx.writer.raw(write_figure_csv(scan))
    missing = [p for p in args.primes if p not in set(scan.brackets["p"])]
    if missing:
        logger.warning("[FIGURE] sin cambio de signo certificado para p={}", missing)
    return [VerdictEnum.fails if missing else VerdictEnum.holds]


def register(sub: argparse._SubParsersAction, common: argparse.ArgumentParser) -> None:
    region = sub.add_parser("region", help="Condiciones de región f, g, h₁, h₂")
    kinds = region.add_subparsers(dest="kind", required=True)

    for name, handler, text in (
        ("thm7", cmd_thm7, "f(p,c) - g(q,c) >= γ h(p,q,c), certificado"),
        ("thm2", cmd_thm2, "Condición simplificada con los lados derechos impresos"),
    ):
        p = kinds.add_parser(name, parents=[common], help=text)
        p.add_argument("--p", type=int, required=True, help="Característica")
        p.add_argument("--q", type=int, required=True, help="Orden del cuerpo (potencia de p)")
        p.add_argument("--k", type=int, required=True, help="Dimensión del código")
        p.add_argument("--ell", type=int, required=True, help="ℓ (γ = (ℓ-1)/√q)")
        p.add_argument("--branch", choices=("a", "b"), default="a", help="a: c=(k+ℓ)/q con h₁; b: c=(k+1)/q con h₂")
        p.set_defaults(handler=handler)

    p = kinds.add_parser("gamma-max", parents=[common], help="max(0, (f - g)/h)")
    p.add_argument("--p", type=int, required=True, help="Característica")
    p.add_argument("--q", type=int, required=True, help="Orden del cuerpo")
    p.add_argument("--c", type=rational, required=True, help="c en (0, 1)")
    p.add_argument("--branch", choices=("a", "b"), default="b", help="h₁ (a) o h₂ (b)")
    p.add_argument("--g-half", action="store_true", help="Usa g(q, 1/2) en el numerador")
    p.set_defaults(handler=cmd_gamma_max)

    p = kinds.add_parser("thm23", parents=[common], help="Constantes p₀, q₀, γ₀ y comprobaciones de g")
    which = p.add_mutually_exclusive_group(required=True)
    which.add_argument("--c", type=rational, default=None, help="c en (0, 1): variante con p₀ = (1+c)/(1-c)")
    which.add_argument("--p", type=int, default=None, help="Primo p: variante 3 <= k+ℓ <= 0.7q")
    p.set_defaults(handler=cmd_thm23)

    p = sub.add_parser("margins", parents=[common], help="Márgenes de los corolarios, certificados")
    p.add_argument("--printed-only", action="store_true", help="Omite la fila del extremo de rango de 2c")
    p.set_defaults(handler=cmd_margins)

    p = sub.add_parser("figure", parents=[common], help="Signo de f(p, c) en una rejilla (CSV)")
    p.add_argument("--primes", type=int_list, default=list(FIGURE_PRIMES), help="Primos '2,3,5,7,17'")
    p.add_argument("--step", type=rational, default=Fraction(1, 1000), help="Paso de la rejilla en c")
    p.add_argument("--brackets", action="store_true", help="Emite los brackets de raíces en lugar de la rejilla")
    p.set_defaults(handler=cmd_figure)
