# app/commands/bounds.py
# =================================================================================
# 📉 Subcomandos: bound wj|ndr|lemma, pbound, compare-liwan
# ---------------------------------------------------------------------------------
# Los valores se evalúan a la precisión de la ejecución; las comparaciones
# (cadena de cotas, pbound) salen como veredictos certificados.
# =================================================================================

from __future__ import annotations

import argparse

from app.bounds.errors import ndr_error_bound, pbound_check, wj_error_bound
from app.bounds.lemma import lemma_chain, lemma_general, lemma_large, saddle_bound_p2
from app.bounds.liwan import liwan_compare
from app.commands.options import CommandContext
from app.kernel.aj import characteristic, ln_aj_at_q
from app.kernel.scalars import fmt_scalar, working_precision
from app.models import VerdictEnum
from app.schemas import BoundOut, LemmaOut, LiWanOut, SaddleOut, VerdictOut


def cmd_bound_wj(args: argparse.Namespace, ctx: CommandContext) -> list[VerdictEnum]:
    with working_precision(ctx.config.precision):
        value = wj_error_bound(args.q, args.k, args.ell, args.j)
    params = {"q": args.q, "k": args.k, "ell": args.ell, "j": args.j}
    ctx.writer.document(BoundOut(bound="wj", params=params, value=fmt_scalar(value)))
    return []


def cmd_bound_ndr(args: argparse.Namespace, ctx: CommandContext) -> list[VerdictEnum]:
    with working_precision(ctx.config.precision):
        value = ndr_error_bound(args.q, args.k, args.ell, args.r)
    params = {"q": args.q, "k": args.k, "ell": args.ell, "r": args.r}
    ctx.writer.document(BoundOut(bound="ndr", params=params, value=fmt_scalar(value)))
    return []


def lemma_report(q: int, ell: int, j: int, precision: int) -> LemmaOut:
    """ln A_j, las dos cotas, la silla exacta (p = 2) y los veredictos de la cadena."""
    p = characteristic(q)
    params = {"q": q, "ell": ell, "j": j}
    with working_precision(precision):
        ln_aj = ln_aj_at_q(q, ell, j)
        general = lemma_general(q, ell, j)
        large = lemma_large(q, ell, j)
        saddle = saddle_bound_p2(q, ell, j) if p == 2 else None

    checks = lemma_chain(q, ell, j, precision)

    return LemmaOut(
        q=q,
        ell=ell,
        j=j,
        ln_aj=None if ln_aj is None else fmt_scalar(ln_aj),
        general=fmt_scalar(general),
        large=BoundOut.from_flagged("lemma-large", params, large),
        saddle_p2=None if saddle is None else SaddleOut(y=fmt_scalar(saddle[0]), value=fmt_scalar(saddle[1])),
        checks=[VerdictOut.from_domain(v) for v in checks],
    )


def cmd_bound_lemma(args: argparse.Namespace, ctx: CommandContext) -> list[VerdictEnum]:
    report = lemma_report(args.q, args.ell, args.j, ctx.config.precision)
    ctx.writer.document(report)
    return [c.verdict for c in report.checks]


def cmd_pbound(args: argparse.Namespace, ctx: CommandContext) -> list[VerdictEnum]:
    verdict = pbound_check(args.q, args.k, args.ell, args.r, ctx.config.precision)
    ctx.writer.document(VerdictOut.from_domain(verdict))
    return [verdict.verdict]


def cmd_liwan(args: argparse.Namespace, ctx: CommandContext) -> list[VerdictEnum]:
    with working_precision(ctx.config.precision):
        report = liwan_compare(args.q, args.ell, args.j)
    ctx.writer.document(LiWanOut.from_domain(report))
    return []


def _qkl(p: argparse.ArgumentParser) -> None:
    p.add_argument("--q", type=int, required=True, help="Orden del cuerpo")
    p.add_argument("--k", type=int, required=True, help="Dimensión del código")
    p.add_argument("--ell", type=int, required=True, help="Coeficientes líderes ℓ")


def register(sub: argparse._SubParsersAction, common: argparse.ArgumentParser) -> None:
    bound = sub.add_parser("bound", help="Cotas de error y de ln A_j")
    kinds = bound.add_subparsers(dest="kind", required=True)

    p = kinds.add_parser("wj", parents=[common], help="Cota de |W_j(ε) - C(q,j) q^{k-j}|")
    _qkl(p)
    p.add_argument("--j", type=int, required=True, help="k+1 <= j <= k+ℓ")
    p.set_defaults(handler=cmd_bound_wj)

    p = kinds.add_parser("ndr", parents=[common], help="Cota de |N_{k+ℓ}(ε, r) - término principal|")
    _qkl(p)
    p.add_argument("--r", type=int, required=True, help="Número de raíces r")
    p.set_defaults(handler=cmd_bound_ndr)

    p = kinds.add_parser("lemma", parents=[common], help="ln A_j frente a las cotas de punto de silla")
    p.add_argument("--q", type=int, required=True, help="Orden del cuerpo")
    p.add_argument("--ell", type=int, required=True, help="Coeficientes líderes ℓ")
    p.add_argument("--j", type=int, required=True, help="j >= 1")
    p.set_defaults(handler=cmd_bound_lemma)

    p = sub.add_parser("pbound", parents=[common], help="Condición suficiente para P(Y >= r) > 0")
    _qkl(p)
    p.add_argument("--r", type=int, required=True, help="k+1 <= r <= k+ℓ")
    p.set_defaults(handler=cmd_pbound)

    p = sub.add_parser("compare-liwan", parents=[common], help="ln C(q/p+q₁+j-1, j) frente a ln A_j(q, q₁/q)")
    p.add_argument("--q", type=int, required=True, help="Orden del cuerpo")
    p.add_argument("--ell", type=int, required=True, help="Coeficientes líderes ℓ")
    p.add_argument("--j", type=int, required=True, help="j >= 0")
    p.set_defaults(handler=cmd_liwan)
