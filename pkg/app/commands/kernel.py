# app/commands/kernel.py
# =================================================================================
# 🔄 Subcomando aj: A_j(u, w) con el evaluador elegido
# ---------------------------------------------------------------------------------
# - --u/--w racionales ('a/b'); o --q/--ell para (q, q₁/q) derivado internamente.
# - --method perm|series|binsum imprime solo el valor; --method all, un JSON.
# =================================================================================

from __future__ import annotations

import argparse

from app.commands.options import CommandContext, rational
from app.core.errors import PreconditionError
from app.kernel.aj import AjParams, evaluate_aj
from app.kernel.scalars import fmt_scalar, working_precision
from app.models import VerdictEnum
from app.schemas import AjOut

METHODS = ("perm", "series", "binsum")


def _params(args: argparse.Namespace) -> AjParams:
    if args.q is not None:
        if args.ell is None:
            raise PreconditionError("--q requiere --ell.")
        return AjParams.from_q_ell(args.j, args.q, args.ell)
    if args.p is None or args.u is None or args.w is None:
        raise PreconditionError("Indica --p --u --w, o bien --q --ell.")
    return AjParams(j=args.j, p=args.p, u=args.u, w=args.w)


def cmd_aj(args: argparse.Namespace, ctx: CommandContext) -> list[VerdictEnum]:
    with working_precision(ctx.config.precision):
        params = _params(args)
        if args.method != "all":
            ctx.writer.line(fmt_scalar(evaluate_aj(params, args.method, ctx.config.budget)))
            return []
        values = {m: fmt_scalar(evaluate_aj(params, m, ctx.config.budget)) for m in METHODS}
    ctx.writer.document(AjOut(j=params.j, p=params.p, u=fmt_scalar(params.u), w=fmt_scalar(params.w), values=values))
    return []


def register(sub: argparse._SubParsersAction, common: argparse.ArgumentParser) -> None:
    p = sub.add_parser("aj", parents=[common], help="A_j(u, w) por permutaciones, serie o suma binomial")
    p.add_argument("--j", type=int, required=True, help="Índice j >= 0")
    p.add_argument("--p", type=int, default=None, help="Característica (primo)")
    p.add_argument("--u", type=rational, default=None, help="u racional ('a/b')")
    p.add_argument("--w", type=rational, default=None, help="w racional ('a/b')")
    p.add_argument("--q", type=int, default=None, help="Usa u = q, w = q₁/q")
    p.add_argument("--ell", type=int, default=None, help="ℓ para q₁ = min{q, (ℓ-1)√q}")
    p.add_argument("--method", choices=METHODS + ("all",), default="binsum", help="Evaluador")
    p.set_defaults(handler=cmd_aj)
