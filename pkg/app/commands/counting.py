# app/commands/counting.py
# =================================================================================
# 📈 Subcomandos: count, wj, moments, distribution
# ---------------------------------------------------------------------------------
# - count: tabla N_d(ε, r) (fórmula o fuerza bruta); sin --class, una línea por clase.
# - wj: W_j(ε) exacto junto al término principal C(n, j) q^{d-ℓ-j}.
# - moments: E(Y^{m̲}) por la fórmula (y por fuerza bruta con --bruteforce).
# - distribution: P(Y = r) exacta.
# =================================================================================

from __future__ import annotations

import argparse
from fractions import Fraction
from math import comb

from app.commands.options import CommandContext, add_eval_set, field_and_set, poly_arg
from app.core.errors import PreconditionError
from app.counting.classes import LeadClass, enumerate_classes
from app.counting.formula import dist_table, distance_pmf, moments_formula, wj_exact
from app.kernel.scalars import fmt_scalar
from app.lab.distance import bruteforce_class_table, moments_bruteforce
from app.models import VerdictEnum
from app.schemas import DistributionOut, DistTableOut, MomentOut, MomentsOut, WjOut


def _degree(args: argparse.Namespace) -> int:
    if args.d is not None:
        return args.d
    if args.k is None:
        raise PreconditionError("Indica --d o --k (d = k + ℓ).")
    return args.k + args.ell


def cmd_count(args: argparse.Namespace, ctx: CommandContext) -> list[VerdictEnum]:
    F, D = field_and_set(args.q, args.D)
    d = _degree(args)
    if args.class_text is not None:
        classes = [LeadClass.parse(F, args.class_text, args.ell)]
    else:
        classes = enumerate_classes(F, d, args.ell)
    build = bruteforce_class_table if args.bruteforce else dist_table
    for eps in classes:
        ctx.writer.document(DistTableOut.from_domain(build(eps, d, D, ctx.config.budget)))
    return []


def cmd_wj(args: argparse.Namespace, ctx: CommandContext) -> list[VerdictEnum]:
    F, D = field_and_set(args.q, args.D)
    eps = LeadClass.parse(F, args.class_text, args.ell)
    value = wj_exact(eps, args.j, args.d, D, ctx.config.budget)
    main = comb(D.n, args.j) * Fraction(F.q) ** (args.d - args.ell - args.j)
    ctx.writer.document(WjOut(
        q=F.q, ell=args.ell, d=args.d, j=args.j, class_=list(eps.coeffs), value=value, main_term=fmt_scalar(main),
    ))
    return []


def cmd_moments(args: argparse.Namespace, ctx: CommandContext) -> list[VerdictEnum]:
    F, D = field_and_set(args.q, args.D)
    f = poly_arg(F, args.f)
    orders = [args.m] if args.m is not None else list(range(1, f.degree + 3))
    out, statuses = [], []
    for m in orders:
        report = moments_formula(f, args.k, D, m, ctx.config.budget)
        brute = moments_bruteforce(f, args.k, D, m, ctx.config.budget) if args.bruteforce else None
        if brute is not None:
            statuses.append(VerdictEnum.holds if brute == report.value else VerdictEnum.fails)
        out.append(MomentOut.from_domain(report, brute))
    ctx.writer.document(MomentsOut(q=F.q, k=args.k, f=list(f.coeffs), moments=out))
    return statuses


def cmd_distribution(args: argparse.Namespace, ctx: CommandContext) -> list[VerdictEnum]:
    F, D = field_and_set(args.q, args.D)
    f = poly_arg(F, args.f)
    pmf = distance_pmf(f, args.k, D, ctx.config.budget)
    ctx.writer.document(DistributionOut(q=F.q, k=args.k, f=list(f.coeffs), pmf=[fmt_scalar(x) for x in pmf]))
    return []


def register(sub: argparse._SubParsersAction, common: argparse.ArgumentParser) -> None:
    p = sub.add_parser("count", parents=[common], help="Tabla N_d(ε, r), r = 0..d")
    p.add_argument("--q", type=int, required=True, help="Orden del cuerpo")
    p.add_argument("--ell", type=int, required=True, help="Coeficientes líderes ℓ")
    p.add_argument("--k", type=int, default=None, help="Dimensión (d = k + ℓ)")
    p.add_argument("--d", type=int, default=None, help="Grado d (alternativa a --k)")
    p.add_argument("--class", dest="class_text", default=None, help="Clase 'c_1,...,c_ℓ' (por defecto todas)")
    p.add_argument("--bruteforce", action="store_true", help="Enumera M_d(ε) en lugar de usar la fórmula")
    add_eval_set(p)
    p.set_defaults(handler=cmd_count)

    p = sub.add_parser("wj", parents=[common], help="W_j(ε) por enumeración de clases × subconjuntos")
    p.add_argument("--q", type=int, required=True, help="Orden del cuerpo")
    p.add_argument("--ell", type=int, required=True, help="Coeficientes líderes ℓ")
    p.add_argument("--d", type=int, required=True, help="Grado d")
    p.add_argument("--j", type=int, required=True, help="Tamaño de los subconjuntos")
    p.add_argument("--class", dest="class_text", required=True, help="Clase 'c_1,...,c_ℓ'")
    add_eval_set(p)
    p.set_defaults(handler=cmd_wj)

    p = sub.add_parser("moments", parents=[common], help="Momentos factoriales E(Y^{m̲})")
    p.add_argument("--q", type=int, required=True, help="Orden del cuerpo")
    p.add_argument("--k", type=int, required=True, help="Dimensión del código")
    p.add_argument("--f", required=True, help="Mónico 'c0,c1,...,1' de grado k+ℓ")
    p.add_argument("--m", type=int, default=None, help="Orden m (por defecto 1..k+ℓ+2)")
    p.add_argument("--bruteforce", action="store_true", help="Contrasta con la media exhaustiva sobre el código")
    add_eval_set(p)
    p.set_defaults(handler=cmd_moments)

    p = sub.add_parser("distribution", parents=[common], help="P(Y = r) exacta para r = 0..k+ℓ")
    p.add_argument("--q", type=int, required=True, help="Orden del cuerpo")
    p.add_argument("--k", type=int, required=True, help="Dimensión del código")
    p.add_argument("--f", required=True, help="Mónico 'c0,c1,...,1' de grado k+ℓ")
    add_eval_set(p)
    p.set_defaults(handler=cmd_distribution)
