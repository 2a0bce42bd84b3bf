# app/commands/algebra.py
# =================================================================================
# 🔢 Subcomandos: field-info, distance, nfr
# ---------------------------------------------------------------------------------
# Consultas directas al cuerpo y a los oráculos de fuerza bruta.
# =================================================================================

from __future__ import annotations

import argparse

from app.algebra.field import build_field
from app.algebra.poly import evaluate_on
from app.commands.options import CommandContext, add_eval_set, field_and_set, int_list, poly_arg
from app.core.errors import PreconditionError
from app.counting.formula import dist_table
from app.counting.classes import class_of
from app.lab.distance import classify_word, shift_root_counts
from app.models import VerdictEnum
from app.schemas import FieldInfoOut, NfrOut, WordOut


def cmd_field_info(args: argparse.Namespace, ctx: CommandContext) -> list[VerdictEnum]:
    F = build_field(args.p, args.s)
    ctx.writer.document(FieldInfoOut(
        p=F.p,
        s=F.s,
        q=F.q,
        modulus=list(F.modulus) if F.modulus else None,
        generator=F.generator,
    ))
    return []


def cmd_distance(args: argparse.Namespace, ctx: CommandContext) -> list[VerdictEnum]:
    F, D = field_and_set(args.q, args.D)
    if args.word is not None:
        word = args.word
    else:
        word = list(evaluate_on(poly_arg(F, args.poly), D))
    ctx.writer.document(WordOut.from_domain(classify_word(word, args.k, D, ctx.config.budget)))
    return []


def cmd_nfr(args: argparse.Namespace, ctx: CommandContext) -> list[VerdictEnum]:
    F, D = field_and_set(args.q, args.D)
    f = poly_arg(F, args.f)
    roots = shift_root_counts(f, args.k, D, ctx.config.budget)
    counts = [int((roots == r).sum()) for r in range(f.degree + 1)]
    formula = None
    statuses: list[VerdictEnum] = []
    if args.check:
        ell = f.degree - args.k
        if ell < 1:
            raise PreconditionError(f"--check requiere deg(f) > k (deg={f.degree}, k={args.k}).")
        formula = list(dist_table(class_of(f, ell), f.degree, D, ctx.config.budget).counts)
        statuses.append(VerdictEnum.holds if formula == counts else VerdictEnum.fails)
    ctx.writer.document(NfrOut(q=F.q, k=args.k, f=list(f.coeffs), counts=counts, formula=formula))
    return statuses


def register(sub: argparse._SubParsersAction, common: argparse.ArgumentParser) -> None:
    p = sub.add_parser("field-info", parents=[common], help="Describe F_{p^s} (módulo y generador)")
    p.add_argument("--p", type=int, required=True, help="Característica (primo)")
    p.add_argument("--s", type=int, default=1, help="Grado de extensión")
    p.set_defaults(handler=cmd_field_info)

    p = sub.add_parser("distance", parents=[common], help="Distancia de una palabra a RS_{n,k} (fuerza bruta)")
    p.add_argument("--q", type=int, required=True, help="Orden del cuerpo")
    p.add_argument("--k", type=int, required=True, help="Dimensión del código")
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--word", type=int_list, help="Palabra 'u_1,...,u_n'")
    src.add_argument("--poly", help="Polinomio 'c0,c1,...' a evaluar en D")
    add_eval_set(p)
    p.set_defaults(handler=cmd_distance)

    p = sub.add_parser("nfr", parents=[common], help="N(f, r) para r = 0..deg f por enumeración directa")
    p.add_argument("--q", type=int, required=True, help="Orden del cuerpo")
    p.add_argument("--k", type=int, required=True, help="Dimensión del código")
    p.add_argument("--f", required=True, help="Mónico 'c0,c1,...,1'")
    p.add_argument("--check", action="store_true", help="Compara con N_{k+ℓ}(⟨f⟩, r) de la fórmula")
    add_eval_set(p)
    p.set_defaults(handler=cmd_nfr)
