# app/commands/verify.py
# Subcomando verify-all: una línea JSON por comprobación y el resumen al final.
from __future__ import annotations

import argparse

from app.commands.options import CommandContext
from app.models import VerdictEnum
from app.verification import VerifyPlan, run_verification


def cmd_verify_all(args: argparse.Namespace, ctx: CommandContext) -> list[VerdictEnum]:
    plan = VerifyPlan.desk() if args.desk else VerifyPlan.full()
    results, summary = run_verification(
        plan,
        precision=ctx.config.precision,
        budget=ctx.config.budget,
        on_check=ctx.writer.document,
    )
    ctx.writer.document(summary)
    return [r.status for r in results]


def register(sub: argparse._SubParsersAction, common: argparse.ArgumentParser) -> None:
    p = sub.add_parser("verify-all", parents=[common], help="Batería completa de comprobaciones")
    p.add_argument("--desk", action="store_true", help="Rejillas de escritorio (segundos) en lugar de las completas")
    p.set_defaults(handler=cmd_verify_all)
