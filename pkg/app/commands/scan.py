# app/commands/scan.py
# Subcomando scan-deepholes: JSON Lines, un registro por palabra; --summary para el resumen.
from __future__ import annotations

import argparse

from loguru import logger

from app.commands.options import CommandContext
from app.lab.scan import scan_deep_holes
from app.models import VerdictEnum
from app.schemas import ScanRecordOut, ScanSummaryOut


def cmd_scan(args: argparse.Namespace, ctx: CommandContext) -> list[VerdictEnum]:
    on_record = None if args.summary else (lambda rec: ctx.writer.document(ScanRecordOut.from_domain(rec)))
    report = scan_deep_holes(
        args.q,
        args.k,
        args.ell,
        budget=ctx.config.budget,
        workers=ctx.config.workers,
        on_record=on_record,
        cross_check=args.cross_check,
    )
    if args.summary:
        ctx.writer.document(ScanSummaryOut.from_domain(report))
    if report.deep_holes_above_k:
        logger.warning("[SCAN] {} agujero(s) profundo(s) de grado > k", len(report.deep_holes_above_k))
    clean = report.degree_k_all_deep and not report.bound_violations and not report.count_mismatches
    return [VerdictEnum.holds if clean else VerdictEnum.fails]


def register(sub: argparse._SubParsersAction, common: argparse.ArgumentParser) -> None:
    p = sub.add_parser("scan-deepholes", parents=[common], help="Barrido exhaustivo de agujeros profundos (D = F_q)")
    p.add_argument("--q", type=int, required=True, help="Orden del cuerpo")
    p.add_argument("--k", type=int, required=True, help="Dimensión del código")
    p.add_argument("--ell", type=int, required=True, help="Grados k..k+ℓ")
    p.add_argument("--summary", action="store_true", help="Solo el resumen (un documento JSON)")
    p.add_argument("--cross-check", action="store_true", help="Recalcula la distancia desde los conteos N_{k+ℓ}(⟨f⟩, r)")
    p.set_defaults(handler=cmd_scan)
