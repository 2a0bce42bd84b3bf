# app/main.py                                                                   # Punto de entrada de la CLI.

# =================================================================================
# 🧠 NÚCLEO DE LA CLI (argparse)
# ---------------------------------------------------------------------------------
# - Construye el parser con las opciones comunes (--budget, --precision, ...)
# - Registra los subcomandos modulares (algebra, counting, scan, kernel, bounds,
#   region, verify)
# - Traduce estados y errores a códigos de salida:
#     0 = todo holds · 1 = algún fails · 2 = algún unknown · 3 = uso/presupuesto
# =================================================================================

from __future__ import annotations

import argparse
import sys
from typing import Sequence

from loguru import logger
from pydantic import ValidationError

from app.commands import algebra, bounds, counting, kernel, region, scan, verify
from app.commands.options import CommandContext
from app.core.config import ALLOWED_PRECISIONS, configure_logging, get_settings
from app.core.errors import RsDistError
from app.models import VerdictEnum
from app.schemas import RunConfig
from app.utils.output import ReportWriter

EXIT_OK = 0
EXIT_FAILS = 1
EXIT_UNKNOWN = 2
EXIT_USAGE = 3

COMMAND_MODULES = (algebra, counting, scan, kernel, bounds, region, verify)   # Orden de aparición en --help.


# ---------------------------------------------------------------------------------
# 🧩 Parser
# ---------------------------------------------------------------------------------
def _common_options() -> argparse.ArgumentParser:
    """Opciones compartidas; los valores por defecto salen de get_settings() en run()."""
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--budget", type=int, default=None, help="Tope de operaciones primitivas (RSDIST_BUDGET)")
    common.add_argument("--precision", type=int, choices=ALLOWED_PRECISIONS, default=None, help="Bits de trabajo de los intervalos")
    common.add_argument("--workers", type=int, default=None, help="Procesos para los barridos exhaustivos")
    common.add_argument("--out", default=None, help="Archivo de salida (por defecto stdout)")
    common.add_argument("--log-level", default=None, help="Nivel de loguru en stderr (DEBUG, INFO, WARNING...)")
    return common


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rsdist",
        description="Laboratorio de distancias a códigos Reed-Solomon: conteos exactos, cotas certificadas y barridos.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    common = _common_options()
    for module in COMMAND_MODULES:
        module.register(sub, common)
    return parser


# ---------------------------------------------------------------------------------
# 🚦 Códigos de salida
# ---------------------------------------------------------------------------------
def exit_code(statuses: Sequence[VerdictEnum]) -> int:
    """fails domina a unknown; sin comprobaciones (solo valores) se sale con 0."""
    if VerdictEnum.fails in statuses:
        return EXIT_FAILS
    if VerdictEnum.unknown in statuses:
        return EXIT_UNKNOWN
    return EXIT_OK


def _parse(parser: argparse.ArgumentParser, argv: Sequence[str] | None) -> argparse.Namespace | int:
    try:
        return parser.parse_args(argv)
    except SystemExit as e:                                                     # argparse sale con 2 en errores de uso.
        return EXIT_OK if e.code in (0, None) else EXIT_USAGE


def run(argv: Sequence[str] | None = None) -> int:
    """Ejecuta un subcomando y devuelve el código de salida (sin llamar a sys.exit)."""
    parsed = _parse(build_parser(), argv)
    if isinstance(parsed, int):
        return parsed
    args = parsed

    settings = get_settings()
    configure_logging(args.log_level or settings.log_level)
    try:
        config = RunConfig(
            command=args.command,
            budget=args.budget if args.budget is not None else settings.budget,
            precision=args.precision or settings.precision_bits,
            workers=args.workers or settings.workers,
            output=args.out,
        )
    except ValidationError as e:
        print(f"❌ Opciones inválidas: {e}", file=sys.stderr)
        return EXIT_USAGE

    logger.debug("[CLI] {} | budget={} precision={} workers={}", config.command, config.budget, config.precision, config.workers)
    try:
        with ReportWriter(config.output) as writer:
            statuses = args.handler(args, CommandContext(config=config, writer=writer))
    except (RsDistError, ValidationError) as e:
        logger.debug("[CLI] {} abortado: {}", config.command, e)
        print(f"❌ {e}", file=sys.stderr)
        return EXIT_USAGE

    code = exit_code(statuses)
    logger.info("[CLI] {} terminado | comprobaciones={} | código={}", config.command, len(statuses), code)
    return code


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
