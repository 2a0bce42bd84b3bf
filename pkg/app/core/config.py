# app/core/config.py
# =================================================================================
# ⚙️ CONFIGURACIÓN CENTRAL (entorno + .env)
# ---------------------------------------------------------------------------------
# Este módulo centraliza la lectura de variables de entorno del laboratorio.
# - Carga .env con python-dotenv (si existe).
# - Lee enteros con fallback seguro (nunca revienta por un valor mal escrito).
# - Expone un Settings (Pydantic) cacheado con get_settings().
# - Configura loguru para que stdout quede libre para los reportes (JSON/CSV).
# =================================================================================

import os                                              # Para leer variables de entorno.
import sys                                             # Para el sink de loguru en stderr.
from functools import lru_cache                        # Cache del Settings (se construye una vez).
from pathlib import Path                               # Para ubicar el .env del proyecto.

from dotenv import load_dotenv                         # Carga variables desde .env.
from loguru import logger                              # Logger del proyecto.
from pydantic import BaseModel, ConfigDict, Field, field_validator

# --- Valores por defecto ---
DEFAULT_BUDGET = 10**8                                 # Operaciones primitivas permitidas por comando.
DEFAULT_PRECISION = 128                                # Bits de trabajo para intervalos.
ALLOWED_PRECISIONS = (53, 128, 256, 512)               # Escalera de precisión permitida.
DEFAULT_LOG_LEVEL = "WARNING"                          # stdout es para datos; los logs van a stderr.

ENV_PATH = Path(".") / ".env"                          # .env en el directorio de trabajo.


def _int_from_env(name: str, default: int) -> int:
    """Lee un entero desde env; si falta o es inválido devuelve el default y avisa."""
    raw = os.getenv(name)
    if raw is None or not raw.strip():
        return default
    try:
        return int(raw.strip().replace("_", ""))       # Acepta 100_000_000 como en Python.
    except ValueError:
        logger.warning("[CONFIG] {}='{}' no es un entero válido. Usando default={}", name, raw, default)
        return default


class Settings(BaseModel):
    """Configuración efectiva del laboratorio (entorno + defaults)."""

    budget: int = Field(default=DEFAULT_BUDGET, gt=0)
    precision_bits: int = DEFAULT_PRECISION
    log_level: str = DEFAULT_LOG_LEVEL
    workers: int = Field(default=1, ge=1)

    model_config = ConfigDict(frozen=True)

    @field_validator("precision_bits")
    @classmethod
    def _check_precision(cls, v: int) -> int:
        if v not in ALLOWED_PRECISIONS:
            raise ValueError(f"precision_bits debe ser uno de {ALLOWED_PRECISIONS}, recibido {v}.")
        return v

    @field_validator("log_level")
    @classmethod
    def _upper_level(cls, v: str) -> str:
        return (v or DEFAULT_LOG_LEVEL).strip().upper()


@lru_cache(maxsize=1)
def get_settings() -> Settings:
    """Construye (una vez) el Settings a partir del entorno y del .env."""
    load_dotenv(dotenv_path=ENV_PATH)
    precision = _int_from_env("RSDIST_PRECISION", DEFAULT_PRECISION)
    if precision not in ALLOWED_PRECISIONS:
        logger.warning("[CONFIG] RSDIST_PRECISION={} fuera de {}. Usando {}", precision, ALLOWED_PRECISIONS, DEFAULT_PRECISION)
        precision = DEFAULT_PRECISION
    budget = _int_from_env("RSDIST_BUDGET", DEFAULT_BUDGET)
    if budget <= 0:
        logger.warning("[CONFIG] RSDIST_BUDGET={} debe ser > 0. Usando {}", budget, DEFAULT_BUDGET)
        budget = DEFAULT_BUDGET
    return Settings(
        budget=budget,
        precision_bits=precision,
        log_level=os.getenv("RSDIST_LOG_LEVEL", DEFAULT_LOG_LEVEL),
        workers=max(1, _int_from_env("RSDIST_WORKERS", 1)),
    )


def configure_logging(level: str | None = None) -> None:
    """Deja un único sink de loguru en stderr con el nivel indicado."""
    logger.remove()                                    # Quita el sink por defecto (stderr, DEBUG).
    logger.add(sys.stderr, level=(level or get_settings().log_level).upper())
