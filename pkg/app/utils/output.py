# app/utils/output.py
# =================================================================================
# 🖨️ ESCRITOR DE INFORMES (stdout o archivo, UTF-8, finales LF)
# ---------------------------------------------------------------------------------
# - document(): un documento JSON por línea (JSON único o JSON Lines).
# - raw(): texto tal cual (CSV de la figura, valores escalares sueltos).
# - Los logs NUNCA pasan por aquí: van a stderr con loguru.
# =================================================================================

from __future__ import annotations

import sys
from pathlib import Path
from typing import IO, Optional

from loguru import logger
from pydantic import BaseModel


class ReportWriter:
    """Destino de los informes de un subcomando."""

    def __init__(self, path: Optional[str] = None):
        self.path = path
        self._own = path is not None
        self._stream: IO[str] = (
            Path(path).open("w", encoding="utf-8", newline="\n") if path else sys.stdout
        )
        self.documents = 0

    def __enter__(self) -> ReportWriter:
        return self

    def __exit__(self, *exc) -> None:
        self.close()

    def document(self, model: BaseModel) -> None:
        """Escribe el modelo como una línea JSON (alias incluidos: 'class')."""
        self._stream.write(model.model_dump_json(by_alias=True) + "\n")
        self.documents += 1

    def line(self, text: str) -> None:
        self._stream.write(text.rstrip("\n") + "\n")

    def raw(self, text: str) -> None:
        self._stream.write(text)

    def close(self) -> None:
        self._stream.flush()
        if self._own:
            self._stream.close()
            logger.info("[OUT] {} documento(s) escritos en {}", self.documents, self.path)
