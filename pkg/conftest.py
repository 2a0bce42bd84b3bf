# conftest.py
# -------------------------------------------------------------------------------------
# Archivo: conftest.py (raíz del proyecto)
# Propósito: Configurar pytest para el laboratorio.
#            - Muestra un cronómetro actualizando en la misma línea durante la suite.
#            - Registra el marcador `slow` (rejillas completas de aceptación).
#            - Expone fixtures de cuerpos finitos y un RNG con semilla fija.
# Uso de variables de entorno (todas opcionales):
#   RSDIST_FULL="0|1"              --> Si 1, también corren los tests marcados `slow`.
#   PYTEST_TICKER="0|1"            --> Si 0, desactiva el cronómetro (útil en CI).
# -------------------------------------------------------------------------------------

from __future__ import annotations  # Permite anotaciones de tipos adelantadas
import os                           # Para leer variables de entorno
import random                       # RNG con semilla para tests deterministas
import threading                    # Para ejecutar el cronómetro en un hilo separado
import time                         # Para medir tiempos
from typing import Optional         # Para anotar tipos opcionales (p. ej., Thread | None)

import pytest                       # Framework de testing que orquesta los hooks de sesión

from app.algebra.field import field_of_order
from app.core.config import get_settings

# =========================
# Configuración por defecto
# =========================
RUN_SLOW = os.getenv("RSDIST_FULL", "0") == "1"                          # Si True, corren las rejillas completas
TICKER_ON = os.getenv("PYTEST_TICKER", "1") == "1"                       # Si False, sin cronómetro
TEST_SEED = 20240611                                                     # Misma semilla que verify-all

# =======================
# Soporte: cronómetro
# =======================
_ticker_stop = threading.Event()                 # Evento para detener el hilo del cronómetro
_ticker_thread: Optional[threading.Thread] = None  # Referencia al hilo del cronómetro
_session_start_monotonic: float = 0.0            # Marca de tiempo (monotónica) al iniciar la suite


def _fmt_hhmmss(elapsed: float) -> str:
    """Convierte segundos (float) a cadena HH:MM:SS."""
    total = int(elapsed)
    h = total // 3600
    m = (total % 3600) // 60
    s = total % 60
    return f"{h:02d}:{m:02d}:{s:02d}"


def _ticker(terminalreporter) -> None:
    """Hilo de fondo que imprime un cronómetro en la misma línea mientras corren los tests."""
    while not _ticker_stop.is_set():
        hhmmss = _fmt_hhmmss(time.monotonic() - _session_start_monotonic)
        try:
            terminalreporter.write(f"\r⏱  Ejecutando tests… {hhmmss} ", bold=True)
        except Exception:
            print(f"\r⏱  Ejecutando tests… {hhmmss} ", end="", flush=True)
        _ticker_stop.wait(1)
    try:
        terminalreporter.write_line("")
    except Exception:
        print()


def _write(session, msg: str, **markup) -> None:
    tr = session.config.pluginmanager.get_plugin("terminalreporter")
    if tr:
        tr.write_line(msg, **markup)
    else:
        print(msg)


# ===========================
# Hooks de ciclo de ejecución
# ===========================
def pytest_configure(config):
    config.addinivalue_line("markers", "slow: rejillas completas (minutos); corren con RSDIST_FULL=1")


def pytest_sessionstart(session):
    """Cronómetro + cabecera con la configuración efectiva."""
    global _ticker_thread, _session_start_monotonic

    settings = get_settings()
    _write(session, f"🚀 Pytest iniciado | precisión={settings.precision_bits} bits | presupuesto={settings.budget:.0e}")
    if not RUN_SLOW:
        _write(session, "ℹ️  Tests `slow` omitidos (exporta RSDIST_FULL=1 para las rejillas completas).", yellow=True)

    _session_start_monotonic = time.monotonic()
    if TICKER_ON:
        tr = session.config.pluginmanager.get_plugin("terminalreporter")
        _ticker_stop.clear()
        _ticker_thread = threading.Thread(target=_ticker, args=(tr,), daemon=True)
        _ticker_thread.start()


def pytest_collection_modifyitems(config, items):
    if RUN_SLOW:
        return
    skip_slow = pytest.mark.skip(reason="rejilla completa: exporta RSDIST_FULL=1")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip_slow)


def pytest_collection_finish(session):
    _write(session, f"📋 Descubiertos {len(session.items)} tests.")


def pytest_sessionfinish(session, exitstatus):
    """Detiene el cronómetro y muestra el tiempo total."""
    _ticker_stop.set()
    if _ticker_thread:
        _ticker_thread.join(timeout=2)
    total = _fmt_hhmmss(time.monotonic() - _session_start_monotonic)
    _write(session, f"🟢 Suite finalizada. Tiempo total: {total}")


# ===============================
# Fixtures de utilidad
# ===============================
@pytest.fixture(scope="session")
def gf2():
    return field_of_order(2)


@pytest.fixture(scope="session")
def gf3():
    return field_of_order(3)


@pytest.fixture(scope="session")
def gf4():
    return field_of_order(4)


@pytest.fixture(scope="session")
def gf5():
    return field_of_order(5)


@pytest.fixture(scope="session")
def gf7():
    return field_of_order(7)


@pytest.fixture(scope="session")
def gf8():
    return field_of_order(8)


@pytest.fixture(scope="session")
def gf9():
    return field_of_order(9)


@pytest.fixture
def rng() -> random.Random:
    """RNG con semilla fija: cada test recibe la misma secuencia."""
    return random.Random(TEST_SEED)
