# scripts/plot_figure.py
# Dibuja el encierro certificado de f(p, c) por primo y guarda un PNG (y opcionalmente el CSV).

from __future__ import annotations

import argparse
import sys
from fractions import Fraction
from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402
import pandas as pd  # noqa: E402
from loguru import logger  # noqa: E402

# ==============================================================================
# ✅ Bootstrap de imports: asegura que 'app' sea importable desde /scripts
# ------------------------------------------------------------------------------
PROJECT_ROOT = Path(__file__).resolve().parents[1]
if str(PROJECT_ROOT) not in sys.path:
    sys.path.insert(0, str(PROJECT_ROOT))

try:
    from app.bounds.figure import FIGURE_PRIMES, figure_scan, write_figure_csv
    from app.commands.options import int_list, rational
except Exception as e:
    raise ImportError(
        "No pude importar 'app.bounds.figure'. "
        "Ejecuta el comando desde la raíz del proyecto."
    ) from e
# ==============================================================================


def plot(table: pd.DataFrame, brackets: pd.DataFrame, out: Path) -> None:
    fig, ax = plt.subplots(figsize=(8, 5))
    for p, rows in table.groupby("p"):
        lo = rows["f_lo"].astype(float)
        hi = rows["f_hi"].astype(float)
        ax.fill_between(rows["c"], lo, hi, alpha=0.35)
        ax.plot(rows["c"], (lo + hi) / 2, label=f"p = {p}", linewidth=1)
    for _, b in brackets.iterrows():
        ax.axvspan(b["c_left"], b["c_right"], color="grey", alpha=0.3)
    ax.axhline(0, color="black", linewidth=0.8)
    ax.set_xlabel("c")
    ax.set_ylabel("f(p, c)")
    ax.set_ylim(-1, 1)
    ax.legend()
    fig.tight_layout()
    fig.savefig(out, dpi=150)
    plt.close(fig)


def main(argv: list[str] | None = None) -> int:
    parser = argparse.ArgumentParser(description="Figura del signo de f(p, c)")
    parser.add_argument("--primes", type=int_list, default=list(FIGURE_PRIMES))
    parser.add_argument("--step", type=rational, default=Fraction(1, 200))
    parser.add_argument("--precision", type=int, default=None)
    parser.add_argument("--out", type=Path, default=Path("figure.png"))
    parser.add_argument("--csv", type=Path, default=None, help="Guarda también la rejilla en CSV")
    args = parser.parse_args(argv)

    scan = figure_scan(args.primes, args.step, args.precision)
    if args.csv is not None:
        write_figure_csv(scan, args.csv)
    plot(scan.table, scan.brackets, args.out)
    logger.info("[FIGURE] png={} | puntos={} | brackets={}", args.out, len(scan.table), len(scan.brackets))
    for _, b in scan.brackets.iterrows():
        print(f"p={int(b['p'])}: raíz en ({b['c_left']}, {b['c_right']})")
    return 0


if __name__ == "__main__":
    sys.exit(main())
