# app/schemas.py
# =================================================================================
# 📦 Schemas (MODELOS DE SALIDA Pydantic)
# ---------------------------------------------------------------------------------
# Este archivo define los documentos que la CLI escribe en stdout.
# - Un modelo por informe (tabla, momento, veredicto, registro de barrido...).
# - Cada modelo sabe construirse desde el resultado de dominio (from_domain).
# - Racionales como "num/den", intervalos como "[lo, hi]" (mpmath).
# - RunConfig valida las opciones comunes de cada ejecución.
# =================================================================================

from __future__ import annotations

from fractions import Fraction
from typing import Any, Optional

from pydantic import BaseModel, ConfigDict, Field, field_validator

from app.core.config import ALLOWED_PRECISIONS
from app.kernel.scalars import Scalar, fmt_scalar, interval_bounds, is_exact
from app.models import (
    ConstantsReport,
    DeepHoleScanReport,
    DistTable,
    FlaggedBound,
    LiWanReport,
    MomentReport,
    ScanRecord,
    Verdict,
    VerdictEnum,
    WordClassification,
)


def scalar_text(x: Scalar | None) -> Optional[str]:
    """Texto canónico de un escalar (None se conserva)."""
    return None if x is None else fmt_scalar(x)


def margin_text(x: Scalar) -> list[str]:
    """[lo, hi]; un exacto repite el mismo "num/den" en ambos extremos."""
    if is_exact(x):
        text = fmt_scalar(x)
        return [text, text]
    return interval_bounds(x)


# =================================================================================
# ⚙️ Configuración de ejecución
# =================================================================================
class RunConfig(BaseModel):
    """Opciones comunes de un subcomando (flags + entorno)."""

    command: str
    budget: int = Field(gt=0)
    precision: int
    workers: int = Field(default=1, ge=1)
    output: Optional[str] = None

    model_config = ConfigDict(frozen=True)

    @field_validator("precision")
    @classmethod
    def _check_precision(cls, v: int) -> int:
        if v not in ALLOWED_PRECISIONS:
            raise ValueError(f"precision debe ser uno de {ALLOWED_PRECISIONS}, recibido {v}.")
        return v


# =================================================================================
# 🔢 Cuerpo y conteos
# =================================================================================
class FieldInfoOut(BaseModel):
    p: int
    s: int
    q: int
    modulus: Optional[list[int]] = None
    generator: Optional[int] = None


class DistTableOut(BaseModel):
    """{"q", "ell", "d", "class", "counts", "source"}."""

    q: int
    ell: int
    d: int
    class_: list[int] = Field(serialization_alias="class")
    counts: list[int]
    source: str

    model_config = ConfigDict(populate_by_name=True)

    @classmethod
    def from_domain(cls, table: DistTable) -> DistTableOut:
        return cls(
            q=table.q,
            ell=table.ell,
            d=table.d,
            class_=list(table.epsilon.coeffs),
            counts=list(table.counts),
            source=table.source.value,
        )


class WjOut(BaseModel):
    q: int
    ell: int
    d: int
    j: int
    class_: list[int] = Field(serialization_alias="class")
    value: int
    main_term: str

    model_config = ConfigDict(populate_by_name=True)


class MomentOut(BaseModel):
    m: int
    value: str
    branch: str
    bruteforce: Optional[str] = None

    @classmethod
    def from_domain(cls, report: MomentReport, bruteforce: Fraction | None = None) -> MomentOut:
        return cls(m=report.m, value=scalar_text(report.value), branch=report.branch.value, bruteforce=scalar_text(bruteforce))


class DistributionOut(BaseModel):
    q: int
    k: int
    f: list[int]
    pmf: list[str]


class NfrOut(BaseModel):
    q: int
    k: int
    f: list[int]
    counts: list[int]
    formula: Optional[list[int]] = None       # N_{k+ℓ}(⟨f⟩, r), si se pidió --check.


class MomentsOut(BaseModel):
    q: int
    k: int
    f: list[int]
    moments: list[MomentOut]


class AjOut(BaseModel):
    j: int
    p: int
    u: str
    w: str
    values: dict[str, str]                    # método → valor.


class WordOut(BaseModel):
    word: list[int]
    poly: list[int]
    deg: int
    dist: int
    codeword: bool
    deep_hole: bool
    ordinary: bool

    @classmethod
    def from_domain(cls, w: WordClassification) -> WordOut:
        return cls(
            word=list(w.word),
            poly=list(w.coeffs),
            deg=w.degree,
            dist=w.distance,
            codeword=w.is_codeword,
            deep_hole=w.is_deep_hole,
            ordinary=w.is_ordinary,
        )


# =================================================================================
# 🔭 Barrido de agujeros profundos
# =================================================================================
class ScanRecordOut(BaseModel):
    """Una línea JSONL: {"f", "deg", "dist", "deep_hole", "ordinary"}."""

    f: list[int]
    deg: int
    dist: int
    deep_hole: bool
    ordinary: bool

    @classmethod
    def from_domain(cls, rec: ScanRecord) -> ScanRecordOut:
        return cls(f=list(rec.coeffs), deg=rec.degree, dist=rec.distance, deep_hole=rec.deep_hole, ordinary=rec.ordinary)


class ScanSummaryOut(BaseModel):
    q: int
    k: int
    ell: int
    words_scanned: int
    degree_k_all_deep: bool
    deep_holes_above_k: list[list[int]]
    bound_violations: list[list[int]]
    ordinary_by_degree: dict[int, int]
    scanned_by_degree: dict[int, int]
    count_mismatches: list[list[int]]

    @classmethod
    def from_domain(cls, r: DeepHoleScanReport) -> ScanSummaryOut:
        return cls(
            q=r.q,
            k=r.k,
            ell=r.ell,
            words_scanned=r.words_scanned,
            degree_k_all_deep=r.degree_k_all_deep,
            deep_holes_above_k=[list(c) for c in r.deep_holes_above_k],
            bound_violations=[list(c) for c in r.bound_violations],
            ordinary_by_degree=dict(r.ordinary_by_degree),
            scanned_by_degree=dict(r.scanned_by_degree),
            count_mismatches=[list(c) for c in r.count_mismatches],
        )


# =================================================================================
# ⚖️ Veredictos y cotas
# =================================================================================
class VerdictOut(BaseModel):
    """{"condition", "params", "verdict", "margin": [lo, hi], "precision_bits"}."""

    condition: str
    params: dict[str, Any]
    verdict: VerdictEnum
    margin: list[str]
    precision_bits: int

    @classmethod
    def from_domain(cls, v: Verdict) -> VerdictOut:
        return cls(
            condition=v.condition,
            params=v.params,
            verdict=v.verdict,
            margin=margin_text(v.margin),
            precision_bits=v.precision_bits,
        )


class BoundOut(BaseModel):
    bound: str
    params: dict[str, Any]
    value: Optional[str]
    window_ok: Optional[bool] = None
    note: Optional[str] = None

    @classmethod
    def from_flagged(cls, bound: str, params: dict, fb: FlaggedBound) -> BoundOut:
        return cls(bound=bound, params=params, value=scalar_text(fb.value), window_ok=fb.window_ok, note=fb.note or None)


class SaddleOut(BaseModel):
    y: str
    value: str


class LemmaOut(BaseModel):
    """Cadena ln A_j <= general <= large (y la silla exacta si p = 2)."""

    q: int
    ell: int
    j: int
    ln_aj: Optional[str]
    general: str
    large: BoundOut
    saddle_p2: Optional[SaddleOut] = None
    checks: list[VerdictOut]


class LiWanOut(BaseModel):
    q: int
    ell: int
    j: int
    ln_liwan: str
    ln_aj: Optional[str]
    difference: Optional[str]
    identity: Optional[str] = None

    @classmethod
    def from_domain(cls, r: LiWanReport) -> LiWanOut:
        return cls(
            q=r.q,
            ell=r.ell,
            j=r.j,
            ln_liwan=scalar_text(r.ln_liwan),
            ln_aj=scalar_text(r.ln_aj),
            difference=scalar_text(r.difference),
            identity=scalar_text(r.identity),
        )


class ConstantsOut(BaseModel):
    c: Optional[str]
    p: Optional[int]
    p0: Optional[str]
    prime: Optional[int]
    q0: Optional[int]
    gamma0: Optional[str]
    checks: list[VerdictOut]
    coverage: list[dict[str, Any]] = Field(default_factory=list)

    @classmethod
    def from_domain(cls, r: ConstantsReport) -> ConstantsOut:
        return cls(
            c=scalar_text(r.c),
            p=r.p,
            p0=scalar_text(r.p0),
            prime=r.prime,
            q0=r.q0,
            gamma0=scalar_text(r.gamma0),
            checks=[VerdictOut.from_domain(v) for v in r.checks],
            coverage=list(r.coverage),
        )


# =================================================================================
# ✅ Verificación global
# =================================================================================
class CheckOut(BaseModel):
    """Una comprobación de verify-all con su estado de tres valores."""

    check: str
    status: VerdictEnum
    detail: dict[str, Any] = Field(default_factory=dict)


class VerifySummaryOut(BaseModel):
    mode: str
    precision_bits: int
    totals: dict[str, int]
    notes: list[str] = Field(default_factory=list)
