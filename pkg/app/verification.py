# app/verification.py
# =================================================================================
# ✅ VERIFY-ALL: la batería completa de comprobaciones del laboratorio
# ---------------------------------------------------------------------------------
# Cada comprobación produce un CheckOut (holds / fails / unknown) con su detalle.
# Dos planes:
#   - desk: tamaños de escritorio, corre por defecto (segundos).
#   - full: las rejillas completas (minutos).
# Todo es determinista: los subconjuntos D y los f aleatorios salen de un
# random.Random con semilla fija y no se imprimen tiempos.
# =================================================================================

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from fractions import Fraction
from math import isqrt
from typing import Callable, Iterable, Iterator

from loguru import logger
from mpmath import mp

from app.algebra.field import field_of_order
from app.algebra.poly import EvalSet, Poly
from app.bounds.errors import ndr_error_bound, wj_error_bound, wj_main_term
from app.bounds.figure import FIGURE_PRIMES, figure_scan
from app.bounds.lemma import lemma_chain
from app.bounds.liwan import liwan_compare, liwan_lower_bound
from app.bounds.region import (
    HALF,
    RegionParams,
    corollary_margins,
    curvature_signs,
    f_fn,
    fg_second_derivative,
    g_fn,
    margin_status,
    second_difference,
    thm7_check,
    thm23_constants,
)
from app.core.budget import resolve_budget
from app.core.errors import RsDistError
from app.counting.classes import LeadClass
from app.counting.formula import dist_table, main_term, moments_formula, wj_distribution
from app.kernel.aj import AjParams, aj_binsum, aj_permutation, aj_series, characteristic, relative_gap
from app.kernel.scalars import (
    Scalar,
    certify,
    default_precision,
    fmt_scalar,
    is_exact,
    lower,
    overlaps,
    sign_of,
    to_interval,
    upper,
    working_precision,
)
from app.lab.distance import bruteforce_all_tables, moments_bruteforce
from app.lab.scan import scan_deep_holes
from app.models import Verdict, VerdictEnum
from app.schemas import CheckOut, VerifySummaryOut, margin_text

SEED = 20240611                                         # Semilla de los subconjuntos D y de los f aleatorios.
AJ_NUMERIC_BITS = 256                                   # Precisión para comparar serie y suma binomial.
AJ_RELATIVE_TOL = mp.mpf("1e-20")
SECOND_DIFF_TOL = mp.mpf(1) / 100                        # |segunda diferencia - derivada cerrada| con h = 1/1000.


# ---------------------------------------------------------------------------------
# 📋 Planes
# ---------------------------------------------------------------------------------
@dataclass(frozen=True)
class VerifyPlan:
    mode: str
    count_qs: tuple[int, ...]
    count_ells: tuple[int, ...]
    count_max_d: int
    proper_subsets: int
    moment_qs: tuple[int, ...]
    moment_max_k: int
    moment_max_ell: int
    moment_samples: int
    aj_exact_max_j: int
    aj_numeric_max_j: int
    lemma_qs: tuple[int, ...]
    lemma_cs: tuple[Fraction, ...]
    scan_cases: tuple[tuple[int, int, int], ...]
    figure_step: Fraction
    thm3_cs: tuple[Fraction, ...]
    thm3_primes: tuple[int, ...]
    curvature_points: int

    @classmethod
    def desk(cls) -> VerifyPlan:
        return cls(
            mode="desk",
            count_qs=(2, 3, 4, 5),
            count_ells=(1, 2),
            count_max_d=4,
            proper_subsets=2,
            moment_qs=(3, 5),
            moment_max_k=2,
            moment_max_ell=2,
            moment_samples=3,
            aj_exact_max_j=6,
            aj_numeric_max_j=40,
            lemma_qs=(64, 81),
            lemma_cs=(Fraction(1, 4), HALF, Fraction(3, 4)),
            scan_cases=((5, 2, 1),),
            figure_step=Fraction(1, 100),
            thm3_cs=(HALF,),
            thm3_primes=(3,),
            curvature_points=5,
        )

    @classmethod
    def full(cls) -> VerifyPlan:
        return cls(
            mode="full",
            count_qs=(2, 3, 4, 5, 7, 8, 9),
            count_ells=(1, 2, 3),
            count_max_d=6,
            proper_subsets=10,
            moment_qs=(3, 5, 7),
            moment_max_k=3,
            moment_max_ell=3,
            moment_samples=20,
            aj_exact_max_j=8,
            aj_numeric_max_j=200,
            lemma_qs=(64, 81, 121, 256, 1024),
            lemma_cs=tuple(Fraction(i, 10) for i in range(1, 10)),
            scan_cases=tuple((q, k, ell) for q, k in ((5, 2), (7, 2), (7, 3), (8, 2), (9, 2)) for ell in (1, 2)),
            figure_step=Fraction(1, 1000),
            thm3_cs=(HALF, Fraction(9, 10)),
            thm3_primes=(3, 5, 7),
            curvature_points=11,
        )


# ---------------------------------------------------------------------------------
# 🧰 Utilidades
# ---------------------------------------------------------------------------------
def fold_status(statuses: Iterable[VerdictEnum]) -> VerdictEnum:
    """fails domina a unknown, y unknown a holds."""
    statuses = list(statuses)
    if VerdictEnum.fails in statuses:
        return VerdictEnum.fails
    if VerdictEnum.unknown in statuses:
        return VerdictEnum.unknown
    return VerdictEnum.holds


def _exact_status(ok: bool) -> VerdictEnum:
    return VerdictEnum.holds if ok else VerdictEnum.fails


def _minus(bound: Scalar, value: Fraction) -> Scalar:
    if is_exact(bound):
        return Fraction(bound) - value
    return to_interval(bound) - to_interval(value)


def _proper_subsets(q: int, count: int, rng: random.Random) -> list[tuple[int, ...]]:
    out = []
    for _ in range(count):
        size = rng.randint(1, q - 1)
        out.append(tuple(sorted(rng.sample(range(q), size))))
    return out


def _random_monic(F, degree: int, rng: random.Random) -> Poly:
    return Poly(F, tuple(rng.randrange(F.q) for _ in range(degree)) + (1,))


def _linspace(lo: Fraction, hi: Fraction, points: int) -> list[Fraction]:
    step = (hi - lo) / (points - 1)
    return [lo + i * step for i in range(points)]


# ---------------------------------------------------------------------------------
# 1️⃣ Márgenes de los corolarios
# ---------------------------------------------------------------------------------
def check_margins(plan: VerifyPlan, precision: int, budget: int) -> Iterator[CheckOut]:
    for row, verdict in corollary_margins(precision):
        yield CheckOut(
            check=f"margin-{row.case}",
            status=margin_status(row, verdict),
            detail={
                "expected": row.expected.value,
                "verdict": verdict.verdict.value,
                "margin": margin_text(verdict.margin),
                "precision_bits": verdict.precision_bits,
            },
        )


# ---------------------------------------------------------------------------------
# 2️⃣ N_d(ε, r): fórmula frente a enumeración
# ---------------------------------------------------------------------------------
def check_count_oracle(plan: VerifyPlan, precision: int, budget: int) -> Iterator[CheckOut]:
    rng = random.Random(SEED)
    for q in plan.count_qs:
        F = field_of_order(q)
        sets = [EvalSet.full(F)] + [EvalSet(F, s) for s in _proper_subsets(q, plan.proper_subsets, rng)]
        for D, ell in itertools.product(sets, plan.count_ells):
            for d in range(ell, plan.count_max_d + 1):
                brute = bruteforce_all_tables(F, ell, d, D, budget)
                mismatches = []
                for coeffs, counts in brute.items():
                    try:
                        formula = dist_table(LeadClass(F, coeffs), d, D, budget).counts
                    except RsDistError as e:
                        logger.error("[VERIFY] count q={} ℓ={} d={} ε={}: {}", q, ell, d, coeffs, e)
                        formula = None
                    if formula != counts:
                        mismatches.append(list(coeffs))
                yield CheckOut(
                    check="count-oracle",
                    status=_exact_status(not mismatches),
                    detail={
                        "q": q,
                        "ell": ell,
                        "d": d,
                        "D": "full" if D.is_full else list(D.elements),
                        "classes": len(brute),
                        "mismatches": mismatches,
                    },
                )


# ---------------------------------------------------------------------------------
# 3️⃣ Momentos factoriales
# ---------------------------------------------------------------------------------
def check_moments(plan: VerifyPlan, precision: int, budget: int) -> Iterator[CheckOut]:
    rng = random.Random(SEED + 1)
    for q in plan.moment_qs:
        F = field_of_order(q)
        D = EvalSet.full(F)
        for k in range(1, plan.moment_max_k + 1):
            for ell in range(1, plan.moment_max_ell + 1):
                mismatches = []
                for _ in range(plan.moment_samples):
                    f = _random_monic(F, k + ell, rng)
                    for m in range(1, k + ell + 3):
                        if moments_formula(f, k, D, m, budget).value != moments_bruteforce(f, k, D, m, budget):
                            mismatches.append({"f": list(f.coeffs), "m": m})
                yield CheckOut(
                    check="moments-oracle",
                    status=_exact_status(not mismatches),
                    detail={"q": q, "k": k, "ell": ell, "samples": plan.moment_samples, "mismatches": mismatches},
                )


# ---------------------------------------------------------------------------------
# 4️⃣ Cotas de error de W_j y N_{k+ℓ}(ε, r)
# ---------------------------------------------------------------------------------
def _max_deviation(values: Iterable[int], main: Fraction) -> Fraction:
    return max(abs(Fraction(v) - main) for v in values)


def check_error_bounds(plan: VerifyPlan, precision: int, budget: int) -> Iterator[CheckOut]:
    thm5_violations = thm6_violations = 0
    for q in plan.count_qs:
        F = field_of_order(q)
        D = EvalSet.full(F)
        for ell in plan.count_ells:
            heads = list(itertools.product(F.elements(), repeat=ell))
            for d in range(ell + 1, plan.count_max_d + 1):
                k = d - ell
                params = {"q": q, "k": k, "ell": ell}

                verdicts: list[Verdict] = []
                for j in range(k + 1, k + ell + 1):
                    dist = wj_distribution(F, ell, d, j, D, budget)
                    dev = _max_deviation((dist.get(h, 0) for h in heads), wj_main_term(q, k, j))
                    verdicts.append(certify(
                        "wj-error-bound",
                        lambda _b, j=j, dev=dev: _minus(wj_error_bound(q, k, ell, j), dev),
                        {**params, "j": j},
                        precision,
                    ))
                yield CheckOut(
                    check="wj-error-bound",
                    status=fold_status(v.verdict for v in verdicts),
                    detail={**params, "margins": [margin_text(v.margin) for v in verdicts]},
                )

                tables = bruteforce_all_tables(F, ell, d, D, budget)
                verdicts = []
                for r in range(d + 1):
                    counts = [t[r] for t in tables.values()]
                    dev6 = _max_deviation(counts, main_term(q, q, d, ell, r, limit="thm6"))
                    dev5 = _max_deviation(counts, main_term(q, q, d, ell, r, limit="thm5"))
                    with working_precision(precision):
                        if sign_of(_minus(ndr_error_bound(q, k, ell, r), dev5)) == -1:
                            thm5_violations += 1
                    verdicts.append(certify(
                        "ndr-error-bound",
                        lambda _b, r=r, dev=dev6: _minus(ndr_error_bound(q, k, ell, r), dev),
                        {**params, "r": r},
                        precision,
                    ))
                thm6_violations += sum(v.fails for v in verdicts)
                yield CheckOut(
                    check="ndr-error-bound",
                    status=fold_status(v.verdict for v in verdicts),
                    detail={**params, "sum_limit": "k+ℓ-r", "margins": [margin_text(v.margin) for v in verdicts]},
                )

    # Límite de suma k-r en el término principal: se cuenta, no se exige.
    yield CheckOut(
        check="ndr-sum-limit",
        status=VerdictEnum.holds,
        detail={"limit_k_plus_ell_minus_r_violations": thm6_violations, "limit_k_minus_r_violations": thm5_violations},
    )


# ---------------------------------------------------------------------------------
# 5️⃣ A_j: tres evaluadores
# ---------------------------------------------------------------------------------
AJ_PRIMES = (2, 3, 5, 7)
AJ_US = (Fraction(1), Fraction(2), Fraction(5, 2), Fraction(7))
AJ_WS = (Fraction(0), Fraction(1, 3), HALF, Fraction(1))
AJ_INTERVAL_CASES = ((7, 2), (8, 2), (32, 3))          # (q, ℓ) con γ = (ℓ-1)/√q irracional.


def check_aj(plan: VerifyPlan, precision: int, budget: int) -> Iterator[CheckOut]:
    mismatches, negatives = [], []
    for j, p, u, w in itertools.product(range(plan.aj_exact_max_j + 1), AJ_PRIMES, AJ_US, AJ_WS):
        params = AjParams(j=j, p=p, u=u, w=w)
        values = (aj_permutation(params), aj_series(params, budget), aj_binsum(params, budget))
        if len(set(values)) != 1:
            mismatches.append({"j": j, "p": p, "u": str(u), "w": str(w)})
        if values[2] < 0:
            negatives.append({"j": j, "p": p, "u": str(u), "w": str(w)})
    yield CheckOut(
        check="aj-exact-agreement",
        status=_exact_status(not mismatches and not negatives),
        detail={"max_j": plan.aj_exact_max_j, "mismatches": mismatches, "negatives": negatives},
    )

    disagreements = []
    with working_precision(AJ_NUMERIC_BITS):
        for q, ell in AJ_INTERVAL_CASES:
            for j in range(plan.aj_numeric_max_j + 1):
                params = AjParams.from_q_ell(j, q, ell)
                series, binsum = aj_series(params, budget), aj_binsum(params, budget)
                if not overlaps(series, binsum) or relative_gap(series, binsum) >= AJ_RELATIVE_TOL:
                    disagreements.append({"q": q, "ell": ell, "j": j})
    yield CheckOut(
        check="aj-interval-agreement",
        status=_exact_status(not disagreements),
        detail={"max_j": plan.aj_numeric_max_j, "precision_bits": AJ_NUMERIC_BITS, "disagreements": disagreements},
    )

    bad = [j for j in range(plan.aj_numeric_max_j + 1) if aj_binsum(AjParams(j=j, p=2, u=1, w=1), budget) != 1]
    yield CheckOut(check="aj-normalization", status=_exact_status(not bad), detail={"max_j": plan.aj_numeric_max_j, "bad_j": bad})


# ---------------------------------------------------------------------------------
# 6️⃣ Cadena de cotas de punto de silla y comparación con el factor binomial
# ---------------------------------------------------------------------------------
LIWAN_BOUND_ELLS = (1, 2)
IDENTITY_CASES = ((5, 2), (7, 2))                       # p = q: ln((q₁+j)/q₁) para 1 <= j < p.


def _lemma_ells(q: int) -> tuple[int, ...]:
    """ℓ = 1, 2 y ⌊√q⌋+1 (γ = 1)."""
    return (1, 2, isqrt(q) + 1)


def _lemma_js(q: int, cs: Iterable[Fraction]) -> list[int]:
    return sorted({max(1, int(c * q)) for c in cs})


def check_lemma(plan: VerifyPlan, precision: int, budget: int) -> Iterator[CheckOut]:
    for q in plan.lemma_qs:
        verdicts = [v for ell in _lemma_ells(q) for j in _lemma_js(q, plan.lemma_cs) for v in lemma_chain(q, ell, j, precision)]
        failing = [{**v.params, "condition": v.condition} for v in verdicts if not v.holds]
        yield CheckOut(
            check="lemma-chain",
            status=fold_status(v.verdict for v in verdicts),
            detail={"q": q, "verdicts": len(verdicts), "not_holding": failing},
        )


def check_liwan(plan: VerifyPlan, precision: int, budget: int) -> Iterator[CheckOut]:
    for q in plan.lemma_qs:
        verdicts = []
        for ell in _lemma_ells(q):
            for j in _lemma_js(q, plan.lemma_cs):
                params = {"q": q, "ell": ell, "j": j}
                with working_precision(precision):
                    if liwan_compare(q, ell, j).difference is None:
                        continue                        # A_j = 0: diferencia infinita.
                verdicts.append(certify("liwan-difference", lambda _b, ell=ell, j=j: liwan_compare(q, ell, j).difference, params, precision, strict=True))
                if ell in LIWAN_BOUND_ELLS:
                    verdicts.append(certify(
                        "liwan-lower-bound",
                        lambda _b, ell=ell, j=j: liwan_compare(q, ell, j).ln_liwan - liwan_lower_bound(q, ell, j),
                        params,
                        precision,
                    ))
        failing = [{**v.params, "condition": v.condition} for v in verdicts if not v.holds]
        yield CheckOut(
            check="liwan-compare",
            status=fold_status(v.verdict for v in verdicts),
            detail={"q": q, "verdicts": len(verdicts), "not_holding": failing},
        )

    misses = []
    with working_precision(precision):
        for q, ell in IDENTITY_CASES:
            for j in range(1, characteristic(q)):
                report = liwan_compare(q, ell, j)
                if report.identity is None or not overlaps(report.difference, report.identity):
                    misses.append({"q": q, "ell": ell, "j": j})
    yield CheckOut(check="liwan-identity", status=_exact_status(not misses), detail={"misses": misses})


# ---------------------------------------------------------------------------------
# 7️⃣ Agujeros profundos
# ---------------------------------------------------------------------------------
def check_scans(plan: VerifyPlan, precision: int, budget: int) -> Iterator[CheckOut]:
    for q, k, ell in plan.scan_cases:
        report = scan_deep_holes(q, k, ell, budget=budget, cross_check=plan.mode == "desk")
        clean = report.degree_k_all_deep and not report.bound_violations and not report.count_mismatches
        yield CheckOut(
            check="scan-deepholes",
            status=_exact_status(clean),
            detail={
                "q": q,
                "k": k,
                "ell": ell,
                "words": report.words_scanned,
                "degree_k_all_deep": report.degree_k_all_deep,
                "bound_violations": len(report.bound_violations),
                "count_mismatches": len(report.count_mismatches),
                "deep_holes_above_k": [list(c) for c in report.deep_holes_above_k],
            },
        )


# ---------------------------------------------------------------------------------
# 8️⃣ Figura, curvatura y constantes de región
# ---------------------------------------------------------------------------------
CONCAVITY_RANGES = ((2, 32, 4), (3, 27, 2), (5, 25, 2), (7, 7, 2))  # (p, q, L): c ∈ [L/q, 1/2].
F_CURVATURE_PRIMES = (2, 3, 5, 7)


def check_figure(plan: VerifyPlan, precision: int, budget: int) -> Iterator[CheckOut]:
    scan = figure_scan(FIGURE_PRIMES, plan.figure_step, precision)
    found = set(scan.brackets["p"])
    yield CheckOut(
        check="figure-brackets",
        status=_exact_status(all(p in found for p in FIGURE_PRIMES)),
        detail={"step": str(plan.figure_step), "brackets": scan.brackets.to_dict(orient="records")},
    )

    verdicts = [
        certify("f-half-increasing", lambda _b, a=a, b=b: f_fn(b, HALF) - f_fn(a, HALF), {"p": a, "next": b}, precision, strict=True)
        for a, b in zip(FIGURE_PRIMES, FIGURE_PRIMES[1:])
    ]
    yield CheckOut(
        check="f-half-increasing",
        status=fold_status(v.verdict for v in verdicts),
        detail={"margins": [margin_text(v.margin) for v in verdicts]},
    )


def _f_minus_g(p: int, q: int) -> Callable[[Fraction], Scalar]:
    def fn(c: Fraction) -> Scalar:
        return f_fn(p, c) - g_fn(q, c)

    return fn


def check_curvature(plan: VerifyPlan, precision: int, budget: int) -> Iterator[CheckOut]:
    grid = _linspace(Fraction(1, 10), Fraction(9, 10), plan.curvature_points)
    with working_precision(precision):
        for p in F_CURVATURE_PRIMES:
            signs = curvature_signs(lambda c, p=p: f_fn(p, c), grid)
            yield CheckOut(check="f-concave", status=_exact_status(all(s == -1 for s in signs)), detail={"p": p, "signs": signs})

        for p, q, low in CONCAVITY_RANGES:
            points = _linspace(Fraction(low, q), HALF, plan.curvature_points)
            fg = _f_minus_g(p, q)
            signs = curvature_signs(fg, points)
            off = []
            for c in points:
                gap = second_difference(fg, c) - to_interval(fg_second_derivative(p, q, c))
                if not (-SECOND_DIFF_TOL < lower(gap) and upper(gap) < SECOND_DIFF_TOL):
                    off.append(str(c))
            printed_gap = [fmt_scalar(to_interval(fg_second_derivative(p, q, c) - fg_second_derivative(p, q, c, printed=True)), 8) for c in points]
            yield CheckOut(
                check="fg-concave",
                status=_exact_status(all(s == -1 for s in signs) and not off),
                detail={"p": p, "q": q, "signs": signs, "closed_form_off": off, "exact_minus_printed": printed_gap},
            )


def check_region(plan: VerifyPlan, precision: int, budget: int) -> Iterator[CheckOut]:
    reports = [thm23_constants(c=c, precision=precision) for c in plan.thm3_cs]
    reports += [thm23_constants(p=p, precision=precision) for p in plan.thm3_primes]
    for report in reports:
        yield CheckOut(
            check="thm23-constants",
            status=fold_status(v.verdict for v in report.checks),
            detail={
                "c": None if report.c is None else str(report.c),
                "p": report.p,
                "prime": report.prime,
                "q0": report.q0,
                "gamma0": fmt_scalar(report.gamma0),
                "coverage": list(report.coverage),
            },
        )

    # Ejemplo positivo (c = 1/2) y negativo (c = 29/32, f(2, c) < 0).
    positive = thm7_check(RegionParams(p=2, q=32, k=15, ell=1, branch="b"), precision)
    negative = thm7_check(RegionParams(p=2, q=32, k=28, ell=1, branch="b"), precision)
    if positive.holds and negative.fails:
        status = VerdictEnum.holds
    elif VerdictEnum.unknown in (positive.verdict, negative.verdict):
        status = VerdictEnum.unknown
    else:
        status = VerdictEnum.fails
    yield CheckOut(
        check="thm7-examples",
        status=status,
        detail={"c_half": positive.verdict.value, "c_29_32": negative.verdict.value},
    )


# ---------------------------------------------------------------------------------
# 🚀 Orquestación
# ---------------------------------------------------------------------------------
CHECKS: tuple[Callable[[VerifyPlan, int, int], Iterator[CheckOut]], ...] = (
    check_margins,
    check_count_oracle,
    check_moments,
    check_error_bounds,
    check_aj,
    check_lemma,
    check_liwan,
    check_scans,
    check_figure,
    check_curvature,
    check_region,
)

NOTES = (
    "margin-2a-bottom: f(2, 3/256) - g(256, 1/2) queda por debajo de 0.0069 (margen negativo); se espera fails.",
    "margin-2c-top-range: el margen 0.0011 corresponde a c = 0.9, el extremo superior del rango de 2c.",
    "ndr-error-bound: el término principal usa el límite de suma k+ℓ-r; las desviaciones con k-r se cuentan en ndr-sum-limit.",
    "fg-concave: la forma cerrada impresa de la segunda derivada difiere en 1/(c-1) + 1/(p(1+c)) de la exacta.",
)


def run_verification(
    plan: VerifyPlan,
    precision: int | None = None,
    budget: int | None = None,
    on_check: Callable[[CheckOut], None] | None = None,
) -> tuple[list[CheckOut], VerifySummaryOut]:
    """Ejecuta el plan en orden fijo; on_check recibe cada resultado en cuanto sale."""
    bits = precision or default_precision()
    limit = resolve_budget(budget)
    results: list[CheckOut] = []
    for check in CHECKS:
        logger.info("[VERIFY] {} ({})", check.__name__, plan.mode)
        for result in check(plan, bits, limit):
            if result.status is not VerdictEnum.holds:
                logger.warning("[VERIFY] {} -> {} | {}", result.check, result.status.value, result.detail)
            results.append(result)
            if on_check is not None:
                on_check(result)

    totals = {v.value: 0 for v in VerdictEnum}
    for r in results:
        totals[r.status.value] += 1
    summary = VerifySummaryOut(mode=plan.mode, precision_bits=bits, totals=totals, notes=list(NOTES))
    logger.info("[VERIFY] fin {} | {}", plan.mode, totals)
    return results, summary
