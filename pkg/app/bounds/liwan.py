# app/bounds/liwan.py
# Comparación entre el factor binomial C(q/p + q₁ + j - 1, j) y A_j(q, q₁/q).
from __future__ import annotations

from fractions import Fraction

from mpmath import iv

from app.core.errors import PreconditionError
from app.kernel.aj import characteristic, ln_aj_at_q, q1_gamma
from app.kernel.binom import ln_gen_binom
from app.kernel.scalars import Interval, Scalar, is_exact, ln, to_interval
from app.models import LiWanReport


def _liwan_top(q: int, p: int, q1: Scalar, j: int) -> Scalar:
    """q/p + q₁ + j - 1."""
    if is_exact(q1):
        return Fraction(q, p) + Fraction(q1) + j - 1
    return to_interval(Fraction(q, p)) + q1 + (j - 1)


def liwan_compare(q: int, ell: int, j: int) -> LiWanReport:
    """ln C(q/p+q₁+j-1, j), ln A_j, su diferencia y, si p = q y j < p, la identidad ln((q₁+j)/q₁)."""
    if j < 0:
        raise PreconditionError(f"j={j} debe ser >= 0.")
    p = characteristic(q)
    q1, _ = q1_gamma(q, ell)
    ln_binom = ln_gen_binom(_liwan_top(q, p, q1, j), j)
    ln_aj = ln_aj_at_q(q, ell, j)
    difference = None if ln_aj is None else ln_binom - ln_aj
    identity = None
    q1_zero = is_exact(q1) and Fraction(q1) == 0
    if p == q and j < p and not q1_zero:
        ratio = (Fraction(q1) + j) / Fraction(q1) if is_exact(q1) else (to_interval(q1) + j) / to_interval(q1)
        identity = ln(ratio)
    return LiWanReport(q=q, ell=ell, j=j, ln_liwan=ln_binom, ln_aj=ln_aj, difference=difference, identity=identity)


def liwan_lower_bound(q: int, ell: int, j: int) -> Interval:
    """Cota inferior explícita de ln C(q/p+q₁+j-1, j) (válida con q >= p²), c = j/q.

    cq ln(((c+1/p)q+q₁-1)/(cq)) + (q/p+q₁-1) ln(((c+1/p)q+q₁-1)/(q/p+q₁-1)) - ½ ln(2πcq/(1+cp)) - 1/6
    """
    p = characteristic(q)
    if q < p * p:
        raise PreconditionError(f"La cota requiere q >= p² (q={q}, p={p}).")
    if j < 1:
        raise PreconditionError(f"j={j} debe ser >= 1.")
    q1, _ = q1_gamma(q, ell)
    rest = to_interval(Fraction(q, p)) + to_interval(q1) - 1      # q/p + q₁ - 1
    top = rest + j                                                # (c + 1/p) q + q₁ - 1
    c = Fraction(j, q)
    return (
        j * iv.ln(top / j)
        + rest * iv.ln(top / rest)
        - iv.ln(2 * iv.pi * to_interval(c * q) / to_interval(1 + c * p)) / 2
        - to_interval(Fraction(1, 6))
    )

