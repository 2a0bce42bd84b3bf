# app/counting/classes.py
# =================================================================================
# 🧬 CLASES DE COEFICIENTES LÍDERES ⟨f⟩
# ---------------------------------------------------------------------------------
# Dos mónicos son equivalentes si comparten los ℓ coeficientes que siguen al 1
# líder. La clase se representa como la serie truncada 1 + c_1 t + ... + c_ℓ t^ℓ
# (el recíproco de f), así el producto de clases es una convolución truncada
# módulo t^{ℓ+1} y los polinomios de grado < ℓ se incrustan rellenando con ceros.
# =================================================================================

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator

from app.algebra.field import FieldSpec
from app.algebra.poly import Poly
from app.core.errors import ClassMismatchError, PolyError


@dataclass(frozen=True)
class LeadClass:
    """Clase ε = (c_1, ..., c_ℓ) sobre un cuerpo dado."""

    field: FieldSpec
    coeffs: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.coeffs) < 1:
            raise ClassMismatchError("Una clase necesita ℓ >= 1 coeficientes.")
        for a in self.coeffs:
            if a not in self.field:
                raise ClassMismatchError(f"Coeficiente {a} fuera de GF({self.field.q}).")
        object.__setattr__(self, "coeffs", tuple(self.coeffs))

    @property
    def ell(self) -> int:
        return len(self.coeffs)

    @classmethod
    def identity(cls, field: FieldSpec, ell: int) -> LeadClass:
        """⟨1⟩ = (0, ..., 0)."""
        return cls(field, (0,) * ell)

    @classmethod
    def parse(cls, field: FieldSpec, text: str, ell: int | None = None) -> LeadClass:
        """'c_1,...,c_ℓ'; si se da ell y faltan coeficientes se rellena con ceros."""
        try:
            vals = [int(t) for t in (text or "").split(",") if t.strip()]
        except ValueError as e:
            raise ClassMismatchError(f"Clase mal formada: '{text}'.") from e
        if ell is not None:
            if len(vals) > ell:
                raise ClassMismatchError(f"La clase '{text}' tiene más de ℓ={ell} coeficientes.")
            vals += [0] * (ell - len(vals))
        return cls(field, tuple(vals))

    def to_str(self) -> str:
        return ",".join(str(a) for a in self.coeffs)

    def __mul__(self, other: LeadClass) -> LeadClass:
        return class_mul(self, other)


def class_of(f: Poly, ell: int) -> LeadClass:
    """⟨f⟩: c_j = [x^{deg f - j}] f, con ceros por debajo del grado 0."""
    if ell < 1:
        raise ClassMismatchError(f"ℓ={ell} debe ser >= 1.")
    if f.is_zero or not f.is_monic:
        raise PolyError(f"class_of exige un polinomio mónico (recibido {f.to_str()}).")
    d = f.degree
    return LeadClass(f.field, tuple(f.coeff(d - j) if d - j >= 0 else 0 for j in range(1, ell + 1)))


def class_mul(a: LeadClass, b: LeadClass) -> LeadClass:
    """Producto de series truncadas (1 + Σ a_i t^i)(1 + Σ b_j t^j) mod t^{ℓ+1}."""
    if a.ell != b.ell or a.field != b.field:
        raise ClassMismatchError(
            f"Clases incompatibles: ℓ={a.ell} en GF({a.field.q}) vs ℓ={b.ell} en GF({b.field.q})."
        )
    F = a.field
    sa = (1,) + a.coeffs
    sb = (1,) + b.coeffs
    out = []
    for m in range(1, a.ell + 1):
        acc = 0
        for i in range(m + 1):
            if sa[i] and sb[m - i]:
                acc = F.add(acc, F.mul(sa[i], sb[m - i]))
        out.append(acc)
    return LeadClass(F, tuple(out))


def class_inverse(a: LeadClass) -> LeadClass:
    """Inverso en el grupo de clases: serie recíproca truncada."""
    F = a.field
    s = (1,) + a.coeffs
    inv = [1]
    for m in range(1, a.ell + 1):
        acc = 0
        for i in range(1, m + 1):
            acc = F.add(acc, F.mul(s[i], inv[m - i]))
        inv.append(F.neg(acc))
    return LeadClass(F, tuple(inv[1:]))


def linear_class(field: FieldSpec, ell: int, alpha: int) -> LeadClass:
    """⟨x + α⟩ = (α, 0, ..., 0)."""
    return LeadClass(field, (alpha,) + (0,) * (ell - 1))


def root_class(field: FieldSpec, ell: int, alpha: int) -> LeadClass:
    """⟨x - α⟩: la clase del factor que se anula en α."""
    return linear_class(field, ell, field.neg(alpha))


def iter_classes(field: FieldSpec, m: int, ell: int) -> Iterator[LeadClass]:
    """Clases de M_m en orden lexicográfico (c_1 más significativo)."""
    if m < 0:
        raise ClassMismatchError(f"Grado m={m} negativo.")
    free = min(m, ell)
    for head in itertools.product(field.elements(), repeat=free):
        yield LeadClass(field, tuple(head) + (0,) * (ell - free))


def enumerate_classes(field: FieldSpec, m: int, ell: int) -> list[LeadClass]:
    """Las q^{min(m, ℓ)} clases distintas de M_m."""
    return list(iter_classes(field, m, ell))
