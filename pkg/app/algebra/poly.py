# app/algebra/poly.py
# =================================================================================
# 📐 POLINOMIOS DENSOS SOBRE F_q Y CONJUNTOS DE EVALUACIÓN
# ---------------------------------------------------------------------------------
# - Poly: coeficientes de grado bajo a alto, sin ceros finales; el polinomio
#   cero tiene grado ZERO_DEGREE (< 0), así "deg(u) <= k-1 ⇔ palabra código".
# - EvalSet: subconjunto D ⊆ F_q ordenado y sin repetidos.
# - Evaluación Horner, conteo de raíces en D, interpolación de Lagrange y
#   evaluación vectorizada (numpy) de muchos polinomios a la vez.
# =================================================================================

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

import numpy as np

from app.algebra.field import FieldSpec
from app.core.errors import PolyError

ZERO_DEGREE = -1  # Grado del polinomio cero: por debajo de 0.


@dataclass(frozen=True)
class Poly:
    """Polinomio sobre un FieldSpec; coeffs[i] es el coeficiente de x^i."""

    field: FieldSpec
    coeffs: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        c = list(self.coeffs)
        for a in c:
            if a not in self.field:
                raise PolyError(f"Coeficiente {a} fuera de GF({self.field.q}).")
        while c and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "coeffs", tuple(c))

    # --- Constructores ---
    @classmethod
    def constant(cls, field: FieldSpec, a: int) -> Poly:
        return cls(field, (a,))

    @classmethod
    def x(cls, field: FieldSpec) -> Poly:
        return cls(field, (0, 1))

    @classmethod
    def monomial(cls, field: FieldSpec, d: int, a: int = 1) -> Poly:
        return cls(field, (0,) * d + (a,))

    @classmethod
    def from_roots(cls, field: FieldSpec, roots: Iterable[int]) -> Poly:
        """∏ (x - α) sobre las raíces dadas."""
        out = cls.constant(field, 1)
        for a in roots:
            out = out * cls(field, (field.neg(a), 1))
        return out

    @classmethod
    def parse(cls, field: FieldSpec, text: str) -> Poly:
        """Lee 'c0,c1,...' (grado bajo primero)."""
        parts = [t.strip() for t in (text or "").split(",") if t.strip()]
        try:
            return cls(field, tuple(int(t) for t in parts))
        except ValueError as e:
            raise PolyError(f"Polinomio mal formado: '{text}'.") from e

    # --- Propiedades ---
    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1 if self.coeffs else ZERO_DEGREE

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def leading(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    @property
    def is_monic(self) -> bool:
        return self.leading == 1

    def coeff(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def to_str(self) -> str:
        return ",".join(str(a) for a in self.coeffs) if self.coeffs else "0"

    # --- Aritmética ---
    def _check(self, other: Poly) -> None:
        if self.field != other.field:
            raise PolyError(f"Polinomios sobre cuerpos distintos: {self.field} vs {other.field}.")

    def __add__(self, other: Poly) -> Poly:
        self._check(other)
        F = self.field
        n = max(len(self.coeffs), len(other.coeffs))
        return Poly(F, tuple(F.add(self.coeff(i), other.coeff(i)) for i in range(n)))

    def __neg__(self) -> Poly:
        return Poly(self.field, tuple(self.field.neg(a) for a in self.coeffs))

    def __sub__(self, other: Poly) -> Poly:
        return self + (-other)

    def __mul__(self, other: Poly) -> Poly:
        self._check(other)
        F = self.field
        if self.is_zero or other.is_zero:
            return Poly(F)
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] = F.add(out[i + j], F.mul(a, b))
        return Poly(F, tuple(out))

    def scale(self, a: int) -> Poly:
        return Poly(self.field, tuple(self.field.mul(a, c) for c in self.coeffs))

    def __call__(self, a: int) -> int:
        return poly_eval(self, a)


def poly_divmod(f: Poly, g: Poly) -> tuple[Poly, Poly]:
    """División euclídea f = quot·g + rem con deg(rem) < deg(g)."""
    if g.is_zero:
        raise PolyError("División entre el polinomio cero.")
    F = f.field
    rem = list(f.coeffs)
    dg = g.degree
    inv_lead = F.inv(g.leading)
    quot = [0] * max(0, len(rem) - dg)
    for shift in range(len(rem) - 1 - dg, -1, -1):
        factor = F.mul(rem[shift + dg], inv_lead)
        quot[shift] = factor
        if factor:
            for i, b in enumerate(g.coeffs):
                rem[shift + i] = F.sub(rem[shift + i], F.mul(factor, b))
    return Poly(F, tuple(quot)), Poly(F, tuple(rem[:dg]))


# ---------------------------------------------------------------------------------
# 🎯 Conjunto de evaluación D
# ---------------------------------------------------------------------------------
@dataclass(frozen=True)
class EvalSet:
    """D = {x_1, ..., x_n} ⊆ F_q, sin repetidos y en orden fijo."""

    field: FieldSpec
    elements: tuple[int, ...]

    def __post_init__(self) -> None:
        els = tuple(self.elements)
        if len(set(els)) != len(els):
            raise PolyError(f"El conjunto de evaluación tiene elementos repetidos: {els}.")
        for a in els:
            if a not in self.field:
                raise PolyError(f"Elemento {a} fuera de GF({self.field.q}).")
        object.__setattr__(self, "elements", els)

    @classmethod
    def full(cls, field: FieldSpec) -> EvalSet:
        return cls(field, tuple(field.elements()))

    @classmethod
    def parse(cls, field: FieldSpec, text: str | None) -> EvalSet:
        """'all' o vacío = F_q completo; si no, lista 'a,b,c'."""
        if not text or text.strip().lower() in {"all", "full"}:
            return cls.full(field)
        try:
            return cls(field, tuple(int(t) for t in text.split(",") if t.strip()))
        except ValueError as e:
            raise PolyError(f"Conjunto de evaluación mal formado: '{text}'.") from e

    @property
    def n(self) -> int:
        return len(self.elements)

    @property
    def is_full(self) -> bool:
        return self.n == self.field.q

    def __iter__(self) -> Iterator[int]:
        return iter(self.elements)

    def __len__(self) -> int:
        return len(self.elements)


# ---------------------------------------------------------------------------------
# 🔢 Operaciones del módulo
# ---------------------------------------------------------------------------------
def poly_eval(f: Poly, a: int) -> int:
    """Horner."""
    F = f.field
    acc = 0
    for c in reversed(f.coeffs):
        acc = F.add(F.mul(acc, a), c)
    return acc


def evaluate_on(f: Poly, D: EvalSet) -> tuple[int, ...]:
    """Palabra (f(x_1), ..., f(x_n))."""
    return tuple(poly_eval(f, a) for a in D)


def distinct_roots_in(f: Poly, D: EvalSet) -> int:
    """Número de α ∈ D con f(α) = 0."""
    if f.is_zero:
        raise PolyError("El polinomio cero tiene todas las raíces: conteo no definido.")
    return sum(1 for a in D if poly_eval(f, a) == 0)


def linear_factor_roots(f: Poly) -> list[int]:
    """Raíces distintas en F_q obtenidas por división de prueba entre (x - α)."""
    if f.is_zero:
        raise PolyError("El polinomio cero no se factoriza.")
    F = f.field
    roots = []
    rest = f
    for a in F.elements():
        if rest.degree < 1:
            break
        factor = Poly(F, (F.neg(a), 1))
        quot, rem = poly_divmod(rest, factor)
        if not rem.is_zero:
            continue
        roots.append(a)
        # Se agota la multiplicidad antes de pasar al siguiente α.
        while rem.is_zero and rest.degree >= 1:
            rest = quot
            quot, rem = poly_divmod(rest, factor)
    return roots


def lagrange_poly(u: Sequence[int], D: EvalSet) -> Poly:
    """Único polinomio de grado <= n-1 con u(x_i) = u_i."""
    F = D.field
    if len(u) != D.n:
        raise PolyError(f"Longitudes distintas: |u|={len(u)} vs |D|={D.n}.")
    for a in u:
        if a not in F:
            raise PolyError(f"Símbolo {a} fuera de GF({F.q}).")
    master = Poly.from_roots(F, D.elements)
    total = Poly(F)
    for xi, ui in zip(D.elements, u):
        if ui == 0:
            continue
        basis, _ = poly_divmod(master, Poly(F, (F.neg(xi), 1)))
        denom = poly_eval(basis, xi)
        total = total + basis.scale(F.div(ui, denom))
    return total


def monic_polys(field: FieldSpec, d: int) -> Iterator[Poly]:
    """Todos los mónicos de grado d en orden lexicográfico de coeficientes."""
    for low in itertools.product(field.elements(), repeat=d):
        yield Poly(field, tuple(reversed(low)) + (1,))


# ---------------------------------------------------------------------------------
# ⚡ Evaluación vectorizada (numpy) para los oráculos de fuerza bruta
# ---------------------------------------------------------------------------------
def coefficient_grid(field: FieldSpec, free: int) -> np.ndarray:
    """Matriz (q^free, free) con todos los vectores de coeficientes en orden odómetro."""
    if free == 0:
        return np.zeros((1, 0), dtype=np.int64)
    grids = np.meshgrid(*([np.arange(field.q, dtype=np.int64)] * free), indexing="ij")
    return np.stack([g.ravel() for g in grids], axis=1)


def eval_many(field: FieldSpec, coeffs: np.ndarray, D: EvalSet) -> np.ndarray:
    """Evalúa N polinomios (filas de coeffs, grado bajo primero) en D: salida (N, n)."""
    add, mul = field.add_table, field.mul_table
    xs = np.asarray(D.elements, dtype=np.int64)
    n_polys, width = coeffs.shape
    acc = np.zeros((n_polys, xs.size), dtype=np.int64)
    for i in range(width - 1, -1, -1):
        acc = add[mul[acc, xs[None, :]], coeffs[:, i][:, None]]
    return acc
