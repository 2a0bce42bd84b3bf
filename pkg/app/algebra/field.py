# app/algebra/field.py
# =================================================================================
# 🧮 CUERPO FINITO F_q (q = p^s) CON TABLAS LOG/ANTILOG
# ---------------------------------------------------------------------------------
# - Codificación canónica: enteros 0..q-1; los dígitos en base p son los
#   coeficientes del residuo (dígito i = coeficiente de t^i).
# - Módulo de la extensión: el mónico irreducible de grado s lexicográficamente
#   más pequeño (coeficientes comparados de grado bajo a alto como entero en base p).
# - Tablas log/antilog cuando q <= 2^16; tablas completas q×q (numpy) cuando
#   q <= 2^10, usadas por la evaluación vectorizada de polinomios.
# - FieldSpec es inmutable tras construirse: se puede compartir sin cerrojos.
# =================================================================================

from __future__ import annotations

from functools import cached_property, lru_cache

import numpy as np
from loguru import logger
from sympy import isprime

from app.core.errors import FieldError

MAX_ORDER = 2**20                  # Tope de escritorio para q.
LOG_TABLE_MAX = 2**16              # Hasta aquí se construyen tablas log/antilog.
FULL_TABLE_MAX = 2**10             # Hasta aquí se construyen tablas completas q×q.


# ---------------------------------------------------------------------------------
# 🔧 Aritmética de polinomios sobre F_p (listas de coeficientes, grado bajo primero)
# ---------------------------------------------------------------------------------
def _fp_trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _fp_mod(a: list[int], m: list[int], p: int) -> list[int]:
    """Resto de a entre el polinomio mónico m sobre F_p."""
    a = _fp_trim([x % p for x in a])
    dm = len(m) - 1
    while len(a) - 1 >= dm:
        lead = a[-1]
        shift = len(a) - 1 - dm
        for i, mi in enumerate(m):
            a[shift + i] = (a[shift + i] - lead * mi) % p
        _fp_trim(a)
    return a


def _fp_monic_of_degree(e: int, p: int, index: int) -> list[int]:
    """El index-ésimo mónico de grado e (dígitos de index = coeficientes bajos)."""
    coeffs = []
    for _ in range(e):
        coeffs.append(index % p)
        index //= p
    return coeffs + [1]


def is_irreducible_fp(m: list[int], p: int) -> bool:
    """Irreducibilidad por división de prueba contra todos los mónicos de grado <= s/2."""
    s = len(m) - 1
    if s <= 0:
        return False
    if s == 1:
        return True
    for e in range(1, s // 2 + 1):
        for idx in range(p**e):
            if not _fp_mod(list(m), _fp_monic_of_degree(e, p, idx), p):
                return False
    return True


def smallest_irreducible(p: int, s: int) -> tuple[int, ...]:
    """Mónico irreducible de grado s lexicográficamente mínimo (grado bajo primero)."""
    for idx in range(p**s):
        cand = _fp_monic_of_degree(s, p, idx)
        if is_irreducible_fp(cand, p):
            return tuple(cand)
    raise FieldError(f"No existe irreducible de grado {s} sobre F_{p} (imposible).")  # pragma: no cover


# ---------------------------------------------------------------------------------
# 🏛️ FieldSpec
# ---------------------------------------------------------------------------------
class FieldSpec:
    """El cuerpo F_q con q = p^s; elementos codificados como enteros 0..q-1."""

    def __init__(self, p: int, s: int):
        if not isinstance(p, int) or not isprime(p):
            raise FieldError(f"La característica p={p} no es un primo.")
        if not isinstance(s, int) or s < 1:
            raise FieldError(f"El grado de extensión s={s} debe ser un entero >= 1.")
        q = p**s
        if q > MAX_ORDER:
            raise FieldError(f"q={p}^{s}={q} supera el tope de escritorio {MAX_ORDER}.")

        self.p = p
        self.s = s
        self.q = q
        # Con s = 1 no hay módulo (None): la aritmética es módulo p.
        self.modulus: tuple[int, ...] | None = smallest_irreducible(p, s) if s > 1 else None
        self._pows = [p**i for i in range(s)]

        self._exp: list[int] | None = None
        self._log: list[int] | None = None
        self.generator: int | None = None
        if q <= LOG_TABLE_MAX:
            self._build_log_tables()

        logger.debug("[FIELD] GF({}) listo | modulus={} | generator={}", q, self.modulus, self.generator)

    # --- Codificación ---
    def digits(self, a: int) -> list[int]:
        """Dígitos en base p del elemento (coeficientes del residuo)."""
        out = []
        for _ in range(self.s):
            out.append(a % self.p)
            a //= self.p
        return out

    def from_digits(self, digits: list[int]) -> int:
        return sum((d % self.p) * w for d, w in zip(digits, self._pows))

    def elements(self) -> range:
        return range(self.q)

    def nonzero(self) -> range:
        return range(1, self.q)

    def __contains__(self, a: object) -> bool:
        return isinstance(a, int) and 0 <= a < self.q

    # --- Igualdad / hash por parámetros (el módulo queda determinado por (p, s)) ---
    def __eq__(self, other: object) -> bool:
        return isinstance(other, FieldSpec) and (self.p, self.s) == (other.p, other.s)

    def __hash__(self) -> int:
        return hash((self.p, self.s))

    def __repr__(self) -> str:
        return f"FieldSpec(p={self.p}, s={self.s}, q={self.q})"

    # --- Aritmética aditiva ---
    def add(self, a: int, b: int) -> int:
        if self.s == 1:
            return (a + b) % self.p
        if self.p == 2:
            return a ^ b
        return self.from_digits([x + y for x, y in zip(self.digits(a), self.digits(b))])

    def neg(self, a: int) -> int:
        if self.s == 1:
            return (-a) % self.p
        if self.p == 2:
            return a
        return self.from_digits([-x for x in self.digits(a)])

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    # --- Aritmética multiplicativa ---
    def _mul_raw(self, a: int, b: int) -> int:
        """Producto sin tablas: residuos multiplicados y reducidos módulo el irreducible."""
        if self.s == 1:
            return (a * b) % self.p
        da, db = self.digits(a), self.digits(b)
        prod = [0] * (2 * self.s - 1)
        for i, x in enumerate(da):
            if x:
                for j, y in enumerate(db):
                    prod[i + j] += x * y
        return self.from_digits(_fp_mod(prod, list(self.modulus), self.p) + [0] * self.s)

    def _build_log_tables(self) -> None:
        q = self.q
        if q == 2:
            self.generator, self._exp, self._log = 1, [1, 1], [0, 0]
            return
        order = q - 1
        for g in range(2, q):
            exp = [1] * (2 * order)
            x = 1
            ok = True
            for i in range(1, order):
                x = self._mul_raw(x, g)
                if x == 1:                             # Orden menor que q-1: no es primitivo.
                    ok = False
                    break
                exp[i] = x
            if ok:
                exp[order:] = exp[:order]
                log = [0] * q
                for i in range(order):
                    log[exp[i]] = i
                self.generator, self._exp, self._log = g, exp, log
                return
        raise FieldError(f"No se encontró elemento primitivo en GF({q}).")  # pragma: no cover

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        if self._exp is None:
            return self._mul_raw(a, b)
        return self._exp[self._log[a] + self._log[b]]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("0 no tiene inverso en el cuerpo.")
        if self._exp is None:
            return self.pow(a, self.q - 2)
        return self._exp[(self.q - 1 - self._log[a]) % (self.q - 1)]

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, e: int) -> int:
        if e < 0:
            return self.pow(self.inv(a), -e)
        if e == 0:
            return 1
        if a == 0:
            return 0
        if self._exp is not None:
            return self._exp[(self._log[a] * e) % (self.q - 1)]
        result, base = 1, a
        while e:
            if e & 1:
                result = self._mul_raw(result, base)
            base = self._mul_raw(base, base)
            e >>= 1
        return result

    # --- Tablas numpy (determinismo + evaluación vectorizada) ---
    @property
    def exp_table(self) -> np.ndarray:
        if self._exp is None:
            raise FieldError(f"GF({self.q}) no tiene tablas log/antilog (q > {LOG_TABLE_MAX}).")
        return np.asarray(self._exp[: max(1, self.q - 1)], dtype=np.int64)

    @property
    def log_table(self) -> np.ndarray:
        if self._log is None:
            raise FieldError(f"GF({self.q}) no tiene tablas log/antilog (q > {LOG_TABLE_MAX}).")
        return np.asarray(self._log, dtype=np.int64)

    @property
    def has_full_tables(self) -> bool:
        return self.q <= FULL_TABLE_MAX

    @cached_property
    def add_table(self) -> np.ndarray:
        """Tabla completa q×q de la suma (solo q <= 2^10)."""
        self._require_full_tables()
        elems = np.arange(self.q, dtype=np.int64)
        if self.p == 2:
            return np.bitwise_xor.outer(elems, elems)
        table = np.zeros((self.q, self.q), dtype=np.int64)
        for w in self._pows:
            d = (elems // w) % self.p
            table += ((d[:, None] + d[None, :]) % self.p) * w
        return table

    @cached_property
    def mul_table(self) -> np.ndarray:
        """Tabla completa q×q del producto vía log/antilog (solo q <= 2^10)."""
        self._require_full_tables()
        order = max(1, self.q - 1)
        exp = np.asarray(self._exp[:order], dtype=np.int64)
        log = np.asarray(self._log, dtype=np.int64)
        table = exp[(log[:, None] + log[None, :]) % order]
        table[0, :] = 0
        table[:, 0] = 0
        return table

    def _require_full_tables(self) -> None:
        if not self.has_full_tables:
            raise FieldError(f"Tablas completas solo para q <= {FULL_TABLE_MAX} (q={self.q}).")


@lru_cache(maxsize=64)
def build_field(p: int, s: int = 1) -> FieldSpec:
    """Construye (y cachea) F_{p^s}; mismo (p, s) ⇒ mismo objeto y mismas tablas."""
    return FieldSpec(p, s)


def field_of_order(q: int) -> FieldSpec:
    """F_q a partir del orden q = p^s."""
    if q < 2:
        raise FieldError(f"q={q} no es el orden de un cuerpo finito.")
    p = next((d for d in range(2, q + 1) if q % d == 0), q)
    s, rest = 0, q
    while rest % p == 0:
        rest //= p
        s += 1
    if rest != 1:
        raise FieldError(f"q={q} no es potencia de un primo.")
    return build_field(p, s)
