"""Multiplicative characters of GF(q) and Jacobi sums by direct summation."""

from __future__ import annotations

from dataclasses import dataclass
from math import lcm

import numpy as np

from .cyclotomic import CyclotomicInt
from .errors import FieldMismatch, TrivialCharacter
from .field import FieldDesc, FieldElement

CHUNK = 1 << 20


@dataclass(frozen=True)
class MultChar:
    """chi(generator) = zeta_order^index, chi(0) = 0."""

    field: FieldDesc
    order: int
    index: int

    def __post_init__(self):
        if self.order < 1 or (self.field.q - 1) % self.order:
            raise ValueError(f"order {self.order} does not divide q-1 = {self.field.q - 1}")
        object.__setattr__(self, "index", self.index % self.order)

    @property
    def is_trivial(self) -> bool:
        return self.index == 0

    def __call__(self, x: FieldElement) -> CyclotomicInt:
        if x.field != self.field:
            raise FieldMismatch("character and element live in different fields")
        if x.is_zero():
            return CyclotomicInt.integer(self.order, 0)
        k = int(self.field.log_table[x.index])
        return CyclotomicInt.zeta(self.order, self.index * k)

    def __mul__(self, other: MultChar) -> MultChar:
        if other.field != self.field:
            raise FieldMismatch("characters on different fields")
        m = lcm(self.order, other.order)
        idx = self.index * (m // self.order) + other.index * (m // other.order)
        return MultChar(self.field, m, idx).reduced()

    def __pow__(self, e: int) -> MultChar:
        return MultChar(self.field, self.order, self.index * e).reduced()

    def conj(self) -> MultChar:
        return MultChar(self.field, self.order, -self.index)

    def reduced(self) -> MultChar:
        """Same character written with its exact order."""
        exact = self.order // np.gcd(self.order, self.index) if self.index else 1
        return MultChar(self.field, int(exact), self.index * int(exact) // self.order)

    def exponents(self, indices, m: int) -> np.ndarray:
        """Exponent e with chi(x) = zeta_m^e for each field index; -1 marks x = 0."""
        if m % self.order:
            raise ValueError("target conductor must be a multiple of the order")
        logs = self.field.vlog(indices)
        scale = self.index * (m // self.order)
        return np.where(logs < 0, -1, (logs * scale) % m)


def characters_of_order_dividing(field: FieldDesc, m: int) -> list[MultChar]:
    return [MultChar(field, m, i) for i in range(m)]


def _tuples(q: int, width: int, start: int, stop: int) -> list[np.ndarray]:
    flat = np.arange(start, stop, dtype=np.int64)
    cols = []
    for _ in range(width):
        flat, digit = np.divmod(flat, q)
        cols.append(digit)
    return cols


def jacobi_sum(chars: list[MultChar]) -> CyclotomicInt:
    """J(chi_1, ..., chi_k) = sum over x_1 + ... + x_k = 1 of prod chi_i(x_i).

    Summed term by term over all q^(k-1) free tuples; the result lives in
    Z[zeta_m] with m the lcm of the character orders.
    """
    if len(chars) < 2:
        raise ValueError("a Jacobi sum needs at least two characters")
    field = chars[0].field
    if any(c.field != field for c in chars):
        raise FieldMismatch("characters on different fields")
    if any(c.is_trivial for c in chars):
        raise TrivialCharacter("Jacobi sums here take nontrivial characters only")
    m = lcm(*(c.order for c in chars))
    q = field.q
    k = len(chars)
    total = q ** (k - 1)
    hist = np.zeros(m, dtype=np.int64)
    for start in range(0, total, CHUNK):
        cols = _tuples(q, k - 1, start, min(total, start + CHUNK))
        acc = np.zeros_like(cols[0])
        for c in cols:
            acc = field.vadd(acc, c)
        cols.append(field.vsub(np.ones_like(acc), acc))
        expo = np.zeros_like(acc)
        alive = np.ones(acc.shape, dtype=bool)
        for ch, col in zip(chars, cols):
            e = ch.exponents(col, m)
            alive &= e >= 0
            expo += e
        hist += np.bincount(expo[alive] % m, minlength=m)
    return CyclotomicInt.from_exponents(m, hist.tolist())
