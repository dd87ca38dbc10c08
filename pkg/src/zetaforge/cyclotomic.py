"""Exact arithmetic in the cyclotomic integers Z[zeta_m] = Z[x]/(Phi_m)."""

from __future__ import annotations

import functools
from dataclasses import dataclass
from math import gcd


@functools.lru_cache(maxsize=None)
def cyclotomic_poly(m: int) -> tuple[int, ...]:
    """Coefficients of Phi_m, lowest degree first."""
    if m < 1:
        raise ValueError("conductor must be positive")
    num = [-1] + [0] * (m - 1) + [1]  # x^m - 1
    for d in range(1, m):
        if m % d == 0:
            num = _exact_div(num, list(cyclotomic_poly(d)))
    return tuple(num)


def _exact_div(a: list[int], b: list[int]) -> list[int]:
    # b monic
    a = list(a)
    out = [0] * (len(a) - len(b) + 1)
    for shift in range(len(out) - 1, -1, -1):
        c = a[shift + len(b) - 1]
        out[shift] = c
        if c:
            for i, y in enumerate(b):
                a[shift + i] -= c * y
    if any(a):
        raise ArithmeticError("inexact cyclotomic division")
    return out


def _reduce(coeffs, m: int) -> tuple[int, ...]:
    phi = cyclotomic_poly(m)
    deg = len(phi) - 1
    a = list(coeffs)
    for top in range(len(a) - 1, deg - 1, -1):
        c = a[top]
        if c:
            shift = top - deg
            for i, y in enumerate(phi):
                a[shift + i] -= c * y
    a = a[:deg] + [0] * max(0, deg - len(a))
    return tuple(a)


@dataclass(frozen=True)
class CyclotomicInt:
    """An element of Z[zeta_m] in canonical reduced form."""

    m: int
    coeffs: tuple[int, ...]

    @classmethod
    def from_exponents(cls, m: int, counts) -> CyclotomicInt:
        """Build sum_k counts[k] * zeta_m^k (k taken mod m)."""
        folded = [0] * m
        for k, c in enumerate(counts):
            folded[k % m] += int(c)
        return cls(m, _reduce(folded, m))

    @classmethod
    def integer(cls, m: int, value: int) -> CyclotomicInt:
        return cls.from_exponents(m, [value])

    @classmethod
    def zeta(cls, m: int, k: int = 1) -> CyclotomicInt:
        counts = [0] * m
        counts[k % m] = 1
        return cls.from_exponents(m, counts)

    def __post_init__(self):
        if len(self.coeffs) != len(cyclotomic_poly(self.m)) - 1:
            raise ValueError("coefficients are not in reduced form")

    def _coerce(self, other) -> CyclotomicInt:
        if isinstance(other, int):
            return CyclotomicInt.integer(self.m, other)
        if isinstance(other, CyclotomicInt):
            if other.m != self.m:
                raise ValueError(f"conductor mismatch {self.m} vs {other.m}; lift first")
            return other
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return CyclotomicInt(self.m, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        return CyclotomicInt(self.m, tuple(-a for a in self.coeffs))

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        prod = [0] * (2 * len(self.coeffs))
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    prod[i + j] += a * b
        return CyclotomicInt(self.m, _reduce(prod, self.m))

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, int):
            other = CyclotomicInt.integer(self.m, other)
        if not isinstance(other, CyclotomicInt):
            return NotImplemented
        if other.m != self.m:
            big = self.m * other.m // gcd(self.m, other.m)
            return self.lift(big).coeffs == other.lift(big).coeffs
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.m, self.coeffs))

    def conj(self) -> CyclotomicInt:
        """Complex conjugation zeta -> zeta^-1."""
        counts = [0] * self.m
        for k, a in enumerate(self.coeffs):
            counts[(-k) % self.m] += a
        return CyclotomicInt.from_exponents(self.m, counts)

    def lift(self, big: int) -> CyclotomicInt:
        """Image in Z[zeta_big] under zeta_m -> zeta_big^(big/m)."""
        if big % self.m:
            raise ValueError(f"{self.m} does not divide {big}")
        step = big // self.m
        counts = [0] * big
        for k, a in enumerate(self.coeffs):
            counts[(k * step) % big] += a
        return CyclotomicInt.from_exponents(big, counts)

    def is_integer(self) -> bool:
        return not any(self.coeffs[1:])

    def __int__(self):
        if not self.is_integer():
            raise ValueError(f"{self} is not a rational integer")
        return self.coeffs[0] if self.coeffs else 0

    def __repr__(self):
        terms = [f"{a}*z^{k}" if k else str(a) for k, a in enumerate(self.coeffs) if a]
        return f"CyclotomicInt(m={self.m}: {' + '.join(terms) or '0'})"
