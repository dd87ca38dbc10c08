"""Finite fields GF(p^n) with full log/antilog tables.

Elements are stored by *index*: the coefficient vector (c_0, ..., c_{n-1})
with respect to the power basis of the modulus, read as the base-p integer
c_0 + c_1 p + ... + c_{n-1} p^{n-1}.  The prime subfield constant c is
therefore index c, zero is 0 and one is 1.  Every field is capped at
``DEFAULT_BOUND`` elements so the tables stay in memory.
"""

from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass, field as dc_field

import numpy as np

from . import polyfp
from .arith import is_prime, prime_factors
from .errors import (
    DivisionByZero,
    FieldMismatch,
    NoFieldTooLarge,
    NotPrime,
    ReducibleModulus,
    ZeroArgument,
)

DEFAULT_BOUND = 2**20


@dataclass(frozen=True, eq=False)
class FieldDesc:
    p: int
    n: int
    modulus: tuple[int, ...]
    q: int
    generator_index: int
    exp_table: np.ndarray = dc_field(repr=False)
    log_table: np.ndarray = dc_field(repr=False)
    digits: np.ndarray = dc_field(repr=False)
    powers: np.ndarray = dc_field(repr=False)

    @property
    def key(self) -> tuple:
        return (self.p, self.n, self.modulus)

    def __eq__(self, other):
        return isinstance(other, FieldDesc) and self.key == other.key

    def __hash__(self):
        return hash(self.key)

    def __repr__(self):
        return f"GF({self.p}^{self.n}, modulus={list(self.modulus)})"

    # element constructors
    def from_index(self, index: int) -> FieldElement:
        if not 0 <= index < self.q:
            raise ValueError(f"index {index} outside GF({self.q})")
        return FieldElement(self, tuple(polyfp.from_index(index, self.p, self.n)))

    def element(self, coeffs) -> FieldElement:
        coeffs = [int(c) % self.p for c in coeffs]
        if len(coeffs) > self.n:
            raise ValueError("too many coordinates for this field")
        coeffs += [0] * (self.n - len(coeffs))
        return FieldElement(self, tuple(coeffs))

    def from_int(self, c: int) -> FieldElement:
        """Embed an integer through the prime subfield."""
        return self.from_index(c % self.p)

    @property
    def zero(self) -> FieldElement:
        return self.from_index(0)

    @property
    def one(self) -> FieldElement:
        return self.from_index(1)

    @property
    def generator(self) -> FieldElement:
        return self.from_index(self.generator_index)

    def elements(self):
        for i in range(self.q):
            yield self.from_index(i)

    # vectorised arithmetic on index arrays
    def vadd(self, a, b):
        if self.n == 1:
            return (a + b) % self.p
        return ((self.digits[a] + self.digits[b]) % self.p) @ self.powers

    def vneg(self, a):
        if self.n == 1:
            return (-a) % self.p
        return ((-self.digits[a]) % self.p) @ self.powers

    def vsub(self, a, b):
        return self.vadd(a, self.vneg(b))

    def vmul(self, a, b):
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        la, lb = self.log_table[a], self.log_table[b]
        prod = self.exp_table[(la + lb) % (self.q - 1)]
        return np.where((a == 0) | (b == 0), 0, prod)

    def vpow(self, a, e: int):
        a = np.asarray(a, dtype=np.int64)
        if e == 0:
            return np.ones_like(a)
        la = self.log_table[a]
        out = self.exp_table[(la * e) % (self.q - 1)]
        if e < 0:
            if np.any(a == 0):
                raise DivisionByZero("negative power of zero")
            return out
        return np.where(a == 0, 0, out)

    def vlog(self, a):
        """Discrete logs of an index array; zero maps to -1."""
        return self.log_table[np.asarray(a, dtype=np.int64)]


@dataclass(frozen=True)
class FieldElement:
    field: FieldDesc
    coeffs: tuple[int, ...]

    def __post_init__(self):
        if len(self.coeffs) != self.field.n or any(not 0 <= c < self.field.p for c in self.coeffs):
            raise ValueError(f"bad coordinates {self.coeffs} for {self.field!r}")

    @property
    def index(self) -> int:
        return polyfp.to_index(self.coeffs, self.field.p)

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def _check(self, other) -> FieldElement:
        if isinstance(other, int):
            return self.field.from_int(other)
        if not isinstance(other, FieldElement):
            return NotImplemented
        if other.field != self.field:
            raise FieldMismatch(f"{self.field!r} vs {other.field!r}")
        return other

    def __add__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        p = self.field.p
        return FieldElement(self.field, tuple((x + y) % p for x, y in zip(self.coeffs, other.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        p = self.field.p
        return FieldElement(self.field, tuple((-x) % p for x in self.coeffs))

    def __sub__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        f = self.field
        return f.from_index(int(f.vmul(self.index, other.index)))

    __rmul__ = __mul__

    def inverse(self) -> FieldElement:
        if self.is_zero():
            raise DivisionByZero("inverse of zero")
        return self ** -1

    def __truediv__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __pow__(self, e: int):
        f = self.field
        if self.is_zero():
            if e < 0:
                raise DivisionByZero("negative power of zero")
            return f.one if e == 0 else f.zero
        k = int(f.log_table[self.index])
        return f.from_index(int(f.exp_table[(k * e) % (f.q - 1)]))

    def __repr__(self):
        if self.field.n == 1:
            return f"{self.coeffs[0]} (mod {self.field.p})"
        return f"{list(self.coeffs)} in {self.field!r}"


def _element_order_is_full(g: list[int], modulus: list[int], p: int, q: int, qfac) -> bool:
    if not polyfp.trim(list(g)):
        return False
    if polyfp.powmod(g, q - 1, modulus, p) != [1]:
        return False
    return all(polyfp.powmod(g, (q - 1) // ell, modulus, p) != [1] for ell in qfac)


def _first_irreducible(p: int, n: int) -> list[int]:
    for tail in itertools.count():
        f = polyfp.from_index(tail, p, n) + [1]
        if polyfp.is_irreducible(f, p):
            return f
    raise AssertionError("unreachable")


def _mult_matrix(g: list[int], modulus: list[int], p: int, n: int) -> np.ndarray:
    """Matrix of h -> g*h on the power basis (columns are images of x^j)."""
    cols = []
    for j in range(n):
        img = polyfp.mod(polyfp.mul(g, [0] * j + [1], p), modulus, p)
        cols.append(img + [0] * (n - len(img)))
    return np.array(cols, dtype=np.int64).T


def _power_table(g: list[int], modulus: list[int], p: int, n: int, count: int) -> np.ndarray:
    """Coordinates of g^0 .. g^(count-1), built by doubling."""
    rows = np.zeros((1, n), dtype=np.int64)
    rows[0, 0] = 1
    step = _mult_matrix(g, modulus, p, n)
    while rows.shape[0] < count:
        rows = np.vstack([rows, (rows @ step.T) % p])
        step = (step @ step) % p
    return rows[:count]


@functools.lru_cache(maxsize=64)
def _build(p: int, n: int, modulus: tuple[int, ...] | None, bound: int) -> FieldDesc:
    if not is_prime(p):
        raise NotPrime(p)
    if n < 1:
        raise ValueError(f"extension degree must be positive, got {n}")
    q = p**n
    if q > bound:
        raise NoFieldTooLarge(f"GF({p}^{n}) has {q} elements, bound is {bound}")
    if modulus is None:
        mod_poly = _first_irreducible(p, n)
    else:
        mod_poly = [c % p for c in modulus]
        if len(mod_poly) != n + 1 or mod_poly[-1] != 1:
            raise ValueError(f"modulus must be monic of degree {n}")
        if not polyfp.is_irreducible(mod_poly, p):
            raise ReducibleModulus(f"{mod_poly} is reducible over GF({p})")

    qfac = list(prime_factors(q - 1)) if q > 2 else []
    for gi in range(1, q):
        g = polyfp.trim(polyfp.from_index(gi, p, n))
        if _element_order_is_full(g, mod_poly, p, q, qfac):
            break
    else:
        raise AssertionError("no generator found")

    powers = np.array([p**i for i in range(n)], dtype=np.int64)
    coords = _power_table(g, mod_poly, p, n, q - 1)
    exp_table = coords @ powers
    log_table = np.full(q, -1, dtype=np.int64)
    log_table[exp_table] = np.arange(q - 1, dtype=np.int64)
    if np.count_nonzero(log_table >= 0) != q - 1:
        raise AssertionError("generator does not have full order")
    digits = (np.arange(q, dtype=np.int64)[:, None] // powers) % p
    for arr in (exp_table, log_table, digits, powers):
        arr.setflags(write=False)
    return FieldDesc(p, n, tuple(mod_poly), q, gi, exp_table, log_table, digits, powers)


def construct_field(p: int, n: int = 1, modulus=None, bound: int = DEFAULT_BOUND) -> FieldDesc:
    """Build GF(p^n).

    Without an explicit modulus the first irreducible monic polynomial is
    taken, ordering candidates by their coefficient vector read as a base-p
    integer.  The generator is the smallest element (same order) of full
    multiplicative order.  Results are cached, so equal arguments give the
    same object.
    """
    return _build(p, n, None if modulus is None else tuple(int(c) for c in modulus), bound)


def field_arithmetic(a: FieldElement, b, op: str) -> FieldElement:
    if op == "add":
        return a + b
    if op == "mul":
        return a * b
    if op == "inv":
        return a.inverse()
    if op == "pow":
        return a ** int(b)
    raise ValueError(f"unknown operation {op!r}")


def discrete_log(x: FieldElement) -> int:
    """Exponent k in [0, q-1) with generator**k == x."""
    if x.is_zero():
        raise ZeroArgument("discrete log of zero")
    return int(x.field.log_table[x.index])
