"""Good-prime local factors and Dirichlet coefficients for y^2 = x^3 + ax + b over Q."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .arith import is_prime, prime_factors, primes_up_to
from .counting import count_elliptic, weierstrass_spec
from .errors import BadPrime, MissingPrime, NotPrime, OutOfRegion, SingularCurve
from .field import construct_field

EXCLUDED = (2, 3)


@dataclass(frozen=True)
class IntegerCurve:
    a: int
    b: int

    def __post_init__(self):
        if self.discriminant == 0:
            raise SingularCurve(f"y^2 = x^3 + {self.a}x + {self.b} is singular")

    @property
    def discriminant(self) -> int:
        return -16 * (4 * self.a**3 + 27 * self.b**2)


@dataclass(frozen=True)
class Reduction:
    p: int
    good: bool
    reason: str = ""
    spec: object = None


@dataclass(frozen=True)
class LocalFactor:
    p: int
    status: str  # "good" or "bad-skipped"
    a_p: int | None = None

    @property
    def good(self) -> bool:
        return self.status == "good"

    @property
    def polynomial(self) -> tuple[int, ...] | None:
        """1 - a_p T + p T^2, lowest degree first."""
        return (1, -self.a_p, self.p) if self.good else None


def reduce_mod_p(curve: IntegerCurve, p: int) -> Reduction:
    if not is_prime(p):
        raise NotPrime(p)
    if p in EXCLUDED:
        return Reduction(p, False, "excluded characteristic")
    if curve.discriminant % p == 0:
        return Reduction(p, False, "p divides the discriminant")
    spec = weierstrass_spec(curve.a % p, curve.b % p, construct_field(p), f"{curve} mod {p}")
    return Reduction(p, True, spec=spec)


def local_factor(curve: IntegerCurve, p: int) -> LocalFactor:
    red = reduce_mod_p(curve, p)
    if not red.good:
        raise BadPrime(f"{p}: {red.reason}")
    a_p = p + 1 - count_elliptic(curve.a, curve.b, construct_field(p))
    if a_p * a_p > 4 * p:
        raise AssertionError(f"Hasse bound violated at p = {p}: a_p = {a_p}")
    return LocalFactor(p, "good", a_p)


def local_factors(curve: IntegerCurve, pmax: int) -> dict[int, LocalFactor]:
    """Every prime up to pmax, bad ones recorded as skipped."""
    out = {}
    for p in primes_up_to(pmax):
        if reduce_mod_p(curve, p).good:
            out[p] = local_factor(curve, p)
        else:
            out[p] = LocalFactor(p, "bad-skipped")
    return out


def dirichlet_expand(factors, N: int) -> list[int]:
    """a_1..a_N of the Euler product over the given local factors.

    Skipped primes contribute the factor 1, so every index they divide gets
    coefficient 0.
    """
    table = {f.p: f for f in (factors.values() if isinstance(factors, dict) else factors)}
    missing = [p for p in primes_up_to(N) if p not in table]
    if missing:
        raise MissingPrime(f"no local factor for primes {missing[:10]}")
    a = [0] * (N + 1)
    a[1] = 1
    # prime powers
    for p in primes_up_to(N):
        f = table[p]
        prev, cur = 1, (f.a_p if f.good else 0)
        pk = p
        while pk <= N:
            a[pk] = cur
            if f.good:
                prev, cur = cur, f.a_p * cur - p * prev
            else:
                prev, cur = cur, 0
            pk *= p
    # multiplicativity
    for n in range(2, N + 1):
        fac = prime_factors(n)
        if len(fac) > 1:
            v = 1
            for p, e in fac.items():
                v *= a[p**e]
            a[n] = v
    return a[1:]


def euler_partial_value(factors, s: int, P: int) -> Fraction:
    """prod over good p <= P of 1 / (1 - a_p p^-s + p^(1-2s)), exactly.

    s must be an integer >= 2 so the value stays rational.
    """
    if isinstance(s, Fraction) and s.denominator == 1:
        s = int(s)
    if not isinstance(s, int):
        raise OutOfRegion(f"only integer s is supported, got {s}")
    if s < 2:
        raise OutOfRegion(f"s = {s} is outside the region of convergence")
    fs = factors.values() if isinstance(factors, dict) else factors
    value = Fraction(1)
    for f in fs:
        if f.good and f.p <= P:
            value /= 1 - Fraction(f.a_p, f.p**s) + Fraction(f.p, f.p ** (2 * s))
    return value
