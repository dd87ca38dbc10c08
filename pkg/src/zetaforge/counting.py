"""Point counting over GF(q^n).

Exhaustive enumeration is the reference counter.  Two specialised counters
sit next to it: a quadratic-character counter for short Weierstrass curves
and a Jacobi-sum counter for diagonal equations.  All three agree exactly;
the test suite checks that.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from itertools import product
from math import gcd, lcm

import numpy as np

from .arith import divisors, mobius
from .characters import MultChar, jacobi_sum
from .cyclotomic import CyclotomicInt
from .errors import (
    BadCharacteristic,
    BudgetExceeded,
    CharacteristicMismatch,
    FieldMismatch,
    NonIntegralOrbit,
    NotHomogeneous,
    SingularCurve,
)
from .field import FieldDesc, construct_field

DEFAULT_BUDGET = 10**8
CHUNK = 1 << 18


def default_budget() -> int:
    env = os.environ.get("ZETAFORGE_BUDGET")
    return int(env) if env else DEFAULT_BUDGET


@dataclass(frozen=True)
class PolynomialTerm:
    coeff: int
    exponents: tuple[int, ...]

    @property
    def degree(self) -> int:
        return sum(self.exponents)


Polynomial = tuple[PolynomialTerm, ...]


@dataclass(frozen=True)
class VarietySpec:
    """A system of integer-coefficient equations over a base field.

    ``ambient`` is ``"affine"`` or ``"projective"``; ``nvars`` counts the
    coordinates, so projective r-space has ``nvars = r + 1``.  Coefficients are
    reduced mod p when used, which embeds them in every extension through the
    prime subfield.
    """

    ambient: str
    nvars: int
    equations: tuple[Polynomial, ...]
    base: FieldDesc
    label: str = ""

    def __post_init__(self):
        if self.ambient not in ("affine", "projective"):
            raise ValueError(f"unknown ambient {self.ambient!r}")
        if self.ambient == "projective" and self.nvars < 1:
            raise ValueError("projective space needs at least one coordinate")
        eqs = tuple(tuple(t if isinstance(t, PolynomialTerm) else PolynomialTerm(int(t[0]), tuple(t[1])) for t in eq)
                    for eq in self.equations)
        object.__setattr__(self, "equations", eqs)
        for eq in eqs:
            for t in eq:
                if len(t.exponents) != self.nvars or min(t.exponents, default=0) < 0:
                    raise ValueError(f"exponent vector {t.exponents} does not match {self.nvars} variables")
        if self.ambient == "projective" and not self.is_homogeneous():
            raise NotHomogeneous(f"{self.label or 'system'} is not homogeneous")

    @property
    def r(self) -> int:
        """Dimension of the ambient space."""
        return self.nvars - (1 if self.ambient == "projective" else 0)

    @property
    def q(self) -> int:
        return self.base.q

    def is_homogeneous(self) -> bool:
        for eq in self.equations:
            degs = {t.degree for t in eq if t.coeff % self.base.p}
            if len(degs) > 1:
                return False
        return True

    def candidates(self, q: int) -> int:
        """Number of tuples the enumerator visits over a field with q elements."""
        if self.ambient == "affine":
            return q**self.nvars
        return (q**self.nvars - 1) // (q - 1)


@dataclass(frozen=True)
class CountSeries:
    q: int
    counts: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "counts", tuple(int(c) for c in self.counts))
        if any(c < 0 for c in self.counts):
            raise ValueError("point counts are nonnegative")

    def __len__(self):
        return len(self.counts)

    def __getitem__(self, n):
        return self.counts[n]


def weierstrass_spec(a: int, b: int, base: FieldDesc, label: str = "") -> VarietySpec:
    """Projective closure y^2 z = x^3 + a x z^2 + b z^3 in coordinates (x, y, z)."""
    eq = (
        PolynomialTerm(1, (0, 2, 1)),
        PolynomialTerm(-1, (3, 0, 0)),
        PolynomialTerm(-a, (1, 0, 2)),
        PolynomialTerm(-b, (0, 0, 3)),
    )
    return VarietySpec("projective", 3, (eq,), base, label or f"y^2 = x^3 + {a}x + {b}")


# enumeration -------------------------------------------------------------

def _check_ext(spec: VarietySpec, ext: FieldDesc) -> None:
    if ext.p != spec.base.p:
        raise CharacteristicMismatch(f"spec over characteristic {spec.base.p}, field {ext!r}")


def _satisfied(spec: VarietySpec, ext: FieldDesc, cols: list[np.ndarray]) -> np.ndarray:
    size = cols[0].shape[0] if cols else 1
    ok = np.ones(size, dtype=bool)
    logs = [ext.vlog(c) for c in cols]
    qm1 = ext.q - 1
    for eq in spec.equations:
        acc = np.zeros((size, ext.n), dtype=np.int64)
        for t in eq:
            c = t.coeff % ext.p
            if not c:
                continue
            expo = np.full(size, int(ext.log_table[c]), dtype=np.int64)
            dead = np.zeros(size, dtype=bool)
            for lg, e in zip(logs, t.exponents):
                if e:
                    dead |= lg < 0
                    expo += lg * e
            val = np.where(dead, 0, ext.exp_table[expo % qm1])
            acc += ext.digits[val]
        ok &= ~np.any(acc % ext.p, axis=1)
    return ok


def _count_block(spec, ext, prefix, free, start, stop) -> int:
    """Count tuples prefix + (free coordinates from flat range [start, stop))."""
    q = ext.q
    flat = np.arange(start, stop, dtype=np.int64)
    tail = []
    for _ in range(free):
        flat, d = np.divmod(flat, q)
        tail.append(d)
    cols = [np.full(stop - start, v, dtype=np.int64) for v in prefix] + tail[::-1]
    return int(np.count_nonzero(_satisfied(spec, ext, cols)))


def _blocks(spec: VarietySpec, ext: FieldDesc):
    """Work units (prefix, free, start, stop) covering the enumeration once."""
    q = ext.q
    if spec.ambient == "affine":
        shapes = [((), spec.nvars)]
    else:
        # first nonzero coordinate normalised to one
        shapes = [((0,) * i + (1,), spec.nvars - i - 1) for i in range(spec.nvars)]
    for prefix, free in shapes:
        total = q**free
        for start in range(0, total, CHUNK):
            yield prefix, free, start, min(total, start + CHUNK)


def _enumerate(spec: VarietySpec, ext: FieldDesc, budget, workers: int) -> int:
    _check_ext(spec, ext)
    budget = default_budget() if budget is None else budget
    cand = spec.candidates(ext.q)
    if not spec.equations:
        return cand
    if cand > budget:
        raise BudgetExceeded(f"{cand} candidate tuples over GF({ext.q}) exceed budget {budget}")
    if spec.nvars == 0:
        return 1 if all(all(t.coeff % ext.p == 0 for t in eq) for eq in spec.equations) else 0
    blocks = list(_blocks(spec, ext))
    if workers > 1 and len(blocks) > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(lambda b: _count_block(spec, ext, *b), blocks))
    else:
        parts = [_count_block(spec, ext, *b) for b in blocks]
    return sum(parts)


def count_affine(spec: VarietySpec, ext: FieldDesc, budget: int | None = None, workers: int = 1) -> int:
    """Number of points of GF(ext)^nvars satisfying every equation."""
    if spec.ambient != "affine":
        spec = VarietySpec("affine", spec.nvars, spec.equations, spec.base, spec.label)
    return _enumerate(spec, ext, budget, workers)


def count_projective(spec: VarietySpec, ext: FieldDesc, budget: int | None = None, workers: int = 1) -> int:
    """Number of projective points, one normalised representative each."""
    if spec.ambient != "projective":
        raise ValueError("count_projective needs a projective spec")
    if not spec.is_homogeneous():
        raise NotHomogeneous(spec.label)
    return _enumerate(spec, ext, budget, workers)


# elliptic curves ----------------------------------------------------------

def count_elliptic(a: int, b: int, F: FieldDesc) -> int:
    """|E(F)| for y^2 = x^3 + a x + b, point at infinity included."""
    if F.p in (2, 3):
        raise BadCharacteristic(f"characteristic {F.p} is excluded for short Weierstrass curves")
    if (4 * a**3 + 27 * b**2) % F.p == 0:
        raise SingularCurve(f"discriminant of ({a}, {b}) vanishes mod {F.p}")
    total = 1
    A, B = F.from_int(a).index, F.from_int(b).index
    for start in range(0, F.q, CHUNK):
        x = np.arange(start, min(F.q, start + CHUNK), dtype=np.int64)
        rhs = F.vadd(F.vadd(F.vpow(x, 3), F.vmul(np.full_like(x, A), x)), np.full_like(x, B))
        logs = F.vlog(rhs)
        zero = logs < 0
        squares = (~zero) & (logs % 2 == 0)
        total += int(np.count_nonzero(zero)) + 2 * int(np.count_nonzero(squares))
    return total


# diagonal equations via Jacobi sums ---------------------------------------

def _lift(z: CyclotomicInt, m: int) -> CyclotomicInt:
    return z if z.m == m else z.lift(m)


def diagonal_form(spec: VarietySpec):
    """Return (coeffs, exponents, b) if ``spec`` is one diagonal equation.

    The equation must read a_0 X_0^m_0 + ... + a_r X_r^m_r = b with every
    variable appearing in exactly one pure-power term and nonzero a_i mod p.
    Returns None otherwise.
    """
    if len(spec.equations) != 1 or spec.nvars == 0:
        return None
    p = spec.base.p
    coeffs = [0] * spec.nvars
    exps = [0] * spec.nvars
    const = 0
    for t in spec.equations[0]:
        c = t.coeff % p
        if not c:
            continue
        nz = [i for i, e in enumerate(t.exponents) if e]
        if not nz:
            const = (const + c) % p
            continue
        if len(nz) != 1 or coeffs[nz[0]]:
            return None
        coeffs[nz[0]] = c
        exps[nz[0]] = t.exponents[nz[0]]
    if not all(coeffs):
        return None
    return coeffs, exps, (-const) % p


def count_diagonal_charsum(coeffs, exponents, b, F: FieldDesc) -> int:
    """Affine count of a_0 X_0^m_0 + ... + a_r X_r^m_r = b by character sums.

    #{x : x^m = u} = sum over chi with chi^m = 1 of chi(u), with the trivial
    character taking the value 1 at 0.  Substituting and collecting the
    convolution leaves one Jacobi sum per character tuple.  ``coeffs`` and
    ``b`` are field elements or integers (embedded via the prime subfield).
    """
    def as_index(v):
        if isinstance(v, int):
            return F.from_int(v).index
        if v.field != F:
            raise FieldMismatch("coefficient from another field")
        return v.index

    a_idx = [as_index(a) for a in coeffs]
    if any(i == 0 for i in a_idx):
        raise ValueError("diagonal coefficients must be nonzero")
    b_idx = as_index(b)
    ms = [gcd(int(e), F.q - 1) for e in exponents]
    k = len(ms)
    M = lcm(*ms)
    q = F.q
    one = F.one
    total = CyclotomicInt.integer(M, 0)
    cache: dict[tuple, CyclotomicInt] = {}

    def jac(chars):
        key = tuple((c.order, c.index) for c in chars)
        if key not in cache:
            cache[key] = _lift(jacobi_sum(chars), M) if len(chars) > 1 else CyclotomicInt.integer(M, 1)
        return cache[key]

    for idx in product(*(range(m) for m in ms)):
        chars = [MultChar(F, m, i) for m, i in zip(ms, idx)]
        trivial = [c.is_trivial for c in chars]
        if all(trivial):
            inner = CyclotomicInt.integer(M, q ** (k - 1))
        elif any(trivial):
            continue  # mixed tuples sum to zero
        else:
            prod_char = chars[0]
            for c in chars[1:]:
                prod_char = prod_char * c
            if b_idx:
                # sum over u_1+..+u_k = b equals (prod chi)(b) J(chi_1..chi_k)
                inner = _lift(prod_char(F.from_index(b_idx)), M) * jac(chars)
            elif prod_char.is_trivial:
                # sum over u_1+..+u_k = 0: chi_k(-1) (q-1) J(chi_1..chi_{k-1})
                inner = _lift(chars[-1](-one), M) * (q - 1) * jac(chars[:-1])
            else:
                continue
        weight = CyclotomicInt.integer(M, 1)
        for c, ai in zip(chars, a_idx):
            weight = weight * _lift(c(F.from_index(ai).inverse()), M)
        total = total + weight * inner
    if not total.is_integer():
        raise ArithmeticError(f"character sum did not collapse to an integer: {total}")
    return int(total)


def count_diagonal_projective(coeffs, exponents, F: FieldDesc) -> int:
    """Projective count of a homogeneous diagonal equation via its affine cone."""
    cone = count_diagonal_charsum(coeffs, exponents, 0, F)
    return (cone - 1) // (F.q - 1)


# series -------------------------------------------------------------------

def count_over(spec: VarietySpec, ext: FieldDesc, method: str = "auto", budget=None, workers: int = 1) -> int:
    """Count ``spec`` over ``ext`` with the chosen counter.

    ``auto`` enumerates when the budget allows and otherwise falls back to
    the character-sum counter for diagonal equations.
    """
    budget = default_budget() if budget is None else budget
    count = count_projective if spec.ambient == "projective" else count_affine
    if method == "enumerate":
        return count(spec, ext, budget, workers)
    diag = diagonal_form(spec)
    if method == "charsum" or (method == "auto" and spec.equations and spec.candidates(ext.q) > budget and diag):
        if diag is None:
            raise ValueError(f"{spec.label or 'spec'} is not a single diagonal equation")
        coeffs, exps, b = diag
        if spec.ambient == "projective":
            if b or len(set(exps)) != 1:
                raise NotHomogeneous("projective diagonal equations must be homogeneous")
            return count_diagonal_projective(coeffs, exps, ext)
        return count_diagonal_charsum(coeffs, exps, b, ext)
    if method != "auto":
        raise ValueError(f"unknown counting method {method!r}")
    return count(spec, ext, budget, workers)


def count_series(spec: VarietySpec, k: int, method: str = "auto", budget=None, workers: int = 1) -> CountSeries:
    """N_1..N_k over the degree-1..k extensions of the base field."""
    if k < 1:
        raise ValueError("need at least one extension degree")
    budget = default_budget() if budget is None else budget
    p, n = spec.base.p, spec.base.n
    counts = []
    for j in range(1, k + 1):
        if not spec.equations:
            counts.append(spec.candidates(p ** (n * j)))
            continue
        if method != "charsum" and spec.candidates(p ** (n * j)) > budget and diagonal_form(spec) is None:
            raise BudgetExceeded(f"GF({p}^{n * j}) enumeration exceeds budget {budget}")
        ext = construct_field(p, n * j)
        counts.append(count_over(spec, ext, method, budget, workers))
    return CountSeries(spec.base.q, tuple(counts))


def closed_point_degrees(series: CountSeries) -> list[int]:
    """Number b_e of closed points of each degree e, by Moebius inversion."""
    counts = series.counts if isinstance(series, CountSeries) else tuple(series)
    if not counts:
        raise ValueError("empty count series")
    out = []
    for e in range(1, len(counts) + 1):
        s = sum(mobius(e // d) * counts[d - 1] for d in divisors(e))
        if s % e:
            raise NonIntegralOrbit(f"degree {e}: {Fraction(s, e)} closed points")
        out.append(s // e)
    return out
