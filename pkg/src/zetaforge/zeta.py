"""Zeta functions as exact rational functions of T.

Counts and zeta functions are tied together by
log Z(T) = sum N_n T^n / n, and for Z = num/den with
num = prod(1 - alpha_i T), den = prod(1 - beta_j T) this reads
N_n = sum beta_j^n - sum alpha_i^n.  Everything below works on coefficient
lists through Newton's identities; no polynomial root is ever computed.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, product
from math import comb

from . import qpoly
from .counting import CountSeries
from .errors import (
    DegreeOutOfRange,
    InsufficientCounts,
    MissingFactor,
    NoRationalFit,
    NonIntegralSolution,
)
from .series import PowerSeriesQ


def _normal(c):
    c = Fraction(c)
    return int(c) if c.denominator == 1 else c


@dataclass(frozen=True)
class RationalZeta:
    """num/den in lowest terms with num(0) = den(0) = 1."""

    num: tuple
    den: tuple

    @classmethod
    def make(cls, num, den) -> RationalZeta:
        num, den = qpoly.trim(num), qpoly.trim(den)
        if not num or not den:
            raise ValueError("numerator and denominator must be nonzero")
        g = qpoly.gcd(num, den)
        if len(g) > 1:
            num, den = qpoly.exact_div(num, g), qpoly.exact_div(den, g)
        if num[0] == 0 or den[0] == 0:
            raise ValueError("zeta functions have a nonzero value at T = 0")
        n0, d0 = Fraction(num[0]), Fraction(den[0])
        return cls(tuple(_normal(c / n0) for c in num), tuple(_normal(c / d0) for c in den))

    @property
    def num_degree(self) -> int:
        return len(self.num) - 1

    @property
    def den_degree(self) -> int:
        return len(self.den) - 1

    def series(self, order: int) -> PowerSeriesQ:
        """Taylor expansion up to and including T^order."""
        n = order + 1
        return PowerSeriesQ.from_poly(self.num, n) * PowerSeriesQ.from_poly(self.den, n).inverse()

    def to_json(self) -> dict:
        return {"num": [_jsonable(c) for c in self.num], "den": [_jsonable(c) for c in self.den]}


def _jsonable(c):
    c = Fraction(c)
    return int(c) if c.denominator == 1 else str(c)


# counts <-> series ----------------------------------------------------------

def zeta_series_from_counts(series, order: int) -> PowerSeriesQ:
    """exp(sum_{n <= order} N_n T^n / n), coefficients of T^0..T^order."""
    counts = series.counts if isinstance(series, CountSeries) else tuple(series)
    if order > len(counts):
        raise InsufficientCounts(f"order {order} needs {order} counts, have {len(counts)}")
    log = PowerSeriesQ((0,) + tuple(Fraction(counts[n - 1], n) for n in range(1, order + 1)))
    return log.exp()


def newton_power_sums(poly, k: int) -> list:
    """s_1..s_k where poly = prod(1 - a_i T) and s_n = sum a_i^n."""
    c = list(poly)
    if not c or c[0] != 1:
        raise ValueError("polynomial must have constant term 1")
    s = []
    for n in range(1, k + 1):
        cn = c[n] if n < len(c) else 0
        v = -n * cn - sum((c[i] if i < len(c) else 0) * s[n - i - 1] for i in range(1, n))
        s.append(_normal(v))
    return s


def poly_from_power_sums(sums, degree: int) -> list:
    """Inverse of newton_power_sums: the degree-bounded prod(1 - a_i T)."""
    c = [Fraction(1)]
    for n in range(1, degree + 1):
        v = -(Fraction(sums[n - 1]) + sum(c[i] * sums[n - i - 1] for i in range(1, n))) / n
        c.append(v)
    return [_normal(x) for x in qpoly.trim(c)]


def counts_from_zeta(Z: RationalZeta, k: int) -> tuple:
    """N_1..N_k predicted by Z, via power sums of the inverse roots."""
    den = newton_power_sums(Z.den, k)
    num = newton_power_sums(Z.num, k)
    return tuple(_normal(a - b) for a, b in zip(den, num))


# reconstruction -------------------------------------------------------------

def _solve(rows: list[list[Fraction]], rhs: list[Fraction]) -> list[Fraction] | None:
    """Exact solution of an (over)determined system, or None if inconsistent.

    Free variables are set to zero.
    """
    nvars = len(rows[0]) if rows else 0
    aug = [list(map(Fraction, r)) + [Fraction(b)] for r, b in zip(rows, rhs)]
    pivots = []
    row = 0
    for col in range(nvars):
        piv = next((i for i in range(row, len(aug)) if aug[i][col] != 0), None)
        if piv is None:
            continue
        aug[row], aug[piv] = aug[piv], aug[row]
        lead = aug[row][col]
        aug[row] = [x / lead for x in aug[row]]
        for i in range(len(aug)):
            if i != row and aug[i][col] != 0:
                f = aug[i][col]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[row])]
        pivots.append(col)
        row += 1
    if any(all(x == 0 for x in r[:-1]) and r[-1] != 0 for r in aug):
        return None
    sol = [Fraction(0)] * nvars
    for i, col in enumerate(pivots):
        sol[col] = aug[i][-1]
    return sol


def reconstruct_rational(series, max_num_deg: int, max_den_deg: int) -> RationalZeta:
    """Smallest num/den reproducing every given count.

    A denominator of degree e is a linear recurrence z_n + d_1 z_{n-1} + ...
    + d_e z_{n-e} = 0 on the zeta coefficients for all n past the numerator
    degree.  Candidates are tried by denominator degree, then numerator
    degree, and accepted only if they reproduce the whole input.
    """
    counts = series.counts if isinstance(series, CountSeries) else tuple(series)
    k = len(counts)
    if k < max_num_deg + max_den_deg + 2:
        raise InsufficientCounts(
            f"caps ({max_num_deg}, {max_den_deg}) need {max_num_deg + max_den_deg + 2} counts, have {k}")
    z = zeta_series_from_counts(counts, k).coeffs

    def zc(i):
        return z[i] if i >= 0 else Fraction(0)

    for e in range(max_den_deg + 1):
        for a in range(max_num_deg + 1):
            rows = [[zc(n - j) for j in range(1, e + 1)] for n in range(a + 1, k + 1)]
            rhs = [-z[n] for n in range(a + 1, k + 1)]
            d = _solve(rows, rhs) if e else ([] if all(x == 0 for x in rhs) else None)
            if d is None:
                continue
            den = [Fraction(1)] + d
            num = qpoly.mul(den, z[: a + 1])[: a + 1]
            try:
                Z = RationalZeta.make(num, den)
            except ValueError:
                continue
            if counts_from_zeta(Z, k) == tuple(counts):
                return Z
    raise NoRationalFit(f"no rational function with degrees <= ({max_num_deg}, {max_den_deg}) fits {list(counts)}")


# curves and abelian varieties ------------------------------------------------

def curve_numerator_from_counts(g: int, q: int, counts) -> list[int]:
    """P(T) of degree 2g for a genus-g curve from N_1..N_g.

    Extra counts beyond N_g are not needed; when given they are checked
    against the prediction.
    """
    counts = list(counts.counts if isinstance(counts, CountSeries) else counts)
    if g < 0:
        raise ValueError("genus is nonnegative")
    if len(counts) < g:
        raise InsufficientCounts(f"genus {g} needs {g} counts, have {len(counts)}")
    if g == 0:
        P = [1]
    else:
        s = [1 + q**n - counts[n - 1] for n in range(1, g + 1)]
        c = [Fraction(1)]
        for n in range(1, g + 1):
            c.append(-(Fraction(s[n - 1]) + sum(c[i] * s[n - i - 1] for i in range(1, n))) / n)
        if any(x.denominator != 1 for x in c):
            raise NonIntegralSolution(f"counts {counts[:g]} give non-integral coefficients {c}")
        low = [int(x) for x in c]
        P = low + [q ** (i - g) * low[2 * g - i] for i in range(g + 1, 2 * g + 1)]
    if len(counts) > g:
        Z = RationalZeta.make(P, [1, -(1 + q), q])
        if counts_from_zeta(Z, len(counts)) != tuple(counts):
            raise NonIntegralSolution(f"counts beyond N_{g} disagree with the functional equation")
    return P


def abelian_exterior_factor(P1, r: int) -> list[int]:
    """prod(1 - a T) over all r-fold products a of inverse roots of P1.

    Power sums of the products come from elementary symmetric functions of
    the a_i^n; those come from the power sums of P1 itself.
    """
    P1 = qpoly.trim(P1)
    if not P1 or P1[0] != 1:
        raise ValueError("P1 must have constant term 1")
    nroots = len(P1) - 1
    if not 0 <= r <= nroots:
        raise DegreeOutOfRange(f"r = {r} outside [0, {nroots}]")
    B = comb(nroots, r)
    s = newton_power_sums(P1, r * B)
    sums = []
    for n in range(1, B + 1):
        t = [s[n * i - 1] for i in range(1, r + 1)]
        e = [Fraction(1)]
        for j in range(1, r + 1):
            e.append(sum((-1) ** (i - 1) * e[j - i] * t[i - 1] for i in range(1, j + 1)) / j)
        sums.append(e[r])
    out = poly_from_power_sums(sums, B)
    out += [0] * (B + 1 - len(out))
    return out


def _charpoly(M: list[list[int]]) -> list[int]:
    """det(x I - M), lowest degree first, by Faddeev-LeVerrier."""
    n = len(M)
    coeffs = [0] * (n + 1)
    coeffs[n] = 1
    A = [row[:] for row in M]
    for k in range(1, n + 1):
        if k > 1:
            # A <- M (A + c_{n-k+1} I)
            c = coeffs[n - k + 1]
            B = [[A[i][j] + (c if i == j else 0) for j in range(n)] for i in range(n)]
            A = [[sum(M[i][t] * B[t][j] for t in range(n)) for j in range(n)] for i in range(n)]
        tr = sum(A[i][i] for i in range(n))
        coeffs[n - k] = Fraction(-tr, k)
        if coeffs[n - k].denominator != 1:
            raise ArithmeticError("non-integral LeVerrier step")
        coeffs[n - k] = int(coeffs[n - k])
    return coeffs


def _det(M) -> Fraction:
    n = len(M)
    A = [[Fraction(x) for x in row] for row in M]
    det = Fraction(1)
    for c in range(n):
        piv = next((i for i in range(c, n) if A[i][c] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != c:
            A[c], A[piv] = A[piv], A[c]
            det = -det
        det *= A[c][c]
        for i in range(c + 1, n):
            f = A[i][c] / A[c][c]
            A[i] = [x - f * y for x, y in zip(A[i], A[c])]
    return det


def exterior_factor_via_compound(P1, r: int) -> list[int]:
    """Same polynomial as abelian_exterior_factor, via the r-th compound
    matrix of the companion matrix of the reciprocal of P1.
    """
    P1 = qpoly.trim(P1)
    n = len(P1) - 1
    if not 0 <= r <= n:
        raise DegreeOutOfRange(f"r = {r} outside [0, {n}]")
    f = qpoly.reverse(P1)  # monic, roots a_i
    C = [[0] * n for _ in range(n)]
    for i in range(1, n):
        C[i][i - 1] = 1
    for i in range(n):
        C[i][n - 1] = -f[i]
    subsets = list(combinations(range(n), r))
    if r == 0:
        comp = [[1]]
    else:
        comp = [[int(_det([[C[i][j] for j in cols] for i in rows])) for cols in subsets] for rows in subsets]
    return qpoly.reverse(_charpoly(comp))


@dataclass(frozen=True)
class WeilFactorization:
    """Weight-graded factors P_0..P_2d of a zeta function."""

    d: int
    q: int
    factors: tuple  # ((r, P_r), ...)

    def __post_init__(self):
        fs = tuple(sorted((int(r), tuple(P)) for r, P in dict(self.factors).items()))
        object.__setattr__(self, "factors", fs)
        for r, P in fs:
            if not P or P[0] != 1:
                raise ValueError(f"P_{r}(0) must be 1")

    def factor(self, r: int) -> tuple:
        return dict(self.factors)[r]

    @property
    def betti(self) -> list[int]:
        return [len(P) - 1 for _, P in self.factors]

    @classmethod
    def for_curve(cls, P1, q: int) -> WeilFactorization:
        return cls(1, q, ((0, (1, -1)), (1, tuple(P1)), (2, (1, -q))))

    @classmethod
    def for_abelian(cls, P1, q: int) -> WeilFactorization:
        g2 = len(qpoly.trim(P1)) - 1
        return cls(g2 // 2, q, tuple((r, tuple(abelian_exterior_factor(P1, r))) for r in range(g2 + 1)))


def assemble_alternating_product(factors: WeilFactorization) -> RationalZeta:
    """prod_{r odd} P_r / prod_{r even} P_r in lowest terms."""
    have = dict(factors.factors)
    missing = [r for r in range(2 * factors.d + 1) if r not in have]
    if missing:
        raise MissingFactor(f"no P_r for r in {missing}")
    num = qpoly.prod(list(have[r]) for r in range(1, 2 * factors.d + 1, 2))
    den = qpoly.prod(list(have[r]) for r in range(0, 2 * factors.d + 1, 2))
    return RationalZeta.make(num, den)


def diagonal_middle_degree(m: int, r: int) -> int:
    """#{(a_0..a_r) in {1..m-1}^(r+1) : a_0 + ... + a_r = 0 mod m}."""
    if m < 1 or r < 1:
        raise ValueError("need m >= 1 and r >= 1")
    return sum(1 for a in product(range(1, m), repeat=r + 1) if sum(a) % m == 0)
