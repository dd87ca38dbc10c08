"""Verdicts for rationality, functional equation, integrality, Riemann
hypothesis and Betti numbers of computed zeta functions."""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from math import isqrt

from . import qpoly
from .counting import CountSeries
from .errors import NotMonic, ZeroRoot
from .sturm import count_real_roots, squarefree
from .zeta import RationalZeta, WeilFactorization, _jsonable, counts_from_zeta

EXACT = "exact-sturm"
NUMERIC = "numeric-certified"
NUMERIC_TOL = 1e-9


# functional equation ---------------------------------------------------------

@dataclass(frozen=True)
class FunctionalEquation:
    holds: bool
    sign: int
    chi: int
    residual: tuple = ()


def _dual(poly, Q) -> list:
    """T^deg poly(1/(Q T))."""
    deg = len(poly) - 1
    return [Fraction(c) / Fraction(Q) ** i for i, c in enumerate(poly)][::-1] if deg >= 0 else []


def check_functional_equation(Z: RationalZeta, d: int, q: int) -> FunctionalEquation:
    """Test Z(1/(q^d T)) = sign * q^(d chi/2) * T^chi * Z(T) exactly.

    chi = deg(den) - deg(num) is forced by the T-adic order of both sides;
    the constant sign * q^(d chi/2) is read off and then checked.
    """
    chi = Z.den_degree - Z.num_degree
    Q = q**d
    lhs = qpoly.mul(_dual(Z.num, Q), Z.den)
    rhs = qpoly.mul(Z.num, _dual(Z.den, Q))
    j = next(i for i, c in enumerate(rhs) if c != 0)
    lam = Fraction(lhs[j]) / Fraction(rhs[j]) if j < len(lhs) else Fraction(0)
    residual = tuple(_jsonable(c) for c in qpoly.sub(lhs, qpoly.scale(rhs, lam)))
    if residual or lam == 0:
        return FunctionalEquation(False, 0, chi, residual or ("no proportionality",))
    target = Fraction(Q) ** chi
    if lam * lam != target:
        return FunctionalEquation(False, 1 if lam > 0 else -1, chi, (f"constant {lam} is not +-q^(d*chi/2)",))
    return FunctionalEquation(True, 1 if lam > 0 else -1, chi)


def check_integrality(Z: RationalZeta) -> bool:
    return (qpoly.is_integral(Z.num) and qpoly.is_integral(Z.den)
            and Z.num[0] == 1 and Z.den[0] == 1)


# Riemann hypothesis -----------------------------------------------------------

@dataclass(frozen=True)
class RHVerdict:
    holds: bool
    weight: int
    method: str
    witness: dict = dc_field(default_factory=dict)


def _rational_sqrt(x: Fraction) -> Fraction | None:
    x = Fraction(x)
    if x < 0:
        return None
    n, d = isqrt(x.numerator), isqrt(x.denominator)
    if n * n == x.numerator and d * d == x.denominator:
        return Fraction(n, d)
    return None


def _chebyshev_like(g: int, Q) -> list[list]:
    """D_t(y) = x^t + (Q/x)^t written in y = x + Q/x, for t = 0..g."""
    D = [[2], [0, 1]]
    for _ in range(2, g + 1):
        D.append(qpoly.sub(qpoly.mul([0, 1], D[-1]), qpoly.scale(D[-2], Q)))
    return D[: g + 1]


def real_weil_polynomial(f, Q) -> list | None:
    """h with f(x) = x^g h(x + Q/x), or None if f is not Q-self-dual.

    f is given lowest degree first and has even degree 2g.
    """
    f = qpoly.trim(f)
    deg = len(f) - 1
    if deg % 2:
        return None
    g = deg // 2
    for t in range(g + 1):
        if Fraction(f[g - t]) != Fraction(Q) ** t * f[g + t]:
            return None
    D = _chebyshev_like(g, Q)
    h = [f[g]]
    for t in range(1, g + 1):
        h = qpoly.add(h, qpoly.scale(D[t], f[g + t]))
    return h


def _squares_poly(h) -> list:
    """H(u) whose roots are the squares of the roots of h."""
    even = h[0::2]
    odd = h[1::2]
    return qpoly.sub(qpoly.mul(even, even), [0] + qpoly.mul(odd, odd))


def _modulus_test(f, Q) -> tuple[bool, dict]:
    """Do all roots alpha of f satisfy alpha * conj(alpha) = Q?"""
    f = [Fraction(c) for c in qpoly.trim(f)]
    witness: dict = {"peeled": []}
    if f and f[0] == 0:
        return False, {"reason": "zero root"}
    while True:
        rest = qpoly.exact_div(f, [-Q, 0, 1])
        if rest is None:
            break
        f = rest
        witness["peeled"].append("x^2-Q")
    s = _rational_sqrt(Fraction(Q))
    if s is not None:
        for lin, tag in (([-s, 1], "x-sqrtQ"), ([s, 1], "x+sqrtQ")):
            while len(f) > 1:
                rest = qpoly.exact_div(f, lin)
                if rest is None:
                    break
                f = rest
                witness["peeled"].append(tag)
    if len(f) <= 1:
        return True, witness
    h = real_weil_polynomial(f, Q)
    if h is None:
        witness["reason"] = "not self-dual"
        witness["remaining"] = [_jsonable(c) for c in f]
        return False, witness
    witness["real_weil_polynomial"] = [_jsonable(c) for c in h]
    hs = squarefree(h)
    real = count_real_roots(hs)
    witness["distinct_roots"] = len(hs) - 1
    witness["real_roots"] = real
    if real != len(hs) - 1:
        witness["reason"] = "real Weil polynomial has non-real roots"
        return False, witness
    H = _squares_poly(h)
    outside = count_real_roots(H, 4 * Fraction(Q))
    witness["roots_beyond_4Q"] = outside
    if outside:
        witness["reason"] = "a root of the real Weil polynomial exceeds 2 sqrt(Q) in absolute value"
        return False, witness
    return True, witness


def _numeric_test(f, Q) -> tuple[bool, dict]:
    import mpmath

    f = qpoly.trim(f)
    target = mpmath.sqrt(mpmath.mpf(Q))
    with mpmath.workdps(50):
        roots, err = mpmath.polyroots([mpmath.mpf(Fraction(c).numerator) / Fraction(c).denominator
                                       for c in reversed(f)], maxsteps=200, extraprec=200, error=True)
        worst = max((abs(abs(z) - target) / target for z in roots), default=mpmath.mpf(0))
    holds = worst <= NUMERIC_TOL
    return bool(holds), {"max_relative_deviation": float(worst), "error_radius": float(err),
                         "tolerance": NUMERIC_TOL}


def check_riemann_hypothesis(P, r: int, q: int, method: str = EXACT) -> RHVerdict:
    """Do all inverse roots of P have absolute value q^(r/2)?

    The exact route pairs each inverse root a with q^r / a, maps the pair to
    a + q^r/a and asks, by Sturm counting, that these all be real and at most
    2 q^(r/2) in absolute value.  The comparison is done on squares, so it
    stays exact whether or not q^(r/2) is rational.
    """
    P = qpoly.trim(P)
    if not P or P[0] != 1:
        raise ValueError("P must have constant term 1")
    f = qpoly.reverse(P)
    Q = q**r
    if len(f) <= 1:
        return RHVerdict(True, r, method, {"degree": 0})
    if method == EXACT:
        holds, witness = _modulus_test(f, Q)
    elif method == NUMERIC:
        holds, witness = _numeric_test(f, Q)
    else:
        raise ValueError(f"unknown method {method!r}")
    return RHVerdict(holds, r, method, witness)


def check_point_bounds(series, g: int, q: int | None = None) -> bool:
    """(N_n - q^n - 1)^2 <= 4 g^2 q^n for every n given."""
    if isinstance(series, CountSeries):
        q = series.q if q is None else q
        counts = series.counts
    else:
        counts = tuple(series)
    return all((N - q**n - 1) ** 2 <= 4 * g * g * q**n for n, N in enumerate(counts, start=1))


@dataclass(frozen=True)
class WeilNumberVerdict:
    polynomial: tuple
    q: int
    is_weil: bool
    witness: dict


def classify_weil_number(f, q: int) -> WeilNumberVerdict:
    """Are all roots of the monic integer polynomial f of modulus sqrt(q)?

    f is given lowest degree first.
    """
    f = qpoly.trim([int(c) for c in f])
    if not f or f[-1] != 1:
        raise NotMonic(f"leading coefficient of {f} is not 1")
    if f[0] == 0:
        raise ZeroRoot("0 is a root, so it is not a Weil number")
    verdict = check_riemann_hypothesis(qpoly.reverse(f), 1, q)
    return WeilNumberVerdict(tuple(f), q, verdict.holds, verdict.witness)


# Betti numbers and the full report ----------------------------------------------

def betti_profile(factors: WeilFactorization, expected=None) -> dict:
    B = factors.betti
    out = {"B": B}
    if expected is not None:
        expected = list(expected)
        out["expected"] = expected
        out["matches"] = [b == e for b, e in zip(B, expected)] if len(B) == len(expected) else []
        out["holds"] = B == expected
    return out


def weight_factorization(Z: RationalZeta, d: int, q: int) -> tuple[WeilFactorization | None, dict]:
    """Split Z into weight-graded factors P_0..P_2d.

    Curves of the standard shape are split directly.  Otherwise every
    irreducible factor over Z is given the weight r whose modulus q^(r/2) it
    satisfies; odd weights must sit in the numerator, even weights in the
    denominator.
    """
    evidence: dict = {}
    if d == 1 and list(Z.den) == [1, -(1 + q), q]:
        evidence["method"] = "curve shape"
        return WeilFactorization.for_curve(Z.num, q), evidence
    if not check_integrality(Z):
        evidence["reason"] = "non-integral zeta"
        return None, evidence
    import sympy

    T = sympy.Symbol("T")
    groups = {r: [1] for r in range(2 * d + 1)}
    unassigned = []
    for side, poly, parity in (("num", Z.num, 1), ("den", Z.den, 0)):
        _, parts = sympy.factor_list(sympy.Poly(list(reversed(poly)), T))
        for fac, mult in parts:
            coeffs = [int(c) for c in reversed(fac.all_coeffs())]
            if coeffs[0] < 0:
                coeffs = [-c for c in coeffs]
            if coeffs[0] != 1:
                unassigned.append({"side": side, "factor": coeffs, "reason": "constant term not 1"})
                continue
            for r in range(parity, 2 * d + 1, 2):
                if check_riemann_hypothesis(coeffs, r, q).holds:
                    groups[r] = qpoly.mul(groups[r], qpoly.power(coeffs, mult))
                    break
            else:
                unassigned.append({"side": side, "factor": coeffs, "multiplicity": int(mult),
                                   "reason": "no weight of matching parity fits"})
    evidence["method"] = "irreducible factors"
    if unassigned:
        evidence["unassigned"] = unassigned
        return None, evidence
    return WeilFactorization(d, q, tuple((r, tuple(P)) for r, P in groups.items())), evidence


@dataclass
class WeilReport:
    w1_rational: dict
    w2_functional: dict
    w3_integral: dict
    w4_rh: dict
    w5_betti: dict
    evidence: dict

    @property
    def failed(self) -> list[str]:
        out = []
        for name in ("w1_rational", "w2_functional", "w3_integral", "w4_rh"):
            if not getattr(self, name)["holds"]:
                out.append(name)
        return out

    def to_json(self) -> dict:
        return {
            "w1_rational": self.w1_rational,
            "w2_functional": self.w2_functional,
            "w3_integral": self.w3_integral,
            "w4_rh": self.w4_rh,
            "w5_betti": self.w5_betti,
            "evidence": self.evidence,
        }


def weil_report(Z: RationalZeta, d: int, q: int, counts=None, fit: dict | None = None,
                expected_betti=None) -> WeilReport:
    """Run W1-W5 on Z; ``counts`` (if given) are the observed N_n."""
    evidence: dict = {"fit": fit or {}}
    if counts is not None:
        counts = list(counts.counts if isinstance(counts, CountSeries) else counts)
        predicted = list(counts_from_zeta(Z, len(counts)))
        evidence["counts"] = counts
        evidence["predicted"] = [_jsonable(c) for c in predicted]
        w1_ok = predicted == counts
    else:
        w1_ok = True
    w1 = {"holds": w1_ok, "num_degree": Z.num_degree, "den_degree": Z.den_degree}

    fe = check_functional_equation(Z, d, q)
    w2 = {"holds": fe.holds, "sign": fe.sign, "chi": fe.chi}
    if fe.residual:
        w2["residual"] = list(fe.residual)

    w3 = {"holds": check_integrality(Z)}

    factors, fac_evidence = weight_factorization(Z, d, q)
    evidence["factorization"] = fac_evidence
    if factors is None:
        w4 = {"holds": False, "factors": []}
        w5 = {"B": None}
    else:
        per = []
        for r, P in factors.factors:
            v = check_riemann_hypothesis(P, r, q)
            per.append({"r": r, "P": list(P), "holds": v.holds, "method": v.method, "witness": v.witness})
        w4 = {"holds": all(x["holds"] for x in per), "factors": per}
        w5 = betti_profile(factors, expected_betti)
    return WeilReport(w1, w2, w3, w4, w5, evidence)
