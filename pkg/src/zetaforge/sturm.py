"""Real root counting with Sturm sequences, in exact rational arithmetic."""

from __future__ import annotations

from fractions import Fraction

from . import qpoly

INF = "inf"
NEG_INF = "-inf"


def squarefree(p) -> list:
    p = qpoly.trim(p)
    if len(p) <= 2:
        return p
    g = qpoly.gcd(p, qpoly.derivative(p))
    return p if len(g) <= 1 else qpoly.exact_div(p, g)


def sturm_sequence(p) -> list[list]:
    p = [Fraction(c) for c in qpoly.trim(p)]
    seq = [p, qpoly.derivative(p)]
    while qpoly.trim(seq[-1]):
        r = qpoly.divmod_(seq[-2], seq[-1])[1]
        if not r:
            break
        seq.append([-c for c in r])
    return [s for s in seq if s]


def _sign_at(f, x) -> int:
    if x == INF:
        v = f[-1]
    elif x == NEG_INF:
        v = f[-1] * (-1) ** (len(f) - 1)
    else:
        v = qpoly.evaluate(f, x)
    return (v > 0) - (v < 0)


def sign_changes(seq, x) -> int:
    signs = [s for s in (_sign_at(f, x) for f in seq) if s]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def count_real_roots(p, lo=NEG_INF, hi=INF) -> int:
    """Distinct real roots of p in the half-open interval (lo, hi]."""
    p = squarefree(p)
    if len(p) <= 1:
        return 0
    seq = sturm_sequence(p)
    return sign_changes(seq, lo) - sign_changes(seq, hi)
