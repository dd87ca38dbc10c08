"""Polynomials over Q as coefficient lists (lowest degree first).

Entries are ints or Fractions; the zero polynomial is ``[]``.
"""

from __future__ import annotations

from fractions import Fraction


def trim(a) -> list:
    a = list(a)
    while a and a[-1] == 0:
        a.pop()
    return a


def degree(a) -> int:
    a = trim(a)
    return len(a) - 1 if a else -1


def add(a, b) -> list:
    n = max(len(a), len(b))
    return trim([(a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)])


def sub(a, b) -> list:
    return add(a, [-c for c in b])


def scale(a, c) -> list:
    return trim([c * x for x in a])


def mul(a, b) -> list:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return trim(out)


def prod(polys) -> list:
    out = [1]
    for f in polys:
        out = mul(out, f)
    return out


def power(a, e: int) -> list:
    out = [1]
    for _ in range(e):
        out = mul(out, a)
    return out


def divmod_(a, b) -> tuple[list, list]:
    b = trim(b)
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    r = [Fraction(c) for c in trim(a)]
    lead = Fraction(b[-1])
    q = [Fraction(0)] * max(len(r) - len(b) + 1, 0)
    while len(r) >= len(b) and r:
        shift = len(r) - len(b)
        c = r[-1] / lead
        q[shift] = c
        for i, y in enumerate(b):
            r[shift + i] -= c * y
        r = trim(r)
    return trim(q), r


def exact_div(a, b) -> list | None:
    """a / b if b divides a, else None."""
    q, r = divmod_(a, b)
    return q if not r else None


def gcd(a, b) -> list:
    """Monic gcd over Q."""
    a, b = trim(a), trim(b)
    while b:
        a, b = b, divmod_(a, b)[1]
    if not a:
        return []
    lead = Fraction(a[-1])
    return [Fraction(c) / lead for c in a]


def derivative(a) -> list:
    return trim([i * c for i, c in enumerate(a)][1:])


def evaluate(a, x):
    acc = 0
    for c in reversed(a):
        acc = acc * x + c
    return acc


def reverse(a, deg: int | None = None) -> list:
    """x^deg a(1/x)."""
    a = trim(a)
    deg = len(a) - 1 if deg is None else deg
    out = [0] * (deg + 1)
    for i, c in enumerate(a):
        out[deg - i] = c
    return out


def substitute_scale(a, s) -> list:
    """a(s T)."""
    return trim([c * s**i for i, c in enumerate(a)])


def as_int_if_integral(a) -> list:
    return [int(c) if Fraction(c).denominator == 1 else Fraction(c) for c in a]


def is_integral(a) -> bool:
    return all(Fraction(c).denominator == 1 for c in a)
