"""Dense polynomials over GF(p) as coefficient lists, lowest degree first.

The zero polynomial is ``[]``; otherwise the last entry is nonzero.
Only what field construction needs is here: products, remainders, gcds,
modular powers and an irreducibility test.
"""


def trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def sub(a: list[int], b: list[int], p: int) -> list[int]:
    n = max(len(a), len(b))
    out = [((a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0)) % p for i in range(n)]
    return trim(out)


def mul(a: list[int], b: list[int], p: int) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return trim([c % p for c in out])


def divmod_(a: list[int], b: list[int], p: int) -> tuple[list[int], list[int]]:
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    r = list(a)
    trim(r)
    inv_lead = pow(b[-1], -1, p)
    q = [0] * max(len(r) - len(b) + 1, 0)
    while len(r) >= len(b):
        shift = len(r) - len(b)
        c = r[-1] * inv_lead % p
        q[shift] = c
        for i, y in enumerate(b):
            r[shift + i] = (r[shift + i] - c * y) % p
        trim(r)
    return trim(q), r


def mod(a: list[int], b: list[int], p: int) -> list[int]:
    return divmod_(a, b, p)[1]


def gcd(a: list[int], b: list[int], p: int) -> list[int]:
    a, b = trim(list(a)), trim(list(b))
    while b:
        a, b = b, mod(a, b, p)
    if a:
        inv = pow(a[-1], -1, p)
        a = [c * inv % p for c in a]
    return a


def powmod(a: list[int], e: int, m: list[int], p: int) -> list[int]:
    result = [1]
    base = mod(a, m, p)
    while e:
        if e & 1:
            result = mod(mul(result, base, p), m, p)
        base = mod(mul(base, base, p), m, p)
        e >>= 1
    return result


def is_irreducible(f: list[int], p: int) -> bool:
    """Ben-Or test: f of degree n is irreducible iff gcd(x^(p^i) - x, f) = 1 for i <= n/2."""
    f = trim(list(f))
    n = len(f) - 1
    if n < 1:
        return False
    if n == 1:
        return True
    x = [0, 1]
    h = x
    for _ in range(n // 2):
        h = powmod(h, p, f, p)
        if len(gcd(sub(h, x, p), f, p)) > 1:
            return False
    return True


def from_index(index: int, p: int, n: int) -> list[int]:
    """Digits of ``index`` in base p, as a length-n coefficient vector."""
    out = []
    for _ in range(n):
        index, c = divmod(index, p)
        out.append(c)
    return out


def to_index(coeffs, p: int) -> int:
    v = 0
    for c in reversed(list(coeffs)):
        v = v * p + c
    return v
