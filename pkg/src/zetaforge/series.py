"""Truncated power series over Q with exact exp and log."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction


@dataclass(frozen=True)
class PowerSeriesQ:
    """sum_{i < order} coeffs[i] T^i, known modulo T^order."""

    coeffs: tuple[Fraction, ...]

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(Fraction(c) for c in self.coeffs))

    @property
    def order(self) -> int:
        return len(self.coeffs)

    def _common(self, other: PowerSeriesQ) -> int:
        return min(self.order, other.order)

    def __add__(self, other):
        n = self._common(other)
        return PowerSeriesQ(tuple(a + b for a, b in zip(self.coeffs[:n], other.coeffs[:n])))

    def __sub__(self, other):
        n = self._common(other)
        return PowerSeriesQ(tuple(a - b for a, b in zip(self.coeffs[:n], other.coeffs[:n])))

    def __mul__(self, other):
        n = self._common(other)
        a, b = self.coeffs, other.coeffs
        return PowerSeriesQ(tuple(sum(a[i] * b[k - i] for i in range(k + 1)) for k in range(n)))

    def derivative(self) -> PowerSeriesQ:
        return PowerSeriesQ(tuple(i * c for i, c in enumerate(self.coeffs))[1:])

    def integral(self) -> PowerSeriesQ:
        """Antiderivative with zero constant term; gains one order."""
        return PowerSeriesQ((Fraction(0),) + tuple(c / (i + 1) for i, c in enumerate(self.coeffs)))

    def exp(self) -> PowerSeriesQ:
        """exp(f) for f(0) = 0, from E' = f' E."""
        if self.coeffs and self.coeffs[0] != 0:
            raise ValueError("exp needs a zero constant term")
        n = self.order
        df = [i * c for i, c in enumerate(self.coeffs)]
        e = [Fraction(1)] + [Fraction(0)] * (n - 1)
        for k in range(1, n):
            e[k] = sum(df[j] * e[k - j] for j in range(1, k + 1)) / k
        return PowerSeriesQ(tuple(e))

    def log(self) -> PowerSeriesQ:
        """log(f) for f(0) = 1, from L' = f'/f."""
        if not self.coeffs or self.coeffs[0] != 1:
            raise ValueError("log needs constant term 1")
        n = self.order
        f = self.coeffs
        # g = f'/f, then integrate
        g = [Fraction(0)] * (n - 1)
        for k in range(n - 1):
            g[k] = (k + 1) * f[k + 1] - sum(f[j] * g[k - j] for j in range(1, k + 1))
        return PowerSeriesQ((Fraction(0),) + tuple(c / (i + 1) for i, c in enumerate(g)))

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.coeffs)

    def as_ints(self) -> list[int]:
        if not self.is_integral():
            raise ValueError("series has non-integral coefficients")
        return [int(c) for c in self.coeffs]

    @classmethod
    def from_poly(cls, coeffs, order: int) -> PowerSeriesQ:
        c = list(coeffs)[:order]
        return cls(tuple(c) + (0,) * (order - len(c)))

    def inverse(self) -> PowerSeriesQ:
        if not self.coeffs or self.coeffs[0] == 0:
            raise ZeroDivisionError("series is not invertible")
        a = self.coeffs
        inv = [1 / a[0]]
        for k in range(1, self.order):
            inv.append(-sum(a[i] * inv[k - i] for i in range(1, k + 1)) / a[0])
        return PowerSeriesQ(tuple(inv))
