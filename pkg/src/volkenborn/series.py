"""Truncated formal power series with exact rational coefficients.

A ``PowerSeries`` of order T knows its coefficients of t^0 .. t^(T-1)
exactly and nothing beyond.  Binary operations truncate to the smaller
operand order; composition f(g(t)) requires g to have zero constant term
and also truncates to the smaller order.  The truncation order is always
an explicit argument of the constructors, never an ambient default.
"""
from __future__ import annotations

from fractions import Fraction
from math import factorial
from typing import Iterable, Union

__all__ = ["PowerSeries"]

Scalar = Union[Fraction, int]


class PowerSeries:
    """Formal power series modulo t**order."""

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Iterable[Scalar], order: int | None = None) -> None:
        cs = [c if isinstance(c, Fraction) else Fraction(c) for c in coeffs]
        if order is None:
            order = len(cs)
        if order < 1:
            raise ValueError("order must be >= 1")
        if len(cs) < order:
            cs.extend([Fraction(0)] * (order - len(cs)))
        self._coeffs = tuple(cs[:order])

    @property
    def order(self) -> int:
        return len(self._coeffs)

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return self._coeffs

    def coeff(self, n: int) -> Fraction:
        """Coefficient of t**n.  Indices at or beyond the order are unknown."""
        if n < 0:
            raise ValueError("n must be >= 0")
        if n >= self.order:
            raise ValueError(f"coefficient {n} is beyond truncation order {self.order}")
        return self._coeffs[n]

    def egf_coeff(self, n: int) -> Fraction:
        """n! times the coefficient of t**n (exponential generating function reading)."""
        return self.coeff(n) * factorial(n)

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls, order: int) -> "PowerSeries":
        return cls([], order)

    @classmethod
    def one(cls, order: int) -> "PowerSeries":
        return cls([Fraction(1)], order)

    @classmethod
    def identity(cls, order: int) -> "PowerSeries":
        """The series t."""
        return cls([Fraction(0), Fraction(1)], order)

    @classmethod
    def exp(cls, order: int) -> "PowerSeries":
        """exp(t) = sum t^n / n!."""
        return cls([Fraction(1, factorial(n)) for n in range(order)], order)

    @classmethod
    def log1p(cls, order: int) -> "PowerSeries":
        """log(1 + t) = sum_{n>=1} (-1)^(n+1) t^n / n."""
        cs = [Fraction(0)]
        for n in range(1, order):
            cs.append(Fraction((-1) ** (n + 1), n))
        return cls(cs, order)

    @classmethod
    def geometric(cls, order: int) -> "PowerSeries":
        """t / (1 - t) = t + t^2 + t^3 + ..."""
        return cls([Fraction(0)] + [Fraction(1)] * (order - 1), order)

    # -- arithmetic ----------------------------------------------------

    def _binop_order(self, other: "PowerSeries") -> int:
        return min(self.order, other.order)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, PowerSeries):
            return self._coeffs == other._coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._coeffs)

    def __repr__(self) -> str:
        head = ", ".join(str(c) for c in self._coeffs[:6])
        tail = ", ..." if self.order > 6 else ""
        return f"PowerSeries([{head}{tail}], order={self.order})"

    def __add__(self, other: "PowerSeries") -> "PowerSeries":
        if not isinstance(other, PowerSeries):
            return NotImplemented
        t = self._binop_order(other)
        return PowerSeries([self._coeffs[i] + other._coeffs[i] for i in range(t)], t)

    def __neg__(self) -> "PowerSeries":
        return PowerSeries([-c for c in self._coeffs], self.order)

    def __sub__(self, other: "PowerSeries") -> "PowerSeries":
        if not isinstance(other, PowerSeries):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other: Union["PowerSeries", Scalar]) -> "PowerSeries":
        if isinstance(other, (Fraction, int)):
            s = Fraction(other)
            return PowerSeries([c * s for c in self._coeffs], self.order)
        if not isinstance(other, PowerSeries):
            return NotImplemented
        t = self._binop_order(other)
        out = [Fraction(0)] * t
        for i, a in enumerate(self._coeffs[:t]):
            if a == 0:
                continue
            for j in range(t - i):
                b = other._coeffs[j]
                if b:
                    out[i + j] += a * b
        return PowerSeries(out, t)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "PowerSeries":
        """k-th power by binary powering, k >= 0."""
        if k < 0:
            raise ValueError("exponent must be >= 0")
        result = PowerSeries.one(self.order)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def inverse(self) -> "PowerSeries":
        """Multiplicative inverse; requires a nonzero constant term.

        b_0 = 1/a_0 and b_m = -(1/a_0) sum_{k=1..m} a_k b_{m-k}.
        """
        a0 = self._coeffs[0]
        if a0 == 0:
            raise ValueError("series with zero constant term has no inverse")
        t = self.order
        out = [Fraction(0)] * t
        out[0] = 1 / a0
        for m in range(1, t):
            s = Fraction(0)
            for k in range(1, m + 1):
                if self._coeffs[k]:
                    s += self._coeffs[k] * out[m - k]
            out[m] = -s / a0
        return PowerSeries(out, t)

    def __truediv__(self, other: "PowerSeries") -> "PowerSeries":
        if not isinstance(other, PowerSeries):
            return NotImplemented
        return self * other.inverse()

    def compose(self, inner: "PowerSeries") -> "PowerSeries":
        """f(g(t)) for g with zero constant term, truncated to min order."""
        if not isinstance(inner, PowerSeries):
            raise TypeError("inner must be a PowerSeries")
        if inner._coeffs[0] != 0:
            raise ValueError("composition requires inner series with zero constant term")
        t = self._binop_order(inner)
        g = PowerSeries(inner._coeffs[:t], t)
        acc = PowerSeries.zero(t)
        for c in reversed(self._coeffs[:t]):
            acc = acc * g + PowerSeries([c], t)
        return acc
