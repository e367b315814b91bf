"""Dense univariate polynomials over exact rationals.

A polynomial is stored as a tuple of ``Fraction`` coefficients, index i
holding the coefficient of x**i, with no trailing zeros (the zero
polynomial is the empty tuple).  Every operation is exact; nothing here
ever touches floating point.
"""
from __future__ import annotations

from fractions import Fraction
from math import comb, factorial
from typing import Iterable, Sequence, Union

__all__ = [
    "Polynomial",
    "binom_int",
    "binom_poly",
    "falling_poly",
    "rising_poly",
]

Scalar = Union[Fraction, int]


def binom_int(n: int, k: int) -> Fraction:
    """Binomial coefficient C(n, k) for n >= 0, as an exact rational.

    Returns 0 when k < 0 or k > n; negative n is rejected.
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    if k < 0 or k > n:
        return Fraction(0)
    return Fraction(comb(n, k))


def _as_fraction(x: Scalar) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    raise TypeError(f"expected an exact rational, got {type(x).__name__}")


class Polynomial:
    """Immutable dense polynomial with Fraction coefficients."""

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Iterable[Scalar] = ()) -> None:
        cs = [_as_fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self._coeffs = tuple(cs)

    @classmethod
    def zero(cls) -> "Polynomial":
        return cls(())

    @classmethod
    def one(cls) -> "Polynomial":
        return cls((Fraction(1),))

    @classmethod
    def x(cls) -> "Polynomial":
        return cls((Fraction(0), Fraction(1)))

    @classmethod
    def monomial(cls, power: int, coeff: Scalar = 1) -> "Polynomial":
        if power < 0:
            raise ValueError("power must be >= 0")
        return cls([Fraction(0)] * power + [_as_fraction(coeff)])

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return self._coeffs

    @property
    def degree(self) -> int:
        """Degree of the polynomial; -1 for the zero polynomial."""
        return len(self._coeffs) - 1

    def coeff(self, i: int) -> Fraction:
        if 0 <= i < len(self._coeffs):
            return self._coeffs[i]
        return Fraction(0)

    def is_zero(self) -> bool:
        return not self._coeffs

    def __iter__(self):
        return iter(self._coeffs)

    def __len__(self) -> int:
        return len(self._coeffs)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Polynomial):
            return self._coeffs == other._coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._coeffs)

    def __repr__(self) -> str:
        if not self._coeffs:
            return "Polynomial([0])"
        return f"Polynomial([{', '.join(str(c) for c in self._coeffs)}])"

    def __add__(self, other: "Polynomial") -> "Polynomial":
        if not isinstance(other, Polynomial):
            return NotImplemented
        a, b = self._coeffs, other._coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Polynomial(out)

    def __neg__(self) -> "Polynomial":
        return Polynomial([-c for c in self._coeffs])

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other: Union["Polynomial", Scalar]) -> "Polynomial":
        if isinstance(other, Polynomial):
            if not self._coeffs or not other._coeffs:
                return Polynomial()
            out = [Fraction(0)] * (len(self._coeffs) + len(other._coeffs) - 1)
            for i, a in enumerate(self._coeffs):
                if a == 0:
                    continue
                for j, b in enumerate(other._coeffs):
                    out[i + j] += a * b
            return Polynomial(out)
        if isinstance(other, (Fraction, int)):
            s = _as_fraction(other)
            return Polynomial([c * s for c in self._coeffs])
        return NotImplemented

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "Polynomial":
        if n < 0:
            raise ValueError("exponent must be >= 0")
        result = Polynomial.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __call__(self, x: Scalar) -> Fraction:
        """Exact evaluation by Horner's rule."""
        xv = _as_fraction(x)
        acc = Fraction(0)
        for c in reversed(self._coeffs):
            acc = acc * xv + c
        return acc

    def shift(self, a: Scalar) -> "Polynomial":
        """Return f(x + a), expanded via the binomial theorem."""
        av = _as_fraction(a)
        if av == 0 or not self._coeffs:
            return self
        out = [Fraction(0)] * len(self._coeffs)
        for i, c in enumerate(self._coeffs):
            if c == 0:
                continue
            # c * (x + a)^i  contributes  c * C(i, j) * a^(i-j)  to x^j
            pw = Fraction(1)
            for j in range(i, -1, -1):
                out[j] += c * comb(i, j) * pw
                pw *= av
        return Polynomial(out)

    def derivative(self) -> "Polynomial":
        return Polynomial([i * c for i, c in enumerate(self._coeffs)][1:])

    def antiderivative(self) -> "Polynomial":
        """Term-wise antiderivative with zero constant term (exact power rule)."""
        return Polynomial([Fraction(0)] + [c / (i + 1) for i, c in enumerate(self._coeffs)])

    def to_coeff_strings(self) -> list[str]:
        """Coefficients as canonical rational strings, index = power."""
        return [str(c) for c in self._coeffs]

    @classmethod
    def from_coeff_strings(cls, items: Sequence[str]) -> "Polynomial":
        return cls(Fraction(s) for s in items)


def falling_poly(n: int) -> Polynomial:
    """The degree-n falling factorial x(x-1)...(x-n+1); 1 for n = 0."""
    if n < 0:
        raise ValueError("n must be >= 0")
    out = Polynomial.one()
    for j in range(n):
        out = out * Polynomial([-j, 1])
    return out


def rising_poly(n: int) -> Polynomial:
    """The degree-n rising factorial x(x+1)...(x+n-1); 1 for n = 0."""
    if n < 0:
        raise ValueError("n must be >= 0")
    out = Polynomial.one()
    for j in range(n):
        out = out * Polynomial([j, 1])
    return out


def binom_poly(n: int) -> Polynomial:
    """The polynomial C(x, n) = x(x-1)...(x-n+1)/n!."""
    if n < 0:
        raise ValueError("n must be >= 0")
    return falling_poly(n) * Fraction(1, factorial(n))
