"""Dense univariate polynomial arithmetic over exact rationals.

A polynomial is a tuple of `fractions.Fraction` coefficients, index i holding
the x^i coefficient.  Trailing zeros are stripped on construction, so equality
is structural; the zero polynomial stores no coefficients at all and its
degree is the sentinel -inf (never -1, which would compare like a valid
degree).  Every operation is exact and returns a new value; nothing here
mutates, so polynomials can be shared freely between concurrent tasks.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Union

Scalar = Union[int, Fraction]

NEG_INF = float("-inf")


class NonzeroRemainder(ArithmeticError):
    """Exact polynomial division left a nonzero remainder."""


class DivisionByZeroPoly(ZeroDivisionError):
    """Division by the zero polynomial."""


class ClearPowerTooSmall(ValueError):
    """Denominator-clearing exponent is smaller than the polynomial degree."""


@dataclass(init=False, eq=True, frozen=True)
class Poly:
    """A univariate polynomial with Fraction coefficients, constant term first.

    >>> Poly([1, 4, 5, 2])
    Poly('1 + 4x + 5x^2 + 2x^3')
    >>> Poly([1, 1]) ** 2
    Poly('1 + 2x + x^2')
    >>> Poly([]).degree
    -inf
    """

    coeffs: tuple[Fraction, ...]

    def __init__(self, coeffs: Iterable[Scalar] = ()):
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls) -> Poly:
        return cls(())

    @classmethod
    def one(cls) -> Poly:
        return cls((1,))

    @classmethod
    def x(cls) -> Poly:
        return cls((0, 1))

    @classmethod
    def constant(cls, c: Scalar) -> Poly:
        return cls((c,))

    @classmethod
    def monomial(cls, coeff: Scalar, power: int) -> Poly:
        """coeff * x**power."""
        if power < 0:
            raise ValueError("negative power")
        return cls((0,) * power + (coeff,))

    # -- structure ---------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def degree(self) -> int | float:
        """Degree of the polynomial; -inf for the zero polynomial."""
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    def coeff(self, i: int) -> Fraction:
        """The x^i coefficient (zero beyond the stored length)."""
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else Fraction(0)

    def leading(self) -> Fraction:
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def is_integral(self) -> bool:
        """True when every coefficient is an integer."""
        return all(c.denominator == 1 for c in self.coeffs)

    # -- ring operations ---------------------------------------------------

    def __add__(self, other: Poly | Scalar) -> Poly:
        other = _coerce(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Poly(out)

    __radd__ = __add__

    def __neg__(self) -> Poly:
        return Poly(tuple(-c for c in self.coeffs))

    def __sub__(self, other: Poly | Scalar) -> Poly:
        return self + (-_coerce(other))

    def __rsub__(self, other: Scalar) -> Poly:
        return _coerce(other) + (-self)

    def __mul__(self, other: Poly | Scalar) -> Poly:
        if isinstance(other, (int, Fraction)):
            return Poly(tuple(c * other for c in self.coeffs))
        if self.is_zero() or other.is_zero():
            return Poly.zero()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j, b in enumerate(other.coeffs):
                if b:
                    out[i + j] += a * b
        return Poly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> Poly:
        if n < 0:
            raise ValueError("negative polynomial power")
        result = Poly.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    # -- calculus and evaluation -------------------------------------------

    def derivative(self) -> Poly:
        """Formal derivative; drops the degree of a nonconstant input by one.

        >>> Poly([1, 4, 5, 2]).derivative()
        Poly('4 + 10x + 6x^2')
        """
        return Poly(tuple(c * i for i, c in enumerate(self.coeffs) if i >= 1))

    def __call__(self, x: Scalar) -> Fraction:
        """Evaluate at a rational point by Horner's rule."""
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def compose(self, other: Poly) -> Poly:
        """The substitution self(other), as an exact polynomial."""
        acc = Poly.zero()
        for c in reversed(self.coeffs):
            acc = acc * other + c
        return acc

    # -- division ----------------------------------------------------------

    def __divmod__(self, d: Poly) -> tuple[Poly, Poly]:
        """Quotient and remainder with deg(remainder) < deg(d)."""
        if d.is_zero():
            raise DivisionByZeroPoly("polynomial division by zero")
        rem = list(self.coeffs)
        dd = len(d.coeffs) - 1
        lead = d.coeffs[-1]
        if len(rem) <= dd:
            return Poly.zero(), self
        quot = [Fraction(0)] * (len(rem) - dd)
        for i in range(len(rem) - 1, dd - 1, -1):
            c = rem[i]
            if not c:
                continue
            f = c / lead
            quot[i - dd] = f
            for j, dc in enumerate(d.coeffs):
                rem[i - dd + j] -= f * dc
        return Poly(quot), Poly(rem)

    def exact_div(self, d: Poly) -> Poly:
        """Divide exactly, raising NonzeroRemainder if d does not divide self.

        >>> Poly([1, 2, 1]).exact_div(Poly([1, 1]))
        Poly('1 + x')
        """
        q, r = divmod(self, d)
        if not r.is_zero():
            raise NonzeroRemainder(f"{self!r} is not divisible by {d!r}")
        return q

    # -- denominator-cleared substitution ------------------------------------

    def subst_cleared(self, num: Poly, den: Poly, clear_power: int) -> Poly:
        """den**clear_power * self(num/den), as an exact polynomial.

        Computes sum_k c_k * num**k * den**(clear_power - k).  The caller
        supplies clear_power explicitly so that exponent bookkeeping between
        identities stays visible; it must be at least the degree of self.
        """
        if clear_power < self.degree:
            raise ClearPowerTooSmall(
                f"clear_power {clear_power} < degree {self.degree}"
            )
        acc = Poly.zero()
        num_pow = Poly.one()
        for k, c in enumerate(self.coeffs):
            if c:
                acc = acc + num_pow * den ** (clear_power - k) * c
            num_pow = num_pow * num
        return acc

    # -- misc ---------------------------------------------------------------

    def __repr__(self) -> str:
        if not self.coeffs:
            return "Poly('0')"
        parts = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            sign = " + " if (c > 0 and parts) else " - " if (c < 0 and parts) else "" if c > 0 else "-"
            mag = abs(c)
            var = "" if i == 0 else "x" if i == 1 else f"x^{i}"
            body = str(mag) if (i == 0 or mag != 1) else ""
            parts.append(sign + body + var)
        return f"Poly('{''.join(parts)}')"


def _coerce(v: Poly | Scalar) -> Poly:
    return v if isinstance(v, Poly) else Poly.constant(v)


def primitive_part(p: Poly) -> Poly:
    """Scale p by a positive rational so coefficients are coprime integers.

    Only positive scaling is used, so the sign of every value p(x) is
    preserved; this is what keeps Sturm sign variations intact while taming
    coefficient growth.
    """
    if p.is_zero():
        return p
    den = lcm(*(c.denominator for c in p.coeffs))
    nums = [int(c * den) for c in p.coeffs]
    g = 0
    for v in nums:
        g = gcd(g, v)
    return Poly(tuple(Fraction(v // g) for v in nums))


def gcd_poly(p: Poly, q: Poly) -> Poly:
    """Monic greatest common divisor of p and q (gcd(p, 0) = monic p)."""
    if p.is_zero() and q.is_zero():
        raise ValueError("gcd of two zero polynomials")
    a, b = p, q
    while not b.is_zero():
        a, b = b, primitive_part(divmod(a, b)[1])
    return a * (1 / a.leading())
