"""Truncated formal power series in z with polynomial-in-x coefficients.

A TruncSeries of order N keeps the coefficients of z^0..z^N, each a Poly in
x.  The exponential generating functions of all families in this package
live here: the z^n coefficient of a family series is family_n(x)/n!, stored
exactly.

Square roots never appear: cosh(z*sqrt(w)) and sinh(z*sqrt(w))/sqrt(w) are
both power series in w with rational coefficients (hyperbolic_blocks), which
is what makes every closed form polynomial-checkable.  Identities are
verified by cross-multiplying so that both sides are plain polynomial
coefficients; the same relations are also *solved* coefficient-by-coefficient
(division only ever by the exactly-dividing z^0 coefficient) to rebuild each
family from its closed form, giving an independent derivation route.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from mpmath import mp

from . import families
from .permutations import SIGNED_LIMIT
from .polynomial import Poly, Scalar

MAX_ORDER = 64

FAMILY_IDS = ("A", "W", "WL", "P", "C", "CT", "T", "R")


class UnknownFamily(ValueError):
    """Family identifier is not one of A, W, WL, P, C, CT, T, R."""


class OrderExceedsComputedFamilies(ValueError):
    """Requested truncation order is outside the supported range."""


class ToleranceExceeded(ArithmeticError):
    """Numeric spot-check disagreed beyond the requested tolerance."""


class PrecisionInsufficient(ArithmeticError):
    """Truncation remainder bound is too large to certify the tolerance."""


@dataclass(frozen=True)
class TruncSeries:
    """Power series in z truncated after z^order, with Poly coefficients."""

    order: int
    coeffs: tuple[Poly, ...]

    def __post_init__(self):
        if self.order < 0 or len(self.coeffs) != self.order + 1:
            raise ValueError("coefficient count must equal order + 1")

    @classmethod
    def zero(cls, order: int) -> TruncSeries:
        return cls(order, (Poly.zero(),) * (order + 1))

    @classmethod
    def const(cls, p: Poly | Scalar, order: int) -> TruncSeries:
        p = p if isinstance(p, Poly) else Poly.constant(p)
        return cls(order, (p,) + (Poly.zero(),) * order)

    @classmethod
    def from_egf(cls, polys: Sequence[Poly], order: int) -> TruncSeries:
        """Series sum_m polys[m] z^m / m! (exponential normalization)."""
        if len(polys) < order + 1:
            raise OrderExceedsComputedFamilies(
                f"need {order + 1} polynomials, got {len(polys)}"
            )
        return cls(
            order,
            tuple(polys[m] * Fraction(1, math.factorial(m)) for m in range(order + 1)),
        )

    def egf_poly(self, m: int) -> Poly:
        """m! times the z^m coefficient."""
        return self.coeffs[m] * math.factorial(m)

    def _require_same_order(self, other: TruncSeries) -> None:
        if self.order != other.order:
            raise ValueError("series orders differ; truncate explicitly")

    def __add__(self, other: TruncSeries) -> TruncSeries:
        self._require_same_order(other)
        return TruncSeries(self.order, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: TruncSeries) -> TruncSeries:
        self._require_same_order(other)
        return TruncSeries(self.order, tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __mul__(self, other: TruncSeries) -> TruncSeries:
        self._require_same_order(other)
        out = [Poly.zero()] * (self.order + 1)
        for i, a in enumerate(self.coeffs):
            if a.is_zero():
                continue
            for j in range(self.order + 1 - i):
                b = other.coeffs[j]
                if not b.is_zero():
                    out[i + j] = out[i + j] + a * b
        return TruncSeries(self.order, tuple(out))

    def scale(self, c: Poly | Scalar) -> TruncSeries:
        return TruncSeries(self.order, tuple(p * c for p in self.coeffs))

    def shift_z(self, k: int = 1) -> TruncSeries:
        """Multiply by z^k, truncating at the same order."""
        out = ((Poly.zero(),) * k + self.coeffs)[: self.order + 1]
        return TruncSeries(self.order, out)

    def truncate(self, order: int) -> TruncSeries:
        if order > self.order:
            raise OrderExceedsComputedFamilies("cannot extend a truncated series")
        return TruncSeries(order, self.coeffs[: order + 1])

    def dz(self) -> TruncSeries:
        """Derivative in z; the order drops by one."""
        return TruncSeries(
            self.order - 1,
            tuple((m + 1) * self.coeffs[m + 1] for m in range(self.order)),
        )

    def dx(self) -> TruncSeries:
        """Coefficient-wise derivative in x; the order is unchanged."""
        return TruncSeries(self.order, tuple(p.derivative() for p in self.coeffs))


def exp_series(c: Poly | Scalar, order: int) -> TruncSeries:
    """exp(c z) = sum_m c^m z^m / m!, truncated at the given order."""
    c = c if isinstance(c, Poly) else Poly.constant(c)
    coeffs = []
    power = Poly.one()
    for m in range(order + 1):
        coeffs.append(power * Fraction(1, math.factorial(m)))
        power = power * c
    return TruncSeries(order, tuple(coeffs))


def hyperbolic_blocks(w: Poly | Scalar, order: int) -> tuple[TruncSeries, TruncSeries]:
    """The square-root-free pair (cosh(z sqrt(w)), sinh(z sqrt(w))/sqrt(w)).

    Both are polynomial in w: sum_m w^m z^(2m)/(2m)! and
    sum_m w^m z^(2m+1)/(2m+1)!.
    """
    w = w if isinstance(w, Poly) else Poly.constant(w)
    cosh_c = [Poly.zero()] * (order + 1)
    sinh_c = [Poly.zero()] * (order + 1)
    power = Poly.one()
    for m in range(order // 2 + 1):
        if 2 * m <= order:
            cosh_c[2 * m] = power * Fraction(1, math.factorial(2 * m))
        if 2 * m + 1 <= order:
            sinh_c[2 * m + 1] = power * Fraction(1, math.factorial(2 * m + 1))
        power = power * w
    return TruncSeries(order, tuple(cosh_c)), TruncSeries(order, tuple(sinh_c))


def solve_series(num: TruncSeries, den: TruncSeries) -> TruncSeries:
    """The series q with q * den = num, term by term.

    Each step divides by den's z^0 coefficient with polynomial exact
    division, so the result exists only when the quotient really is a series
    of polynomials (NonzeroRemainder otherwise) -- no rational functions are
    ever formed.
    """
    num._require_same_order(den)
    d0 = den.coeffs[0]
    out: list[Poly] = []
    for m in range(num.order + 1):
        acc = num.coeffs[m]
        for i in range(m):
            acc = acc - out[i] * den.coeffs[m - i]
        out.append(acc.exact_div(d0))
    return TruncSeries(num.order, tuple(out))


# ---------------------------------------------------------------------------
# the closed forms, in cross-multiplied shape: family * den = rhs
# ---------------------------------------------------------------------------

def closed_form_sides(family: str, order: int) -> tuple[TruncSeries, TruncSeries]:
    """(den, rhs) with family_series * den = rhs as exact truncated series."""
    if family not in FAMILY_IDS:
        raise UnknownFamily(f"unknown family {family!r}")
    if not 0 <= order <= MAX_ORDER:
        raise OrderExceedsComputedFamilies(f"order {order} outside 0..{MAX_ORDER}")
    x = Poly.x()
    one_minus_x = Poly((1, -1))
    one_minus_x2 = Poly((1, 0, -1))
    if family == "A":
        e = exp_series(one_minus_x, order)
        return TruncSeries.const(1, order) - e.scale(x), e.scale(one_minus_x)
    if family in ("W", "WL"):
        cosh_w, sinh_w = hyperbolic_blocks(one_minus_x, order)
        den = cosh_w - sinh_w
        rhs = sinh_w if family == "W" else TruncSeries.const(1, order)
        return den, rhs
    if family == "P":
        cosh_w, sinh_w = hyperbolic_blocks(one_minus_x2, order)
        return cosh_w - sinh_w, TruncSeries.const(1, order) + sinh_w.scale(x)
    if family in ("C", "CT"):
        e2 = exp_series(2 * one_minus_x, order)
        den = TruncSeries.const(1, order) - e2.scale(x)
        if family == "CT":
            return den, TruncSeries.const(one_minus_x, order)
        return den, exp_series(one_minus_x, order).scale(one_minus_x)
    if family == "T":
        e = exp_series(one_minus_x2, order)
        den = TruncSeries.const(1, order) - e.scale(x)
        return den, e - TruncSeries.const(x, order)
    # family == "R": the square-root-free rewriting of the closed form
    # x (cosh z - 1) = (1 - x) + sum_i (-1)^i (1-x^2)^floor((i+1)/2) t^i / i!
    coeffs = [one_minus_x]
    for i in range(1, order + 1):
        block = one_minus_x2 ** ((i + 1) // 2) * Fraction((-1) ** i, math.factorial(i))
        coeffs.append(block)
    den = TruncSeries(order, tuple(coeffs))
    return den, TruncSeries.const(one_minus_x2, order)


def engine_series(
    family: str,
    order: int,
    *,
    signed_limit: int = SIGNED_LIMIT,
    jobs: int = 1,
) -> TruncSeries:
    """The family's series assembled from recurrence/oracle polynomials."""
    if family not in FAMILY_IDS:
        raise UnknownFamily(f"unknown family {family!r}")
    if not 0 <= order <= MAX_ORDER:
        raise OrderExceedsComputedFamilies(f"order {order} outside 0..{MAX_ORDER}")
    kwargs = dict(signed_limit=signed_limit, jobs=jobs)
    if family == "A":
        polys = [Poly.one()] + [families.eulerian_poly(n) for n in range(1, order + 1)]
    elif family == "W":
        polys = [Poly.zero()] + [families.peak_poly(n) for n in range(1, order + 1)]
    elif family == "WL":
        polys = [Poly.one()] + [families.left_peak_poly(n) for n in range(1, order + 1)]
    elif family == "P":
        polys = list(families.tan_sec_polys(order))
    elif family == "R":
        polys = list(families.tan_sec_polys(order + 1)[1:])
    elif family == "C":
        polys = [Poly.one()] + [families.type_b_eulerian_poly(n, **kwargs) for n in range(1, order + 1)]
    elif family == "CT":
        polys = [Poly.one()] + [families.affine_eulerian_poly(n, **kwargs) for n in range(1, order + 1)]
    else:  # T
        polys = [Poly.one()] + [families.signed_interleave_poly(n, **kwargs) for n in range(1, order + 1)]
    return TruncSeries.from_egf(polys, order)


@lru_cache(maxsize=None)
def solved_family_polys(family: str, order: int) -> tuple[Poly, ...]:
    """family_0..family_order recovered from the closed form alone.

    Entry n is n! times the z^n series coefficient (for the R family that is
    R_{n+1}; for W it is W_n with entry 0 equal to zero).
    """
    den, rhs = closed_form_sides(family, order)
    solved = solve_series(rhs, den)
    return tuple(solved.egf_poly(m) for m in range(order + 1))


def signed_polys_from_gf(n: int) -> tuple[Poly, Poly]:
    """(C_n, Ct_n) from the closed-form generating functions."""
    return solved_family_polys("C", n)[n], solved_family_polys("CT", n)[n]


# ---------------------------------------------------------------------------
# verification
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class SeriesMismatch:
    z_order: int
    x_index: int
    lhs: Fraction
    rhs: Fraction


def first_mismatch(a: TruncSeries, b: TruncSeries) -> SeriesMismatch | None:
    """Smallest (z-order, coefficient index) where the two series differ."""
    a._require_same_order(b)
    for m in range(a.order + 1):
        pa, pb = a.coeffs[m], b.coeffs[m]
        if pa != pb:
            for j in range(max(len(pa.coeffs), len(pb.coeffs))):
                if pa.coeff(j) != pb.coeff(j):
                    return SeriesMismatch(m, j, pa.coeff(j), pb.coeff(j))
    return None


def verify_gf(
    family: str,
    order: int,
    *,
    signed_limit: int = SIGNED_LIMIT,
    jobs: int = 1,
) -> SeriesMismatch | None:
    """Cross-multiplied closed-form check for one family; None means pass."""
    engine = engine_series(family, order, signed_limit=signed_limit, jobs=jobs)
    den, rhs = closed_form_sides(family, order)
    return first_mismatch(engine * den, rhs)


def verify_t_vs_eulerian(
    order: int,
    *,
    poly_nmax: int = SIGNED_LIMIT,
    signed_limit: int = SIGNED_LIMIT,
    jobs: int = 1,
) -> SeriesMismatch | None:
    """Checks x + T(x, z) = (1+x) A(x, z(1+x)) through order, and the
    per-coefficient form T_n = (1+x)^(n+1) A_n for n up to poly_nmax."""
    one_plus_x = Poly((1, 1))
    a = engine_series("A", order)
    rescaled = TruncSeries(order, tuple(a.coeffs[m] * one_plus_x**m for m in range(order + 1)))
    lhs = engine_series("T", order, signed_limit=signed_limit, jobs=jobs) + TruncSeries.const(Poly.x(), order)
    mism = first_mismatch(lhs, rescaled.scale(one_plus_x))
    if mism is not None:
        return mism
    for n in range(1, poly_nmax + 1):
        tn = families.signed_interleave_poly(n, signed_limit=signed_limit, jobs=jobs)
        expect = one_plus_x ** (n + 1) * families.eulerian_poly(n)
        if tn != expect:
            for j in range(max(len(tn.coeffs), len(expect.coeffs))):
                if tn.coeff(j) != expect.coeff(j):
                    return SeriesMismatch(n, j, tn.coeff(j), expect.coeff(j))
    return None


def verify_pde(order: int) -> SeriesMismatch | None:
    """Exact check of x(x^2-1) dP/dx + (1 - x^2 z) dP/dz = P + x.

    P is the EGF of the tan_sec family; with P known through z^order the
    identity is verified for all z-coefficients up to order - 1.
    """
    if order < 2:
        raise ValueError("order must be >= 2")
    p = engine_series("P", order)
    x = Poly.x()
    px = p.dx().truncate(order - 1)
    pz = p.dz()
    lhs = px.scale(Poly((0, -1, 0, 1))) + pz - pz.shift_z(1).scale(x * x)
    rhs = p.truncate(order - 1) + TruncSeries.const(x, order - 1)
    return first_mismatch(lhs, rhs)


# ---------------------------------------------------------------------------
# numeric spot-check of the transcendental closed form
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class SpotcheckReport:
    x0: Fraction
    t0: Fraction
    order: int
    tol: float
    rel_error: float
    remainder_bound: float
    precision_bits: int


def numeric_spotcheck(
    x0: Fraction | int,
    t0: Fraction | int,
    order: int,
    tol: float,
    *,
    precision_bits: int = 320,
) -> SpotcheckReport:
    """Compare the literal closed form (1-x^2)/(x (cosh z - 1)) with
    z = -t sqrt(1-x^2) + arccosh(1/x) against the exact truncated EGF.

    The truncation remainder is bounded by 2 sum_{n>N} (n+1) |t|^n using
    |R_{n+1}(x0)| <= R_{n+1}(1) = 2 (n+1)! for x0 in (0, 1); the bound must
    certify the tolerance or PrecisionInsufficient is raised.
    """
    x0 = Fraction(x0)
    t0 = Fraction(t0)
    if not 0 < x0 < 1:
        raise ValueError("x0 must lie in (0, 1)")
    if abs(t0) >= Fraction(1, 4):
        raise ValueError("|t0| must be < 1/4 for the remainder bound")
    rs = families.tan_sec_polys(order + 1)
    partial = sum(
        (rs[n + 1](x0) * t0**n / math.factorial(n) for n in range(order + 1)),
        start=Fraction(0),
    )
    t = abs(t0)
    tail = 2 * t ** (order + 1) * (Fraction(order + 2) / (1 - t) + t / (1 - t) ** 2)
    with mp.workprec(precision_bits):
        xm = mp.mpf(x0.numerator) / x0.denominator
        tm = mp.mpf(t0.numerator) / t0.denominator
        s = mp.sqrt(1 - xm * xm)
        z = -tm * s + mp.acosh(1 / xm)
        closed = (1 - xm * xm) / (xm * (mp.cosh(z) - 1))
        approx = mp.mpf(partial.numerator) / partial.denominator
        rel_error = float(abs(closed - approx) / abs(closed))
        bound_rel = float(mp.mpf(tail.numerator) / tail.denominator / abs(closed))
    if bound_rel > tol:
        raise PrecisionInsufficient(
            f"remainder bound {bound_rel:.3e} cannot certify tolerance {tol:.3e}"
        )
    if rel_error > tol:
        raise ToleranceExceeded(
            f"relative error {rel_error:.3e} exceeds tolerance {tol:.3e}"
        )
    return SpotcheckReport(x0, t0, order, tol, rel_error, bound_rel, precision_bits)
