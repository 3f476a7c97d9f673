"""Exact real-root certification for the tan_sec polynomial family.

Everything here runs in rational arithmetic.  The central facts being
certified, for R_n = tan_sec_poly(n):

* x = -1 is a zero of multiplicity floor(n/2) + 1, and the reduced
  polynomial G_n = R_n / (1+x)^(floor(n/2)+1) has exactly ceil(n/2) - 1
  simple real zeros, all inside (-1, 0) -- so every zero of R_n is real;
* consecutive R_n weakly interlace (R_n separates R_{n+1});
* the coefficient sequence of R_n has mean (2n-1)/3 and variance (8n+8)/45
  (exact closed forms for R_n(1), R_n'(1), R_n''(1));
* the largest coefficient sits at the index bracket floor/ceil((2n-1)/3).

Root counting uses Sturm chains with content normalization after every
remainder step (positive scaling only, so sign variations are untouched).
Isolating intervals are open rational intervals refined by bisection, with
the refinement depth bounded so an undetected common root cannot loop
forever.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from . import families
from .polynomial import Poly, gcd_poly, primitive_part

MAX_BISECTIONS = 128


class EndpointIsRoot(ValueError):
    """A Sturm count was requested at an endpoint where the polynomial vanishes."""


class NonSquarefreeInput(ValueError):
    """A squarefree polynomial was required."""


class StructureViolation(Exception):
    """A clause of the certified root structure failed."""

    def __init__(self, clause: str, detail: str = ""):
        super().__init__(f"{clause}: {detail}" if detail else clause)
        self.clause = clause


class InterlacingViolation(Exception):
    """The separation (weak interlacing) certificate failed."""


Interval = tuple[Fraction, Fraction]


@dataclass(frozen=True)
class SturmChain:
    """Sturm sequence of a squarefree polynomial.

    The sign-variation difference V(a) - V(b) counts the distinct real roots
    in (a, b].
    """

    polys: tuple[Poly, ...]

    def variations(self, x: Fraction) -> int:
        signs = []
        for p in self.polys:
            v = p(x)
            if v:
                signs.append(v > 0)
        return sum(1 for a, b in zip(signs, signs[1:]) if a != b)

    def count(self, a: Fraction, b: Fraction) -> int:
        """Distinct real roots in (a, b]."""
        if a >= b:
            raise ValueError("need a < b")
        p = self.polys[0]
        if p(a) == 0 or p(b) == 0:
            raise EndpointIsRoot(f"endpoint of ({a}, {b}) is a root")
        return self.variations(a) - self.variations(b)


def squarefree_part(p: Poly) -> Poly:
    """p divided by gcd(p, p'), normalized to primitive integer coefficients."""
    if p.is_zero():
        raise ValueError("zero polynomial")
    if p.degree < 1:
        return Poly.one()
    return primitive_part(p.exact_div(gcd_poly(p, p.derivative())))


def sturm_chain(p: Poly) -> SturmChain:
    """Sturm chain of a squarefree p; raises NonSquarefreeInput otherwise."""
    if p.is_zero():
        raise ValueError("zero polynomial")
    chain = [primitive_part(p)]
    if p.degree >= 1:
        chain.append(primitive_part(p.derivative()))
        while chain[-1].degree >= 1:
            rem = divmod(chain[-2], chain[-1])[1]
            if rem.is_zero():
                raise NonSquarefreeInput(f"{p!r} has a repeated root")
            chain.append(primitive_part(-rem))
    return SturmChain(tuple(chain))


def multiplicity_at(p: Poly, r: Fraction | int) -> int:
    """Largest m with (x - r)^m dividing p, by repeated exact division."""
    if p.is_zero():
        raise ValueError("zero polynomial")
    factor = Poly((-Fraction(r), 1))
    m = 0
    while p(r) == 0:
        p = p.exact_div(factor)
        m += 1
    return m


def count_real_roots(p: Poly, a: Fraction | int, b: Fraction | int) -> int:
    """Distinct real roots of squarefree p in (a, b]."""
    return sturm_chain(p).count(Fraction(a), Fraction(b))


def root_bound(p: Poly) -> Fraction:
    """A rational B with every real root of p strictly inside (-B, B)."""
    lead = abs(p.leading())
    return 2 + max(abs(c) for c in p.coeffs) / lead


def isolate_roots(p: Poly) -> list[Interval]:
    """Disjoint open rational intervals, one per distinct real root of
    squarefree p, sorted in increasing order; endpoints are never roots."""
    if p.is_zero():
        raise ValueError("zero polynomial")
    if p.degree < 1:
        return []
    chain = sturm_chain(p)
    bound = root_bound(p)
    out: list[Interval] = []
    stack: list[tuple[Fraction, Fraction, int]] = []
    total = chain.count(-bound, bound)
    if total:
        stack.append((-bound, bound, total))
    while stack:
        a, b, cnt = stack.pop()
        if cnt == 1:
            out.append((a, b))
            continue
        mid = (a + b) / 2
        if p(mid) == 0:
            delta = (b - a) / 4
            while (
                p(mid - delta) == 0
                or p(mid + delta) == 0
                or chain.count(mid - delta, mid + delta) != 1
            ):
                delta /= 2
            out.append((mid - delta, mid + delta))
            left = chain.count(a, mid - delta)
            right = chain.count(mid + delta, b)
            if left:
                stack.append((a, mid - delta, left))
            if right:
                stack.append((mid + delta, b, right))
        else:
            left = chain.count(a, mid)
            if left:
                stack.append((a, mid, left))
            if cnt - left:
                stack.append((mid, b, cnt - left))
    return sorted(out)


def _bisect_once(p: Poly, iv: Interval) -> Interval:
    """One refinement step of an isolating interval (sign change preserved)."""
    a, b = iv
    mid = (a + b) / 2
    v = p(mid)
    if v == 0:
        w = (b - a) / 8
        while p(mid - w) == 0 or p(mid + w) == 0:
            w /= 2
        return (mid - w, mid + w)
    if (p(a) > 0) != (v > 0):
        return (a, mid)
    return (mid, b)


def refine_interval(
    p: Poly,
    iv: Interval,
    *,
    inside: Interval | None = None,
    width: Fraction | None = None,
    max_bisections: int = MAX_BISECTIONS,
) -> Interval:
    """Shrink an isolating interval until it fits inside `inside` and/or is
    narrower than `width`; the bisection budget guards against bad input."""
    a, b = iv
    for _ in range(max_bisections):
        ok = True
        if inside is not None and not (inside[0] < a and b < inside[1]):
            ok = False
        if width is not None and b - a >= width:
            ok = False
        if ok:
            return (a, b)
        a, b = _bisect_once(p, (a, b))
    raise InterlacingViolation(f"bisection budget exhausted refining {iv}")


# ---------------------------------------------------------------------------
# certified structure of the tan_sec family
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class RootReport:
    n: int
    mult_minus1: int
    isolating_intervals: tuple[Interval, ...]
    all_in_range: bool


def certify_root_structure(n: int) -> RootReport:
    """Certify the zero structure of R_n = tan_sec_poly(n).

    Asserts multiplicity floor(n/2)+1 at -1, that the reduced polynomial is
    squarefree with exactly ceil(n/2)-1 real zeros all in (-1, 0), and that
    the multiplicities sum to the degree (all zeros real).  Returns the
    isolating intervals, refined to lie inside (-1, 0).
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    rn = families.tan_sec_poly(n)
    expected_mult = n // 2 + 1
    expected_simple = (n + 1) // 2 - 1
    mult = multiplicity_at(rn, -1)
    if mult != expected_mult:
        raise StructureViolation("multiplicity", f"n={n}: {mult} != {expected_mult}")
    g = families.reduced_tan_sec_poly(n)
    if g.degree >= 1 and gcd_poly(g, g.derivative()).degree >= 1:
        raise StructureViolation("squarefree", f"G_{n} has a repeated root")
    intervals = isolate_roots(g)
    if len(intervals) != expected_simple:
        raise StructureViolation(
            "simple-zero count", f"n={n}: {len(intervals)} != {expected_simple}"
        )
    in_range = (
        count_real_roots(g, -1, 0) == expected_simple if g.degree >= 1 else True
    )
    if not in_range:
        raise StructureViolation("zero range", f"some zero of G_{n} is outside (-1, 0)")
    if mult + expected_simple != n:
        raise StructureViolation("degree", f"n={n}: multiplicities do not sum to degree")
    refined = tuple(
        refine_interval(g, iv, inside=(Fraction(-1), Fraction(0))) for iv in intervals
    )
    return RootReport(n, mult, refined, True)


def _disjoint(a: Interval, b: Interval) -> bool:
    return a[1] <= b[0] or b[1] <= a[0]


def certify_interlacing(n: int, *, max_bisections: int = MAX_BISECTIONS) -> bool:
    """Certify that R_n separates R_{n+1} (weak interlacing of all zeros).

    The shared zeros at -1 are compared through their multiplicities, which
    may differ by at most one.  The simple zeros are certified by refining
    isolating intervals of the two reduced polynomials until every pair is
    disjoint and the merged order alternates.  A common simple zero would
    show up as a nontrivial gcd and is handled as a coincident point.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    r_n = families.tan_sec_poly(n)
    r_n1 = families.tan_sec_poly(n + 1)
    if r_n1.degree != r_n.degree + 1:
        raise InterlacingViolation(f"degree step failed at n={n}")
    m_n = multiplicity_at(r_n, -1)
    m_n1 = multiplicity_at(r_n1, -1)
    if m_n1 - m_n not in (0, 1):
        raise InterlacingViolation(f"multiplicity step {m_n}->{m_n1} at n={n}")
    g_n = families.reduced_tan_sec_poly(n)
    g_n1 = families.reduced_tan_sec_poly(n + 1)

    labelled: list[tuple[Interval, str, Poly]] = []
    if g_n.degree >= 1 and g_n1.degree >= 1:
        common = gcd_poly(g_n, g_n1)
    else:
        common = Poly.one()
    if common.degree >= 1:
        part_r = g_n.exact_div(common)
        part_s = g_n1.exact_div(common)
        labelled += [(iv, "c", common) for iv in isolate_roots(common)]
    else:
        part_r, part_s = g_n, g_n1
    labelled += [(iv, "r", part_r) for iv in isolate_roots(part_r)]
    labelled += [(iv, "s", part_s) for iv in isolate_roots(part_s)]

    count_r = sum(1 for _, lab, _ in labelled if lab in ("r", "c"))
    count_s = sum(1 for _, lab, _ in labelled if lab in ("s", "c"))
    if count_s - count_r not in (0, 1):
        raise InterlacingViolation(f"simple-zero counts {count_r}/{count_s} at n={n}")

    for _ in range(max_bisections):
        overlapping = False
        for i in range(len(labelled)):
            for j in range(i + 1, len(labelled)):
                if not _disjoint(labelled[i][0], labelled[j][0]):
                    overlapping = True
                    labelled[i] = (_bisect_once(labelled[i][2], labelled[i][0]),) + labelled[i][1:]
                    labelled[j] = (_bisect_once(labelled[j][2], labelled[j][0]),) + labelled[j][1:]
        if not overlapping:
            break
    else:
        raise InterlacingViolation(f"refinement budget exhausted at n={n}")

    # Walk the intervals from the largest root down.  The separation chain
    # s_1 >= r_1 >= s_2 >= ... must hold, so labels alternate starting with
    # s; a coincident point stands in for one adjacent s, r pair.
    order = sorted(labelled, key=lambda item: item[0][1], reverse=True)
    expected = "s"
    for _, lab, _ in order:
        if lab == "c":
            continue
        if lab != expected:
            raise InterlacingViolation(f"zeros of R_{n} and R_{n + 1} fail to alternate")
        expected = "r" if expected == "s" else "s"
    return True


# ---------------------------------------------------------------------------
# exact central-limit statistics and the mode bracket
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class CltStats:
    n: int
    value_at_1: Fraction
    deriv1_at_1: Fraction
    deriv2_at_1: Fraction
    mu: Fraction
    sigma2: Fraction


def clt_stats(n: int) -> CltStats:
    """Exact mean and variance of the coefficient distribution of R_n.

    mu = R'(1)/R(1) and sigma^2 = mu + R''(1)/R(1) - mu^2.  The closed forms
    R_n(1) = 2 n!, R_n'(1) = (4n-2) n!/3 (n >= 2) and
    R_n''(1) = n! (40n^2 - 84n + 56)/45 (n >= 4) are asserted on the way.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    rn = families.tan_sec_poly(n)
    v = rn(1)
    d1 = rn.derivative()(1)
    d2 = rn.derivative().derivative()(1)
    fact = math.factorial(n)
    assert v == 2 * fact
    if n >= 2:
        assert d1 == Fraction((4 * n - 2) * fact, 3)
    if n >= 4:
        assert d2 == Fraction(fact * (40 * n * n - 84 * n + 56), 45)
    mu = d1 / v
    sigma2 = mu + d2 / v - mu * mu
    return CltStats(n, v, d1, d2, mu, sigma2)


@dataclass(frozen=True)
class ModeResult:
    n: int
    argmax: tuple[int, ...]
    allowed: tuple[int, ...]
    tie: bool
    ok: bool


def mode_bracket(n: int) -> ModeResult:
    """Locate the largest coefficient of row n and test the Darroch bracket.

    If (2n-1)/3 is an integer the maximum must sit exactly there; otherwise
    at its floor or ceiling.  Ties are reported, not failed.
    """
    if n < 2:
        raise ValueError("n must be >= 2")
    row = families.tan_sec_triangle(n)[n]
    top = max(row)
    argmax = tuple(k for k, v in enumerate(row) if v == top)
    num = 2 * n - 1
    if num % 3 == 0:
        allowed = (num // 3,)
    else:
        allowed = (num // 3, num // 3 + 1)
    ok = all(k in allowed for k in argmax)
    return ModeResult(n, argmax, allowed, len(argmax) > 1, ok)
