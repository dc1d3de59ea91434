"""Area of a circular segment from its sagitta h and chord b.

Two classical estimates (two thirds of h*b, and h(b+h)/2) plus a rigorous
enclosure of the true area to check them against.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple

from .exactnum import DomainError, Enclosure, as_rational


@dataclass(frozen=True)
class SegmentDims:
    h: Fraction
    b: Fraction

    def __post_init__(self):
        h, b = as_rational(self.h), as_rational(self.b)
        object.__setattr__(self, "h", h)
        object.__setattr__(self, "b", b)
        if h <= 0 or b <= 0:
            raise DomainError("sagitta and chord must be positive")
        if not h < b / 2:
            raise DomainError("segment must be less than a semicircle (h < b/2)")

    @property
    def radius(self) -> Fraction:
        return (self.b ** 2 + 4 * self.h ** 2) / (8 * self.h)


def estimate_archimedean(seg: SegmentDims) -> Fraction:
    """Four thirds of the inscribed triangle: 2hb/3."""
    return 2 * seg.h * seg.b / 3


def estimate_traditional(seg: SegmentDims) -> Fraction:
    return seg.h * (seg.b + seg.h) / 2


class Choice(str, enum.Enum):
    ARCHIMEDEAN = "archimedean"
    TRADITIONAL = "traditional"
    TIE = "tie"


class SegmentChoice(NamedTuple):
    choice: Choice
    archimedean: Fraction
    traditional: Fraction


def choose_estimate(seg: SegmentDims) -> SegmentChoice:
    """Pick the larger estimate; the two agree exactly when b = 3h."""
    arch, trad = estimate_archimedean(seg), estimate_traditional(seg)
    if seg.b > 3 * seg.h:
        choice = Choice.ARCHIMEDEAN
    elif seg.b < 3 * seg.h:
        choice = Choice.TRADITIONAL
    else:
        choice = Choice.TIE
    return SegmentChoice(choice, arch, trad)


def _atan_small(x: Fraction, tol: Fraction) -> tuple:
    """Enclose arctan(x) for 0 <= x <= 1/2 by the alternating Taylor series.

    Stops once the first omitted term is below ``tol``; consecutive partial
    sums bracket the limit.
    """
    if not 0 <= x <= Fraction(1, 2):
        raise DomainError("series argument out of range")
    total = Fraction(0)
    power = x
    x2 = x * x
    j = 0
    while True:
        term = power / (2 * j + 1)
        nxt = total + term if j % 2 == 0 else total - term
        if term < tol:
            return min(total, nxt), max(total, nxt)
        total = nxt
        power *= x2
        j += 1


def _atan_enclosure(t: Fraction, tol: Fraction) -> tuple:
    """Enclose arctan(t) for 0 <= t < 1, reducing t > 1/2 via arctan(1/2)."""
    half = Fraction(1, 2)
    if t <= half:
        return _atan_small(t, tol)
    # arctan(t) = arctan(1/2) + arctan((t - 1/2) / (1 + t/2)); second argument < 1/3
    u = (t - half) / (1 + t / 2)
    a_lo, a_hi = _atan_small(half, tol / 2)
    b_lo, b_hi = _atan_small(u, tol / 2)
    return a_lo + b_lo, a_hi + b_hi


def _round_out(lo: Fraction, hi: Fraction, places: int) -> tuple:
    scale = 10 ** places
    lo_n = (lo.numerator * scale) // lo.denominator
    hi_n = -((-hi.numerator * scale) // hi.denominator)
    return Fraction(lo_n, scale), Fraction(hi_n, scale)


def true_area_enclosure(seg: SegmentDims, digits: int = 6) -> Enclosure:
    """Rigorous enclosure of the segment area, width at most 10**-digits.

    The quarter of the central angle has tangent 2h/b, so the sine of the
    angle is rational and only the angle itself needs a series.
    """
    if digits < 0:
        raise DomainError("digits must be >= 0")
    r = seg.radius
    t = 2 * seg.h / seg.b
    sin_theta = 4 * t * (1 - t * t) / (1 + t * t) ** 2
    tol = Fraction(1, 10 ** (digits + 2)) / (4 * r * r)
    lo, hi = _atan_enclosure(t, tol)
    area_lo = r * r * (4 * lo - sin_theta) / 2
    area_hi = r * r * (4 * hi - sin_theta) / 2
    area_lo, area_hi = _round_out(area_lo, area_hi, digits + 1)
    return Enclosure(area_lo, area_hi, Fraction(1, 10 ** digits))
