"""Exact integers and rationals, integer floor roots and rational root enclosures.

Python ints are already arbitrary precision and ``fractions.Fraction`` keeps
values reduced with a positive denominator, so both are used directly.  The
enclosures here are the only source of "true" root values in the package.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational as _RationalABC

Rational = Fraction


class DomainError(ValueError):
    """Raised when an operation is called outside its mathematical domain."""


def as_rational(x) -> Fraction:
    """Coerce an int, Fraction or ``"p/q"`` string to a Fraction.

    Floats are refused: nothing in the core is allowed to pass through binary
    floating point.
    """
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        raise TypeError("bool is not a rational")
    if isinstance(x, (int, _RationalABC)):
        return Fraction(x)
    if isinstance(x, str):
        return parse_rational(x)
    raise TypeError(f"cannot use {type(x).__name__} as an exact rational")


def parse_rational(text: str) -> Fraction:
    """Parse ``"65/14"``, ``"4 9/14"``, ``"-3"`` or a finite decimal ``"97804.8"``."""
    s = text.strip().replace("−", "-")
    if not s:
        raise ValueError("empty rational")
    parts = s.split()
    if len(parts) == 2:
        whole = int(parts[0])
        frac = Fraction(parts[1])
        if frac < 0 or frac >= 1:
            raise ValueError(f"bad mixed number {text!r}")
        return whole - frac if s.startswith("-") else whole + frac
    if len(parts) != 1:
        raise ValueError(f"cannot parse rational {text!r}")
    return Fraction(s)


def div(a, b) -> Fraction:
    b = as_rational(b)
    if b == 0:
        raise DomainError("division by zero")
    return as_rational(a) / b


def mixed(x) -> str:
    """Render as a mixed number the way the tables print it: ``4 9/14``."""
    x = as_rational(x)
    sign = "-" if x < 0 else ""
    x = abs(x)
    whole, rem = divmod(x.numerator, x.denominator)
    if rem == 0:
        return f"{sign}{whole}"
    if whole == 0:
        return f"{sign}{rem}/{x.denominator}"
    return f"{sign}{whole} {rem}/{x.denominator}"


def mixed_parts(num: int, den: int) -> str:
    """Mixed rendering of num/den *without* reducing the proper fraction."""
    if den <= 0:
        raise DomainError("denominator must be positive")
    sign = "-" if num < 0 else ""
    whole, rem = divmod(abs(num), den)
    if rem == 0:
        return f"{sign}{whole}"
    if whole == 0:
        return f"{sign}{rem}/{den}"
    return f"{sign}{whole} {rem}/{den}"


def floor_root(x: int, k: int) -> int:
    """Largest r >= 0 with r**k <= x."""
    if k < 1:
        raise DomainError("root degree must be >= 1")
    if x < 0:
        raise DomainError("floor_root of a negative number")
    if k == 1 or x < 2:
        return x
    lo, hi = 0, 1 << (-(-x.bit_length() // k) + 1)
    # invariant: lo**k <= x < hi**k
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if mid ** k <= x:
            lo = mid
        else:
            hi = mid
    return lo


def is_perfect_power(x: int, k: int) -> bool:
    return x >= 0 and floor_root(x, k) ** k == x


@dataclass(frozen=True)
class Enclosure:
    lo: Fraction
    hi: Fraction
    width_bound: Fraction

    def __post_init__(self):
        if self.lo > self.hi:
            raise DomainError(f"empty enclosure [{self.lo}, {self.hi}]")
        if self.hi - self.lo > self.width_bound:
            raise DomainError("enclosure wider than its width bound")

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    def __contains__(self, x) -> bool:
        return self.lo <= as_rational(x) <= self.hi


def root_enclosure(N, k: int, digits: int) -> Enclosure:
    """Enclose N**(1/k) between consecutive multiples of 10**-digits.

    ``lo**k <= N <= hi**k`` always holds; an exact root gives ``lo == hi``.
    """
    N = as_rational(N)
    if N <= 0:
        raise DomainError("root_enclosure needs N > 0")
    if k < 1:
        raise DomainError("root degree must be >= 1")
    if digits < 0:
        raise DomainError("digits must be >= 0")
    scale = 10 ** digits
    scaled = N * scale ** k
    r = floor_root(scaled.numerator // scaled.denominator, k)
    lo = Fraction(r, scale)
    hi = lo if r ** k == scaled else Fraction(r + 1, scale)
    return Enclosure(lo, hi, Fraction(1, scale))


def decimal_string(x, digits: int) -> str:
    """Decimal rendering with exactly ``digits`` fractional digits, truncated toward zero."""
    if digits < 0:
        raise DomainError("digits must be >= 0")
    x = as_rational(x)
    sign = "-" if x < 0 else ""
    x = abs(x)
    scaled = x.numerator * 10 ** digits // x.denominator
    whole, frac = divmod(scaled, 10 ** digits)
    if digits == 0:
        return f"{sign}{whole}"
    return f"{sign}{whole}.{frac:0{digits}d}"
