"""Cube-root estimates over a bracket m**3 <= N < (m+1)**3.

All formulas are evaluated in exact rationals.  Each method's bound kind is
not assumed from the literature; it is decided afterwards by cubing.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple

from .bracket import PowerBracket, bracket
from .certify import (
    Approximation,
    BoundKind,
    IdentityCheck,
    certify_bound,
    make_approximation,
)
from .exactnum import DomainError, as_rational, floor_root, root_enclosure


class CubeMethod(str, enum.Enum):
    HERON = "heron"
    CURTZE_SQRT = "curtze_sqrt"
    CURTZE_LINEAR = "curtze_linear"
    BINOMIAL_LOW = "binomial_low"
    BINOMIAL_HIGH = "binomial_high"
    BINOMIAL_LOW_PLUS_ONE = "binomial_low_plus_one"
    CHORD_LOWER = "chord_lower"
    CHORD_LOWER_REFINED = "chord_lower_refined"
    WEIGHTED_UPPER = "weighted_upper"
    NEWTON = "newton"
    HALLEY = "halley"

    def __str__(self):
        return self.value


def _pair(whole: int, num: int, den: int) -> tuple:
    """``whole + num/den`` as an unreduced (numerator, denominator) pair."""
    return whole * den + num, den


def _heron(b: PowerBracket) -> tuple:
    m, d1, d2 = b.m, b.d1, b.d2
    return _pair(m, (m + 1) * d1, (m + 1) * d1 + m * d2)


def _curtze_linear(b: PowerBracket) -> tuple:
    m, d1 = b.m, b.d1
    return _pair(m, (m + 1) * d1, b.N + (m + 1) * d1)


def _curtze_sqrt_at(b: PowerBracket, root_d2: Fraction) -> Fraction:
    t = b.d1 * root_d2
    return b.m + t / (b.N + t)


def _binomial_low(b: PowerBracket) -> tuple:
    return _pair(b.m, b.d1, 3 * b.m ** 2)


def _binomial_low_plus_one(b: PowerBracket) -> tuple:
    return _pair(b.m, b.d1, 3 * b.m ** 2 + 1)


def _binomial_high(b: PowerBracket) -> tuple:
    den = 3 * (b.m + 1) ** 2
    return (b.m + 1) * den - b.d2, den


def _chord_lower(b: PowerBracket) -> tuple:
    m = b.m
    return _pair(m, b.d1, 3 * m * (m + 1) + 1)


def chord_lower_refined(N: int, drop_square_term: bool = False,
                        drop_unit_term: bool = False) -> Fraction:
    """Second chord step from the chord lower bound m_l.

    ``m_l + (N - m_l**3) / (3 m_l (m+1) + (m+1-m_l)**2)``.  The flags drop the
    square term of that denominator and the ``+1`` of ``3m(m+1)+1`` inside
    m_l, as the medieval practitioners did when it eased the arithmetic.
    """
    b = bracket(N, 3)
    m = b.m
    if b.exact:
        return Fraction(m)
    ml = m + Fraction(b.d1, 3 * m * (m + 1) + (0 if drop_unit_term else 1))
    den = 3 * ml * (m + 1)
    if not drop_square_term:
        den += (m + 1 - ml) ** 2
    return ml + (N - ml ** 3) / den


def _weighted_upper(b: PowerBracket) -> tuple:
    m, d1, d2 = b.m, b.d1, b.d2
    return (m + 1) ** 3 * d1 + m ** 3 * d2, (m + 1) ** 2 * d1 + m ** 2 * d2


def nearer_expansion_point(N: int) -> int:
    """m or m+1, whichever integer is nearer cbrt(N); decided by 8N against (2m+1)**3."""
    m = floor_root(N, 3)
    return m + 1 if 8 * N > (2 * m + 1) ** 3 else m


def newton_estimate(N, m: int) -> Fraction:
    """One Newton step for x**3 = N from x = m: ``(N + 2 m**3) / (3 m**2)``."""
    if m == 0:
        raise DomainError("expansion point must be nonzero")
    return (as_rational(N) + 2 * m ** 3) / (3 * m * m)


def newton_square(N, m: int) -> Fraction:
    """Estimate of the square of cbrt(N): ``(2N + m**3) / (3m)``."""
    if m == 0:
        raise DomainError("expansion point must be nonzero")
    return (2 * as_rational(N) + m ** 3) / (3 * m)


def halley_from_parts(N, m: int) -> Fraction:
    """Halley's estimate ``m (2N + m**3) / (N + 2 m**3)``.

    It is the estimate of the square divided by the Newton estimate of the root.
    """
    if m == 0:
        raise DomainError("expansion point must be nonzero")
    N = as_rational(N)
    return m * (2 * N + m ** 3) / (N + 2 * m ** 3)


_CLOSED_FORMS = {
    CubeMethod.HERON: _heron,
    CubeMethod.CURTZE_LINEAR: _curtze_linear,
    CubeMethod.BINOMIAL_LOW: _binomial_low,
    CubeMethod.BINOMIAL_HIGH: _binomial_high,
    CubeMethod.BINOMIAL_LOW_PLUS_ONE: _binomial_low_plus_one,
    CubeMethod.CHORD_LOWER: _chord_lower,
    CubeMethod.WEIGHTED_UPPER: _weighted_upper,
}


def cube_estimate(N: int, method, precision_digits: int = 12,
                  expansion: int | None = None,
                  drop_square_term: bool = False,
                  drop_unit_term: bool = False) -> Approximation:
    """Estimate cbrt(N) by ``method`` and certify the side by cubing.

    ``precision_digits`` is used only by CURTZE_SQRT when d2 is not a square;
    the result is then ENCLOSED between the formula evaluated at the two ends
    of a root enclosure of d2.  ``expansion`` is the point used by NEWTON and
    HALLEY; the default is whichever of m, m+1 is nearer the root.
    """
    method = CubeMethod(method)
    b = bracket(N, 3)
    if b.exact:
        return Approximation(method.value, Fraction(N), 3, Fraction(b.m),
                             BoundKind.EXACT, raw=(b.m, 1))
    if method in _CLOSED_FORMS:
        num, den = _CLOSED_FORMS[method](b)
        return make_approximation(method, N, 3, Fraction(num, den), raw=(num, den))
    if method is CubeMethod.CURTZE_SQRT:
        r = floor_root(b.d2, 2)
        if r * r == b.d2:
            return make_approximation(method, N, 3, _curtze_sqrt_at(b, Fraction(r)))
        enc = root_enclosure(b.d2, 2, precision_digits)
        lo, hi = _curtze_sqrt_at(b, enc.lo), _curtze_sqrt_at(b, enc.hi)
        return Approximation(method.value, Fraction(N), 3, lo,
                             BoundKind.ENCLOSED, interval=(lo, hi))
    if method is CubeMethod.CHORD_LOWER_REFINED:
        value = chord_lower_refined(N, drop_square_term, drop_unit_term)
        return make_approximation(method, N, 3, value)
    point = nearer_expansion_point(N) if expansion is None else expansion
    if method is CubeMethod.NEWTON:
        return make_approximation(method, N, 3, newton_estimate(N, point))
    return make_approximation(method, N, 3, halley_from_parts(N, point))


def weighted_mediant(a, b, c, d, w1, w2) -> Fraction:
    """``(a w1 + c w2) / (b w1 + d w2)``, strictly between c/d and a/b."""
    a, b, c, d, w1, w2 = map(as_rational, (a, b, c, d, w1, w2))
    if min(b, d) <= 0:
        raise DomainError("denominators must be positive")
    if min(w1, w2) <= 0:
        raise DomainError("weights must be positive")
    if not a / b > c / d:
        raise DomainError("need a/b > c/d")
    return (a * w1 + c * w2) / (b * w1 + d * w2)


def integer_mediant(m: int, w1, w2) -> Fraction:
    """Weighted mediant of (m+1)**2/(m+1) and m**2/m; lies strictly in (m, m+1).

    Equal to ``m + (m+1) w1 / ((m+1) w1 + m w2)``.
    """
    return weighted_mediant((m + 1) ** 2, m + 1, m * m, m, w1, w2)


class HeronFamily(NamedTuple):
    N: int
    bound5: Fraction
    bound6: Fraction
    bound7: Fraction


def heron_family(m: int) -> HeronFamily:
    """Heron's N = 100 pattern generalised: N = m**3 + m(2m+1), d2 = (m+1)**2.

    Returns Heron's value there and the two binomial upper bounds, which
    here reduce to m + (2m+1)/(3m) and m + 2/3.
    """
    if m < 1:
        raise DomainError("need m >= 1")
    N = m ** 3 + m * (2 * m + 1)
    bound5 = m + Fraction(2 * m + 1, 3 * m + 2)
    bound6 = m + Fraction(2 * m + 1, 3 * m)
    bound7 = m + Fraction(2, 3)
    if cube_estimate(N, CubeMethod.HERON).value != bound5:
        raise ArithmeticError(f"Heron's rule disagrees with the family closed form at m={m}")
    if not bound5 < bound7 < bound6:
        raise ArithmeticError(f"family ordering fails at m={m}")
    return HeronFamily(N, bound5, bound6, bound7)


def pendlebury_step(m: int, l, n_i) -> Fraction:
    """One step of ``n -> m - (m - n) l m**2 / (m**3 - n**3)`` for N = m**3 - l m**2."""
    l, n_i = as_rational(l), as_rational(n_i)
    if m ** 3 - l * m * m <= 0:
        raise DomainError("need N = m^3 - l m^2 > 0")
    if n_i ** 3 == m ** 3:
        raise DomainError("iterate equals m; step undefined")
    return m - (m - n_i) * l * m * m / (m ** 3 - n_i ** 3)


@dataclass(frozen=True)
class Iterate:
    value: Fraction
    bound: BoundKind


def pendlebury_iterate(m: int, l, n0, steps: int) -> list:
    """Run the recursion from n0, certifying the side of every iterate.

    The side is recomputed rather than carried over, so a driver using the
    iterates as upper or lower ends can tell when one crosses the root.
    """
    l = as_rational(l)
    N = m ** 3 - l * m * m
    x = as_rational(n0)
    out = [Iterate(x, certify_bound(x, N, 3).verdict)]
    for _ in range(steps):
        x = pendlebury_step(m, l, x)
        out.append(Iterate(x, certify_bound(x, N, 3).verdict))
    return out


def pendlebury_closed_form(m: int) -> Fraction:
    """First step from the family bound m - m/(3m-1) with l = 1."""
    return m - Fraction((3 * m - 1) ** 2, 3 * (3 * m - 1) * (3 * m - 2) + 1)


class DeltaPair(NamedTuple):
    delta1: Fraction
    delta2: Fraction


def _check_root(n, m: int) -> Fraction:
    n = as_rational(n)
    if not m < n < m + 1:
        raise DomainError(f"need {m} < n < {m + 1}, got {n}")
    return n


def enestrom_deltas(n, m: int) -> DeltaPair:
    """Gaps minus the cubes of the fractional offsets, for N = n**3.

    Both come out as the simple products 3mn(n-m) and 3(m+1)n(m+1-n);
    that is checked on the way out.
    """
    n = _check_root(n, m)
    N = n ** 3
    d1, d2 = N - m ** 3, (m + 1) ** 3 - N
    delta1 = d1 - (n - m) ** 3
    delta2 = d2 - (m + 1 - n) ** 3
    if delta1 != 3 * m * n * (n - m) or delta2 != 3 * (m + 1) * n * (m + 1 - n):
        raise ArithmeticError(f"delta identities fail at n={n}, m={m}")
    return DeltaPair(delta1, delta2)


def enestrom_reconstruct(n, m: int) -> Fraction:
    """Rebuild n from its deltas: ``((m+1)**2 D1 + m**2 D2) / ((m+1) D1 + m D2)``."""
    n = _check_root(n, m)
    D1, D2 = enestrom_deltas(n, m)
    den = (m + 1) * D1 + m * D2
    value = ((m + 1) ** 2 * D1 + m * m * D2) / den
    if value != m + (m + 1) * D1 / den:
        raise ArithmeticError("the two forms of the reconstruction disagree")
    if value != n:
        raise ArithmeticError(f"reconstruction gave {value}, expected {n}")
    return value


def gradient_identities(n, m: int) -> list:
    """Exact chord-gradient identities at a rational root n of N = n**3."""
    n = _check_root(n, m)
    N = n ** 3
    d1, d2 = N - m ** 3, (m + 1) ** 3 - N
    g1 = d1 / (n - m)
    g2 = d2 / (m + 1 - n)
    return [
        IdentityCheck("lower gradient", g1, n * n + n * m + m * m),
        IdentityCheck("upper gradient", g2, (m + 1) ** 2 + (m + 1) * n + n * n),
        IdentityCheck("gradient difference", g2 - g1, 2 * m + n + 1),
        IdentityCheck("counterpoised difference", (m + 1) * g1 - m * g2, n * n - m * (m + 1)),
        IdentityCheck("doubly weighted difference", (m + 1) ** 2 * g1 - m * m * g2,
                      (2 * m + 1) * n * n + m * (m + 1) * n),
    ]
