"""Square-root bounds, Heronian iteration, continued fractions and Mellema's formula."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction

from .bracket import PowerBracket, bracket
from .certify import Approximation, BoundKind, make_approximation
from .exactnum import DomainError, as_rational, floor_root


class SqrtMethod(str, enum.Enum):
    CHORD_LOWER = "chord_lower"
    WEIGHTED_UPPER = "weighted_upper"
    BINOMIAL_LOW = "binomial_low"
    BINOMIAL_HIGH = "binomial_high"

    def __str__(self):
        return self.value


def _chord_lower(b: PowerBracket) -> tuple:
    den = 2 * b.m + 1
    return b.m * den + b.d1, den


def _weighted_upper(b: PowerBracket) -> tuple:
    m, d1, d2 = b.m, b.d1, b.d2
    return (m + 1) ** 2 * d1 + m * m * d2, (m + 1) * d1 + m * d2


def _binomial_low(b: PowerBracket) -> tuple:
    den = 2 * b.m
    return b.m * den + b.d1, den


def _binomial_high(b: PowerBracket) -> tuple:
    den = 2 * (b.m + 1)
    return (b.m + 1) * den - b.d2, den


_FORMS = {
    SqrtMethod.CHORD_LOWER: _chord_lower,
    SqrtMethod.WEIGHTED_UPPER: _weighted_upper,
    SqrtMethod.BINOMIAL_LOW: _binomial_low,
    SqrtMethod.BINOMIAL_HIGH: _binomial_high,
}


def sqrt_estimate(N: int, method) -> Approximation:
    """Estimate sqrt(N); the formulas apply for any d1, d2, no range check."""
    method = SqrtMethod(method)
    b = bracket(N, 2)
    if b.exact:
        return Approximation(method.value, Fraction(N), 2, Fraction(b.m),
                             BoundKind.EXACT, raw=(b.m, 1))
    num, den = _FORMS[method](b)
    return make_approximation(method, N, 2, Fraction(num, den), raw=(num, den))


def heron_step(N, x) -> Fraction:
    x = as_rational(x)
    if x <= 0:
        raise DomainError("iterate must be positive")
    return (as_rational(N) / x + x) / 2


def heron_iterate(N, x0, steps: int) -> list:
    """Iterates x1..x_steps of ``x -> (N/x + x)/2``; x0 itself is not included."""
    N, x = as_rational(N), as_rational(x0)
    if N <= 0:
        raise DomainError("N must be positive")
    if x <= 0:
        raise DomainError("starting value must be positive")
    if steps < 1:
        raise DomainError("steps must be >= 1")
    out = []
    for _ in range(steps):
        x = heron_step(N, x)
        out.append(x)
    return out


@dataclass(frozen=True)
class CfExpansion:
    """Partial quotients of sqrt(N) and their convergents.

    ``convergent(i)`` is 1-based: convergent 1 is a0/1.
    """

    N: int
    terms: tuple
    convergents: tuple

    def convergent(self, i: int) -> Fraction:
        if not 1 <= i <= len(self.convergents):
            raise IndexError(f"convergent {i} not computed")
        return self.convergents[i - 1]


def cf_sqrt(N: int, count: int) -> CfExpansion:
    if count < 1:
        raise DomainError("count must be >= 1")
    a0 = floor_root(N, 2)
    if N < 1 or a0 * a0 == N:
        raise DomainError(f"{N} is a perfect square")
    terms = [a0]
    mi, qi, ai = 0, 1, a0
    while len(terms) < count:
        mi = qi * ai - mi
        qi = (N - mi * mi) // qi
        ai = (a0 + mi) // qi
        terms.append(ai)
    convergents = []
    p_prev, p = 1, a0
    q_prev, q = 0, 1
    convergents.append(Fraction(p, q))
    for a in terms[1:]:
        p_prev, p = p, a * p + p_prev
        q_prev, q = q, a * q + q_prev
        convergents.append(Fraction(p, q))
    return CfExpansion(N, tuple(terms), tuple(convergents))


def mellema(p, q, a, b) -> Fraction:
    """False position on ``f(x) = (x+p)**2 - q``; it can only give back q."""
    p, q, a, b = map(as_rational, (p, q, a, b))
    fa = (a + p) ** 2 - q
    fb = (b + p) ** 2 - q
    if fa == fb:
        raise DomainError("f(a) == f(b): false position is degenerate")
    return ((a + p) ** 2 * fb - (b + p) ** 2 * fa) / (fb - fa)
