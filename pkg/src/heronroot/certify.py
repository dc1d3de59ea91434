"""Bound certificates by exact multiplication, exact error comparison, and scans.

Every side-of-the-root claim in the package ends up here: a candidate is
raised to the k-th power and compared with N, with no decimal anywhere in
the decision.  Decimals only appear when a result is rendered.
"""

from __future__ import annotations

import enum
import functools
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .exactnum import (
    DomainError,
    as_rational,
    decimal_string,
    root_enclosure,
)


class BoundKind(str, enum.Enum):
    EXACT = "EXACT"
    UPPER = "UPPER"
    LOWER = "LOWER"
    ENCLOSED = "ENCLOSED"


class Closeness(str, enum.Enum):
    """Outcome of ``compare_errors(a, b, ...)`` from the point of view of ``a``."""

    CLOSER = "closer"
    FARTHER = "farther"
    EQUIDISTANT = "equidistant"


@dataclass(frozen=True)
class Certificate:
    value: Fraction
    N: Fraction
    k: int
    value_power: Fraction
    verdict: BoundKind

    def __str__(self):
        word = {2: "square", 3: "cube"}.get(self.k, f"power {self.k}")
        return f"{self.verdict.value}; {word} = {self.value_power}"


@dataclass(frozen=True)
class Approximation:
    """A method's estimate of N**(1/k).

    ``interval`` is only set for ENCLOSED results, whose formula needed an
    irrational input; ``value`` is then the lower end.  ``raw`` keeps the
    numerator and denominator as the formula produced them, before reduction.
    """

    method: str
    N: Fraction
    k: int
    value: Fraction
    bound: BoundKind
    interval: Optional[tuple] = None
    raw: Optional[tuple] = None


@dataclass(frozen=True)
class IdentityCheck:
    name: str
    lhs: Fraction
    rhs: Fraction

    @property
    def ok(self) -> bool:
        return self.lhs == self.rhs


def _verdict(value_power, N) -> BoundKind:
    if value_power > N:
        return BoundKind.UPPER
    if value_power < N:
        return BoundKind.LOWER
    return BoundKind.EXACT


def certify_bound(value, N, k: int) -> Certificate:
    value, N = as_rational(value), as_rational(N)
    if value <= 0 or N <= 0:
        raise DomainError("certify_bound needs positive value and N")
    if k < 2:
        raise DomainError("certify_bound needs k >= 2")
    p = value ** k
    return Certificate(value, N, k, p, _verdict(p, N))


def make_approximation(method, N, k, value, raw=None) -> Approximation:
    value = as_rational(value)
    return Approximation(str(method), as_rational(N), k, value,
                         certify_bound(value, N, k).verdict, raw=raw)


def compare_errors(a, b, N, k: int) -> Closeness:
    """Decide whether ``|a - n|`` is less than, equal to or greater than ``|b - n|``.

    ``n = N**(1/k)``.  Same-side pairs compare directly; a pair straddling
    the root is settled by which side of the root their midpoint falls on.
    """
    a, b, N = as_rational(a), as_rational(b), as_rational(N)
    if a <= 0 or b <= 0:
        raise DomainError("compare_errors needs positive candidates")
    if a == b:
        return Closeness.EQUIDISTANT
    sa = certify_bound(a, N, k).verdict
    sb = certify_bound(b, N, k).verdict
    if sa is BoundKind.EXACT:
        return Closeness.CLOSER
    if sb is BoundKind.EXACT:
        return Closeness.FARTHER
    if sa is sb:
        a_closer = a < b if sa is BoundKind.UPPER else a > b
        return Closeness.CLOSER if a_closer else Closeness.FARTHER
    mid = certify_bound((a + b) / 2, N, k).verdict
    if mid is BoundKind.EXACT:
        return Closeness.EQUIDISTANT
    # midpoint above the root: the lower candidate is nearer
    lower_wins = mid is BoundKind.UPPER
    a_is_lower = sa is BoundKind.LOWER
    return Closeness.CLOSER if lower_wins == a_is_lower else Closeness.FARTHER


def compare_key(N, k: int):
    """``functools.cmp_to_key`` wrapper ordering candidate values by exact error."""

    def cmp(a, b):
        c = compare_errors(a, b, N, k)
        return -1 if c is Closeness.CLOSER else (1 if c is Closeness.FARTHER else 0)

    return functools.cmp_to_key(cmp)


def error_enclosure(value, N, k: int, digits: int) -> tuple:
    """(lo, hi) with ``lo <= value - N**(1/k) <= hi``; width at most 10**-digits."""
    enc = root_enclosure(N, k, digits)
    value = as_rational(value)
    return value - enc.hi, value - enc.lo


def verify_error_identity(n, m: int) -> IdentityCheck:
    """Check the exact error formula of the weighted cube-root rule at a rational root n.

    With d1, d2 taken from ``N = n**3``, the rule's value minus n must equal
    ``(n**2 - m(m+1)) (n - m) (m + 1 - n) / ((m+1) d1 + m d2)``.
    """
    n = as_rational(n)
    if not m < n < m + 1:
        raise DomainError("need m < n < m+1")
    N = n ** 3
    d1, d2 = N - m ** 3, (m + 1) ** 3 - N
    den = (m + 1) * d1 + m * d2
    lhs = ((m + 1) ** 2 * d1 + m ** 2 * d2) / den - n
    rhs = (n ** 2 - m * (m + 1)) * (n - m) * (m + 1 - n) / den
    return IdentityCheck("error identity", lhs, rhs)


# -- scans ------------------------------------------------------------------


def _heron_parts(N: int, m: int) -> tuple:
    """Heron's cube-root value as an integer pair (num, den), no reduction."""
    d1, d2 = N - m ** 3, (m + 1) ** 3 - N
    den = (m + 1) * d1 + m * d2
    return m * den + (m + 1) * d1, den


def _within(num: int, den: int, N: int, eps_num: int, eps_den: int) -> bool:
    """Exact test of ``(h - eps)**3 < N < (h + eps)**3`` for h = num/den, eps = eps_num/eps_den."""
    D = den * eps_den
    c = num * eps_den
    e = eps_num * den
    scaled = N * D ** 3
    return (c - e) ** 3 < scaled < (c + e) ** 3


@dataclass
class BandReport:
    m: int
    count: int
    smyly_ok: bool
    webb_ok: bool
    smyly_witness: Optional[int] = None
    webb_witness: Optional[int] = None


@dataclass
class SmylyReport:
    m_lo: int
    m_hi: int
    bands: list = field(default_factory=list)

    @property
    def total(self) -> int:
        return sum(b.count for b in self.bands)

    @property
    def ok(self) -> bool:
        return all(b.smyly_ok for b in self.bands)

    @property
    def webb_failures(self) -> list:
        return [b.m for b in self.bands if not b.webb_ok]


class BoundViolation(AssertionError):
    def __init__(self, m, N):
        super().__init__(f"|Heron(N) - cbrt(N)| >= 1/(12 m^2) at m={m}, N={N}")
        self.m = m
        self.N = N


def _scan_band(m: int) -> BandReport:
    report = BandReport(m, 0, True, True)
    smyly = (1, 12 * m * m)
    webb = (3, 80 * m * m)
    for N in range(m ** 3 + 1, (m + 1) ** 3):
        num, den = _heron_parts(N, m)
        report.count += 1
        if report.smyly_ok and not _within(num, den, N, *smyly):
            report.smyly_ok = False
            report.smyly_witness = N
        if report.webb_ok and not _within(num, den, N, *webb):
            report.webb_ok = False
            report.webb_witness = N
    return report


def smyly_scan(m_lo: int, m_hi: int, workers: int = 1, strict: bool = True) -> SmylyReport:
    """Check ``|Heron(N) - cbrt(N)| < 1/(12 m**2)`` for every non-cube N in the bands.

    The tighter ``3/(80 m**2)`` is checked alongside but only reported.  With
    ``strict`` a violation of the first bound raises ``BoundViolation``.
    Bands are independent, so ``workers > 1`` farms them out to processes;
    the report is the same as the sequential one.
    """
    if not 1 <= m_lo <= m_hi:
        raise DomainError("need 1 <= m_lo <= m_hi")
    ms = range(m_lo, m_hi + 1)
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            bands = list(pool.map(_scan_band, ms))
    else:
        bands = [_scan_band(m) for m in ms]
    report = SmylyReport(m_lo, m_hi, bands)
    if strict:
        for b in bands:
            if not b.smyly_ok:
                raise BoundViolation(b.m, b.smyly_witness)
    return report


def heron_sign_predicted(N: int, m: int) -> int:
    """Sign of ``N**2 - m**3 (m+1)**3``: +1 where Heron's rule overshoots."""
    t = N * N - (m * (m + 1)) ** 3
    return (t > 0) - (t < 0)


@dataclass(frozen=True)
class ErrorSample:
    N: int
    m: int
    method: str
    value: Fraction
    signed_error_lo: Fraction
    signed_error_hi: Fraction
    sign: int
    digits: int

    @property
    def decimal(self) -> str:
        return decimal_string(self.signed_error_lo, self.digits)


def _band_samples(m: int, digits: int) -> list:
    from .cuberoot import CubeMethod

    out = []
    for N in range(m ** 3, (m + 1) ** 3):
        num, den = _heron_parts(N, m)
        value = Fraction(num, den)
        cube = value ** 3
        sign = (cube > N) - (cube < N)
        if N != m ** 3 and sign != heron_sign_predicted(N, m):
            raise AssertionError(f"sign rule broken at N={N}")
        lo, hi = error_enclosure(value, N, 3, digits)
        out.append(ErrorSample(N, m, CubeMethod.HERON.value, value, lo, hi, sign, digits))
    return out


def wave_samples(m_lo: int, m_hi: int, digits: int, workers: int = 1) -> list:
    """Signed error of Heron's cube-root rule for every N with m_lo <= floor(cbrt N) <= m_hi."""
    if not 1 <= m_lo <= m_hi:
        raise DomainError("need 1 <= m_lo <= m_hi")
    if digits < 1:
        raise DomainError("digits must be >= 1")
    ms = range(m_lo, m_hi + 1)
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            bands = list(pool.map(_band_samples, ms, [digits] * len(ms)))
    else:
        bands = [_band_samples(m, digits) for m in ms]
    return [s for band in bands for s in band]


@dataclass(frozen=True)
class TableRow:
    method: str
    approx: Approximation
    err_lo: Fraction
    err_hi: Fraction


def method_table(N: int, k: int, digits: int) -> list:
    """One row per method for degree k at N, closest estimate first."""
    from .cuberoot import CubeMethod, cube_estimate
    from .squareroot import SqrtMethod, sqrt_estimate

    if N < 2:
        raise DomainError("method_table needs N >= 2")
    if k == 3:
        approxes = [cube_estimate(N, meth, digits) for meth in CubeMethod]
    elif k == 2:
        approxes = [sqrt_estimate(N, meth) for meth in SqrtMethod]
    else:
        raise DomainError("method_table supports k = 2 or 3")
    rows = []
    for a in approxes:
        if a.interval is not None:
            lo = error_enclosure(a.interval[0], N, k, digits)[0]
            hi = error_enclosure(a.interval[1], N, k, digits)[1]
        else:
            lo, hi = error_enclosure(a.value, N, k, digits)
        rows.append(TableRow(a.method, a, lo, hi))
    key = compare_key(N, k)
    rows.sort(key=lambda r: r.method)
    rows.sort(key=lambda r: key(r.approx.value))
    return rows
