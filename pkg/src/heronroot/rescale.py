"""Estimate a root at a larger argument and scale back down.

``N**(1/k) = (s**k N)**(1/k) / s``.  Dividing by s keeps the side of the
root, and the methods here are more accurate for larger arguments.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .certify import Approximation, BoundKind, certify_bound
from .cuberoot import CubeMethod, cube_estimate
from .exactnum import DomainError, as_rational, mixed_parts
from .squareroot import SqrtMethod, sqrt_estimate


@dataclass(frozen=True)
class RescalePlan:
    N: Fraction
    k: int
    scale: int
    method: str

    def __post_init__(self):
        object.__setattr__(self, "N", as_rational(self.N))
        if self.k not in (2, 3):
            raise DomainError("degree must be 2 or 3")
        if self.scale < 1:
            raise DomainError("scale must be >= 1")
        if self.N <= 0:
            raise DomainError("N must be positive")
        if (self.scaled_N).denominator != 1:
            raise DomainError(f"s^k N = {self.scaled_N} is not an integer")
        cls = CubeMethod if self.k == 3 else SqrtMethod
        object.__setattr__(self, "method", cls(self.method).value)

    @property
    def scaled_N(self) -> Fraction:
        return self.N * self.scale ** self.k


@dataclass(frozen=True)
class RescaledApproximation:
    approx: Approximation
    inner: Approximation
    scale: int

    @property
    def value(self) -> Fraction:
        return self.approx.value

    @property
    def bound(self) -> BoundKind:
        return self.approx.bound

    def unreduced(self) -> str:
        """Inner estimate in lowest terms with its denominator multiplied by s.

        This is how a hand computation divides by s, e.g. 4 322/502 for
        cbrt(800)/2, before any final cancellation.
        """
        if self.inner.interval is not None:
            raise ValueError("enclosed estimates have no single fraction")
        v = self.inner.value
        return mixed_parts(v.numerator, v.denominator * self.scale)


def rescaled_estimate(plan: RescalePlan, precision_digits: int = 12) -> RescaledApproximation:
    M = int(plan.scaled_N)
    if plan.k == 3:
        inner = cube_estimate(M, plan.method, precision_digits)
    else:
        inner = sqrt_estimate(M, plan.method)
    s = plan.scale
    interval = None
    if inner.interval is not None:
        interval = (inner.interval[0] / s, inner.interval[1] / s)
    value = inner.value / s
    if inner.bound is BoundKind.ENCLOSED:
        bound = BoundKind.ENCLOSED
    else:
        bound = certify_bound(value, plan.N, plan.k).verdict
        if bound is not inner.bound:
            raise ArithmeticError("rescaling changed the side of the root")
    approx = Approximation(plan.method, plan.N, plan.k, value, bound,
                           interval=interval)
    return RescaledApproximation(approx, inner, s)
