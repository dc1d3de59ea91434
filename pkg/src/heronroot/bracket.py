"""Locate an integer between consecutive k-th powers."""

from __future__ import annotations

from dataclasses import dataclass

from .exactnum import DomainError, floor_root


@dataclass(frozen=True)
class PowerBracket:
    """``m**k <= N < (m+1)**k`` with gaps ``d1 = N - m**k`` and ``d2 = (m+1)**k - N``."""

    k: int
    N: int
    m: int
    d1: int
    d2: int

    @property
    def exact(self) -> bool:
        return self.d1 == 0

    @property
    def gap(self) -> int:
        return self.d1 + self.d2


def bracket(N: int, k: int) -> PowerBracket:
    if isinstance(N, bool) or not isinstance(N, int):
        raise DomainError(f"bracket needs an integer, got {N!r}")
    if k not in (2, 3):
        raise DomainError("bracket supports k = 2 or 3")
    if N < 1:
        raise DomainError("bracket needs N >= 1")
    m = floor_root(N, k)
    return PowerBracket(k, N, m, N - m ** k, (m + 1) ** k - N)
