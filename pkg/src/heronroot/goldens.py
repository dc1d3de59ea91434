"""Golden values and identity sweeps behind the ``verify`` command.

Every check is deterministic: the random sweeps use a fixed seed.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction as F
from typing import Callable

from .bracket import bracket
from .certify import (
    BoundKind,
    Closeness,
    certify_bound,
    compare_errors,
    heron_sign_predicted,
    smyly_scan,
    verify_error_identity,
)
from .cuberoot import (
    cube_estimate,
    enestrom_deltas,
    enestrom_reconstruct,
    gradient_identities,
    heron_family,
    pendlebury_closed_form,
    pendlebury_step,
)
from .exactnum import parse_rational
from .rescale import RescalePlan, rescaled_estimate
from .segment import (
    SegmentDims,
    estimate_archimedean,
    estimate_traditional,
    true_area_enclosure,
)
from .squareroot import cf_sqrt, heron_iterate, mellema, sqrt_estimate

SEED = 20140217


@dataclass(frozen=True)
class Check:
    name: str
    run: Callable[[], bool]


def _rescaled(N, k, s, method):
    return rescaled_estimate(RescalePlan(N, k, s, method))


# (label, thunk producing the value, expected mixed number, expected side or None)
GOLDEN_VALUES = [
    ("Heron cbrt 100", lambda: cube_estimate(100, "heron"), "4 9/14", BoundKind.UPPER),
    ("Heron cbrt 85", lambda: cube_estimate(85, "heron"), "4 21/53", BoundKind.LOWER),
    ("chord lower cbrt 100", lambda: cube_estimate(100, "chord_lower"), "4 36/61", BoundKind.LOWER),
    ("chord lower cbrt 85", lambda: cube_estimate(85, "chord_lower"), "4 21/61", BoundKind.LOWER),
    ("Heron cbrt 5", lambda: cube_estimate(5, "heron"), "1 8/11", BoundKind.UPPER),
    ("cbrt 800 / 2", lambda: _rescaled(100, 3, 2, "heron"), "4 322/502", BoundKind.LOWER),
    ("cbrt 2700 / 3", lambda: _rescaled(100, 3, 3, "heron"), "4 7328/11421", BoundKind.UPPER),
    ("cbrt 40 / 2", lambda: _rescaled(5, 3, 2, "heron"), "1 22/31", BoundKind.LOWER),
    ("cbrt 135 / 3", lambda: _rescaled(5, 3, 3, "heron"), "1 22/31", BoundKind.LOWER),
    ("cbrt 320 / 4", lambda: _rescaled(5, 3, 4, "heron"), "1 615/866", BoundKind.UPPER),
    ("sqrt 75 binomial low", lambda: sqrt_estimate(75, "binomial_low"), "8 11/16", BoundKind.UPPER),
    ("sqrt 75 binomial high", lambda: sqrt_estimate(75, "binomial_high"), "8 2/3", BoundKind.UPPER),
    ("sqrt 63 binomial high", lambda: sqrt_estimate(63, "binomial_high"), "7 15/16", BoundKind.UPPER),
    ("sqrt 135 binomial high", lambda: sqrt_estimate(135, "binomial_high"), "11 5/8", BoundKind.UPPER),
    ("sqrt 28 binomial low", lambda: sqrt_estimate(28, "binomial_low"), "5 3/10", BoundKind.UPPER),
    ("sqrt 28 binomial high", lambda: sqrt_estimate(28, "binomial_high"), "5 1/3", BoundKind.UPPER),
    ("sqrt 136 binomial high", lambda: sqrt_estimate(136, "binomial_high"), "11 2/3", BoundKind.UPPER),
    ("sqrt 252 / 3", lambda: _rescaled(28, 2, 3, "binomial_high"), "5 7/24", BoundKind.UPPER),
    ("sqrt 1215 / 3", lambda: _rescaled(135, 2, 3, "binomial_high"), "11 13/21", BoundKind.UPPER),
    ("sqrt 6300 / 10 weighted", lambda: _rescaled(63, 2, 10, "weighted_upper"), "7 1183/1262", BoundKind.UPPER),
    ("sqrt 72000 / 10 weighted", lambda: _rescaled(720, 2, 10, "weighted_upper"), "26 30002/36023",
     BoundKind.UPPER),
    ("Heronian step 720 from 27", lambda: heron_iterate(720, 27, 1)[0], "26 5/6", None),
    ("Heronian step 135 from 35/3", lambda: heron_iterate(135, F(35, 3), 1)[0], "11 13/21", None),
    ("Heronian step 135 from 93/8", lambda: heron_iterate(135, F(93, 8), 1)[0], "11 307/496", None),
    ("Pendlebury step m=5 from 65/14", lambda: pendlebury_step(5, 1, F(65, 14)), "4 351/547", None),
]


def _value_of(obj):
    if hasattr(obj, "value") and not isinstance(obj, F):
        return obj.value, obj.bound
    return F(obj), None


def _golden_check(label, thunk, expected, side):
    def run():
        value, bound = _value_of(thunk())
        if value != parse_rational(expected):
            return False
        return side is None or bound is side

    return Check(f"golden: {label} = {expected}" + (f" ({side.value})" if side else ""), run)


def _coincidence():
    vals = {m: cube_estimate(100, m).value for m in ("heron", "curtze_sqrt", "curtze_linear")}
    return set(vals.values()) == {F(65, 14)}


def _pendlebury_improves():
    n1 = pendlebury_step(5, 1, F(65, 14))
    return (n1 == pendlebury_closed_form(5)
            and compare_errors(n1, F(65, 14), 100, 3) is Closeness.CLOSER
            and certify_bound(n1, 100, 3).verdict is BoundKind.UPPER)


def _chord_vs_heron_100():
    return compare_errors(F(65, 14), cube_estimate(100, "chord_lower").value, 100, 3) is Closeness.CLOSER


def _cf_135():
    e = cf_sqrt(135, 8)
    return (e.convergent(4), e.convergent(6), e.convergent(8)) == (F(35, 3), F(93, 8), F(244, 21))


def _chain_135():
    a1, mid, a2 = F(35, 3), sqrt_estimate(135, "binomial_high").value, heron_iterate(135, F(35, 3), 1)[0]
    ups = all(certify_bound(x, 135, 2).verdict is BoundKind.UPPER for x in (a1, mid, a2))
    return a1 > mid > a2 and ups and sqrt_estimate(136, "binomial_high").value == a1


def _random_roots(rng, count, m_max=50):
    for _ in range(count):
        m = rng.randint(1, m_max)
        q = rng.randint(2, 10 ** 6)
        p = rng.randint(1, q - 1)
        yield m + F(p, q), m


def _identity_sweep(count=1000):
    rng = random.Random(SEED)
    for n, m in _random_roots(rng, count):
        enestrom_deltas(n, m)
        if enestrom_reconstruct(n, m) != n:
            return False
        if not all(c.ok for c in gradient_identities(n, m)):
            return False
        if not verify_error_identity(n, m).ok:
            return False
    return True


def _mellema_sweep(count=1000):
    rng = random.Random(SEED + 1)
    for _ in range(count):
        p, q, a, b = (F(rng.randint(-999, 999), rng.randint(1, 999)) for _ in range(4))
        if (a + p) ** 2 == (b + p) ** 2:
            continue
        if mellema(p, q, a, b) != q:
            return False
    return True


def _classification(m_max=30):
    for m in range(1, m_max + 1):
        for N in range(m ** 3, (m + 1) ** 3):
            a = cube_estimate(N, "heron")
            if N == m ** 3:
                if a.bound is not BoundKind.EXACT:
                    return False
                continue
            want = BoundKind.UPPER if heron_sign_predicted(N, m) > 0 else BoundKind.LOWER
            if a.bound is not want:
                return False
    return True


def _domination(m_max=30):
    for m in range(1, m_max + 1):
        for N in range(m ** 3 + 1, (m + 1) ** 3):
            h = cube_estimate(N, "heron")
            if h.bound is BoundKind.LOWER and not h.value > cube_estimate(N, "chord_lower").value:
                return False
    return True


def _family(m_max=100):
    for m in range(1, m_max + 1):
        fam = heron_family(m)
        if not fam.bound5 < fam.bound7 < fam.bound6:
            return False
    return True


def _smyly():
    return smyly_scan(1, 50).ok


def _segment_grid():
    if estimate_archimedean(SegmentDims(1, 3)) != estimate_traditional(SegmentDims(1, 3)):
        return False
    for i in range(1, 21):
        for j in range(1, 21):
            seg = SegmentDims(F(i, 20), F(i, 10) + F(j, 4))
            lo = true_area_enclosure(seg, 6).lo
            if not (estimate_archimedean(seg) < lo and estimate_traditional(seg) < lo):
                return False
    return True


def _heron_monotone():
    for N, x0 in ((720, 27), (135, F(35, 3)), (2, 1), (1000, 1)):
        xs = heron_iterate(N, x0, 6)
        if any(certify_bound(x, N, 2).verdict is BoundKind.LOWER for x in xs):
            return False
        if any(b > a for a, b in zip(xs, xs[1:])):
            return False
    return True


def all_checks(full: bool = True) -> list:
    checks = [_golden_check(*g) for g in GOLDEN_VALUES]
    checks += [
        Check("coincidence: both Curtze forms and Heron agree at N=100", _coincidence),
        Check("Pendlebury step improves on Heron at N=100", _pendlebury_improves),
        Check("Heron 4 9/14 beats chord lower 4 36/61 at N=100", _chord_vs_heron_100),
        Check("Heron 4 21/53 beats chord lower 4 21/61 at N=85",
              lambda: compare_errors(F(233, 53), F(265, 61), 85, 3) is Closeness.CLOSER),
        Check("continued fraction of sqrt 135: convergents 4, 6, 8", _cf_135),
        Check("sqrt 135 chain 11 2/3 > 11 5/8 > 11 13/21, all upper", _chain_135),
        Check("Heronian iterates non-increasing and upper", _heron_monotone),
        Check("identities: deltas, reconstruction, gradients, error formula", _identity_sweep),
        Check("Mellema's formula recovers q", _mellema_sweep),
        Check("family N = m^3 + m(2m+1), m <= 100", _family),
        Check("Heron sign law for m <= 30", _classification),
        Check("Heron dominates chord lower where both are lower, m <= 30", _domination),
        Check("segment estimates tie at b = 3h and lie below the true area", _segment_grid),
        Check("100 lies 36 above 64 and 25 below 125", lambda: bracket(100, 3).d1 == 36 and bracket(100, 3).d2 == 25),
    ]
    if full:
        checks.append(Check("|Heron - cbrt N| < 1/(12 m^2) for all N, m <= 50", _smyly))
    return checks


def run_checks(checks, out=print) -> int:
    failures = 0
    for c in checks:
        try:
            ok = bool(c.run())
        except Exception as exc:  # a crash is a failed check, reported with its cause
            ok = False
            out(f"FAIL  {c.name}  ({type(exc).__name__}: {exc})")
            failures += 1
            continue
        out(f"{'PASS' if ok else 'FAIL'}  {c.name}")
        failures += not ok
    out(f"{len(checks) - failures}/{len(checks)} checks passed")
    return failures
