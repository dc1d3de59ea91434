"""Command line front end.

    heronroot root 100 --degree 3 --method heron
    heronroot compare 100 --degree 3 --format markdown
    heronroot wave --m-lo 2 --m-hi 12 --format svg --output wave.svg
    heronroot verify
    heronroot cf 135 --count 8
    heronroot segment --h 1 --b 4 --digits 6
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import goldens, render
from .certify import certify_bound, error_enclosure, method_table, wave_samples
from .cuberoot import CubeMethod, cube_estimate
from .exactnum import DomainError, decimal_string, floor_root, mixed, parse_rational
from .rescale import RescalePlan, rescaled_estimate
from .segment import SegmentDims, choose_estimate, true_area_enclosure
from .squareroot import SqrtMethod, cf_sqrt, sqrt_estimate

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


def _method_name(text: str) -> str:
    return text.strip().lower().replace("-", "_")


def _emit(text: str, output) -> None:
    if output:
        Path(output).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def cmd_root(args) -> int:
    N = parse_rational(args.N)
    k = args.degree
    method = _method_name(args.method)
    valid = [m.value for m in (CubeMethod if k == 3 else SqrtMethod)]
    if method not in valid:
        raise DomainError(f"unknown method {args.method!r} for degree {k}; choose from {', '.join(valid)}")
    if args.scale == 1 and N.denominator == 1:
        N = int(N)
        a = cube_estimate(N, method, args.digits) if k == 3 else sqrt_estimate(N, method)
    else:
        res = rescaled_estimate(RescalePlan(N, k, args.scale, method), args.digits)
        a = res.approx
        inner = res.inner
        print(f"inner estimate at {inner.N}: {inner.value} = {mixed(inner.value)} ({inner.bound.value})")
        if a.interval is None:
            print(f"divided by {args.scale}: {res.unreduced()}")
    word = "cube" if k == 3 else "square"
    if a.interval is not None:
        lo, hi = a.interval
        print(f"[{lo}, {hi}] ({a.bound.value}; {word} root of N lies in "
              f"[{decimal_string(lo, args.digits)}, {decimal_string(hi, args.digits)}])")
        return EXIT_OK
    cert = certify_bound(a.value, N, k)
    print(f"{a.value} = {mixed(a.value)} ({cert.verdict.value}; {word} = {cert.value_power})")
    lo, hi = error_enclosure(a.value, N, k, args.digits)
    print(f"error in [{decimal_string(lo, args.digits)}, {decimal_string(hi, args.digits)}]")
    return EXIT_OK


def cmd_compare(args) -> int:
    N, k = args.N, args.degree
    rows = method_table(N, k, args.digits)
    m = floor_root(N, k)
    if args.format == "csv":
        text = render.table_csv(N, m, rows, args.digits)
    else:
        text = render.table_markdown(N, k, rows, args.digits)
    _emit(text, args.output)
    return EXIT_OK


def cmd_wave(args) -> int:
    samples = wave_samples(args.m_lo, args.m_hi, args.digits, workers=args.workers)
    if args.format == "svg":
        text = render.wave_svg(samples)
    else:
        text = render.samples_csv(samples)
    _emit(text, args.output)
    return EXIT_OK


def cmd_verify(args) -> int:
    failures = goldens.run_checks(goldens.all_checks(full=not args.quick))
    return EXIT_FAIL if failures else EXIT_OK


def cmd_cf(args) -> int:
    e = cf_sqrt(args.N, args.count)
    print(f"sqrt({e.N}) = [{e.terms[0]}; {', '.join(map(str, e.terms[1:]))}]")
    for i, c in enumerate(e.convergents, 1):
        side = certify_bound(c, e.N, 2).verdict.value
        print(f"{i:>3}  {c}  ({side})")
    return EXIT_OK


def cmd_segment(args) -> int:
    seg = SegmentDims(parse_rational(args.h), parse_rational(args.b))
    choice = choose_estimate(seg)
    print(f"archimedean 2hb/3 = {choice.archimedean} = {mixed(choice.archimedean)}")
    print(f"traditional h(b+h)/2 = {choice.traditional} = {mixed(choice.traditional)}")
    print(f"choice: {choice.choice.value}")
    if args.oracle:
        enc = true_area_enclosure(seg, args.digits)
        print(f"true area in [{decimal_string(enc.lo, args.digits + 1)}, "
              f"{decimal_string(enc.hi, args.digits + 1)}]")
    return EXIT_OK


def _positive(text: str) -> int:
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError("must be >= 1")
    return v


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="heronroot",
                                description="Exact ancient root approximations and their certificates.")
    sub = p.add_subparsers(dest="command", required=True)

    r = sub.add_parser("root", help="one estimate with its certificate")
    r.add_argument("N", help="integer, or p/q when --scale makes s^k N an integer")
    r.add_argument("--degree", type=int, choices=(2, 3), default=3)
    r.add_argument("--method", default="heron")
    r.add_argument("--scale", type=_positive, default=1)
    r.add_argument("--digits", type=_positive, default=8)
    r.set_defaults(func=cmd_root)

    c = sub.add_parser("compare", help="all methods at N, closest first")
    c.add_argument("N", type=int)
    c.add_argument("--degree", type=int, choices=(2, 3), default=3)
    c.add_argument("--format", choices=("csv", "markdown"), default="markdown")
    c.add_argument("--digits", type=_positive, default=8)
    c.add_argument("--output")
    c.set_defaults(func=cmd_compare)

    w = sub.add_parser("wave", help="signed error of Heron's rule across N")
    w.add_argument("--m-lo", type=_positive, default=2)
    w.add_argument("--m-hi", type=_positive, default=12)
    w.add_argument("--digits", type=_positive, default=10)
    w.add_argument("--format", choices=("csv", "svg"), default="csv")
    w.add_argument("--workers", type=_positive, default=1)
    w.add_argument("--output")
    w.set_defaults(func=cmd_wave)

    v = sub.add_parser("verify", help="run every golden value and identity check")
    v.add_argument("--quick", action="store_true", help="skip the exhaustive m <= 50 error scan")
    v.set_defaults(func=cmd_verify)

    f = sub.add_parser("cf", help="continued fraction of sqrt(N)")
    f.add_argument("N", type=int)
    f.add_argument("--count", type=_positive, default=8)
    f.set_defaults(func=cmd_cf)

    s = sub.add_parser("segment", help="circular segment area estimates")
    s.add_argument("--h", required=True)
    s.add_argument("--b", required=True)
    s.add_argument("--digits", type=_positive, default=6)
    s.add_argument("--no-oracle", dest="oracle", action="store_false")
    s.set_defaults(func=cmd_segment)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "m_lo", 1) > getattr(args, "m_hi", 1):
        parser.error("--m-lo must not exceed --m-hi")
    try:
        return args.func(args)
    except (DomainError, ValueError) as exc:
        print(f"heronroot {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
