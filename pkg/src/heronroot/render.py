"""CSV, Markdown and SVG output for tables and error samples.

Machine formats carry exact fractions as integer numerator/denominator
columns; decimals are for reading only.
"""

from __future__ import annotations

import csv
import io
from fractions import Fraction

from .exactnum import decimal_string, mixed

CSV_COLUMNS = ["N", "m", "method", "value_num", "value_den", "bound_kind", "err_lo", "err_hi"]


def _csv_row(N, m, method, value: Fraction, bound, err_lo, err_hi, digits):
    return [str(N), str(m), method, str(value.numerator), str(value.denominator), bound,
            decimal_string(err_lo, digits), decimal_string(err_hi, digits)]


def table_csv(N: int, m: int, rows, digits: int) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_COLUMNS)
    for r in rows:
        w.writerow(_csv_row(N, m, r.method, r.approx.value, r.approx.bound.value,
                            r.err_lo, r.err_hi, digits))
    return buf.getvalue()


def table_markdown(N: int, k: int, rows, digits: int) -> str:
    root = {2: "sqrt", 3: "cbrt"}[k]
    lines = [
        f"Estimates of {root}({N}), closest first",
        "",
        "| rank | method | value | mixed | bound | error lo | error hi |",
        "|---:|---|---|---|---|---:|---:|",
    ]
    for i, r in enumerate(rows, 1):
        a = r.approx
        if a.interval is not None:
            value = f"[{a.interval[0]}, {a.interval[1]}]"
            shown = f"{decimal_string(a.interval[0], digits)}…"
        else:
            value, shown = str(a.value), mixed(a.value)
        lines.append(f"| {i} | {r.method} | {value} | {shown} | {a.bound.value} | "
                     f"{decimal_string(r.err_lo, digits)} | {decimal_string(r.err_hi, digits)} |")
    return "\n".join(lines) + "\n"


def samples_csv(samples) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_COLUMNS)
    for s in samples:
        kind = "EXACT" if s.sign == 0 else ("UPPER" if s.sign > 0 else "LOWER")
        w.writerow(_csv_row(s.N, s.m, s.method, s.value, kind,
                            s.signed_error_lo, s.signed_error_hi, s.digits))
    return buf.getvalue()


def read_csv_values(text: str) -> list:
    """Parse CSV written above back into (N, method, Fraction) triples."""
    rows = csv.DictReader(io.StringIO(text))
    return [(int(r["N"]), r["method"], Fraction(int(r["value_num"]), int(r["value_den"])))
            for r in rows]


# -- SVG ----------------------------------------------------------------------

WIDTH, HEIGHT = 1200, 400
LEFT, RIGHT, TOP, BOTTOM = 70, 20, 40, 50


def _px(x: Fraction) -> str:
    return decimal_string(x, 2)


def wave_svg(samples, title: str = "Signed error of Heron's cube-root rule") -> str:
    """Static SVG: one polyline per band m, each band scaled to its own 1/(12 m^2).

    Dashed lines mark the +-1/(12 m^2) envelope, dotted ones the 3/(80 m^2)
    bound credited to Webb.  Each band group records the first N at which the
    rule overshoots in ``data-crossover``.
    """
    if not samples:
        raise ValueError("no samples to plot")
    bands: dict = {}
    for s in samples:
        bands.setdefault(s.m, []).append(s)
    n_lo = min(s.N for s in samples)
    n_hi = max(s.N for s in samples) + 1
    plot_w = Fraction(WIDTH - LEFT - RIGHT)
    plot_h = Fraction(HEIGHT - TOP - BOTTOM)
    zero_y = TOP + plot_h / 2

    def x_of(N):
        return LEFT + plot_w * (N - n_lo) / (n_hi - n_lo)

    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{WIDTH}" height="{HEIGHT}" '
        f'viewBox="0 0 {WIDTH} {HEIGHT}">',
        f'<title>{title}</title>',
        '<rect x="0" y="0" width="100%" height="100%" fill="white"/>',
        f'<text x="{WIDTH // 2}" y="24" text-anchor="middle" font-family="sans-serif" '
        f'font-size="16">{title}</text>',
        f'<line class="axis" x1="{LEFT}" y1="{_px(zero_y)}" x2="{WIDTH - RIGHT}" y2="{_px(zero_y)}" '
        'stroke="black" stroke-width="1"/>',
        f'<text x="{LEFT}" y="{HEIGHT - 15}" font-family="sans-serif" font-size="12">N = {n_lo}</text>',
        f'<text x="{WIDTH - RIGHT}" y="{HEIGHT - 15}" text-anchor="end" font-family="sans-serif" '
        f'font-size="12">N = {n_hi}</text>',
    ]
    for m in sorted(bands):
        band = bands[m]
        smyly = Fraction(1, 12 * m * m)
        webb = Fraction(3, 80 * m * m)
        half = smyly * Fraction(21, 20)

        def y_of(err, half=half):
            return zero_y - (plot_h / 2) * err / half

        x0, x1 = x_of(band[0].N), x_of(band[-1].N + 1)
        cross = next((s.N for s in band if s.sign > 0), None)
        out.append(f'<g class="band" data-m="{m}" data-zero-y="{_px(zero_y)}" '
                   f'data-crossover="{cross if cross is not None else ""}" '
                   f'data-scale="{half.numerator}/{half.denominator}">')
        for bound, style, label in ((smyly, 'stroke-dasharray="6,3"', "envelope"),
                                    (webb, 'stroke-dasharray="2,2"', "webb")):
            for sgn in (1, -1):
                y = _px(y_of(sgn * bound))
                out.append(f'<line class="{label}" x1="{_px(x0)}" y1="{y}" x2="{_px(x1)}" y2="{y}" '
                           f'stroke="gray" stroke-width="0.8" {style}/>')
        pts = " ".join(
            f"{_px(x_of(s.N))},{_px(y_of((s.signed_error_lo + s.signed_error_hi) / 2))}" for s in band)
        out.append(f'<polyline class="error" points="{pts}" fill="none" stroke="#1f77b4" '
                   'stroke-width="1"/>')
        if cross is not None:
            xc = _px(x_of(cross))
            out.append(f'<line class="crossover" x1="{xc}" y1="{TOP}" x2="{xc}" y2="{HEIGHT - BOTTOM}" '
                       'stroke="#d62728" stroke-width="0.5"/>')
        out.append(f'<line class="band-edge" x1="{_px(x0)}" y1="{TOP}" x2="{_px(x0)}" '
                   f'y2="{HEIGHT - BOTTOM}" stroke="#ccc" stroke-width="0.5"/>')
        out.append("</g>")
    out.append("</svg>")
    return "\n".join(out) + "\n"
