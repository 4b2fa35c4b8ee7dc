"""Ball size, sphere-packing bound and redundancy in bits."""
from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass
from fractions import Fraction


def _check(n, q, t, s):
    if s < 1:
        raise ValueError("the closed form needs s >= 1; for s = 0 the ball size depends on the center")
    if q < 2 or not 1 <= t <= n:
        raise ValueError(f"need q >= 2 and 1 <= t <= n, got q={q}, t={t}, n={n}")


def ball_size_formula(n: int, q: int, t: int, s: int) -> int:
    _check(n, q, t, s)
    return q ** (s - 1) * ((q - 1) * (n - t + 1) + 1)


def max_code_size(n: int, q: int, t: int, s: int) -> Fraction:
    """Upper bound on the size of any (t,s)-burst correcting code."""
    _check(n, q, t, s)
    return Fraction(q ** (n - t + 1), (q - 1) * (n - t + 1) + 1)


def sphere_packing_redundancy(n: int, q: int, t: int, s: int) -> float:
    _check(n, q, t, s)
    return math.log2((q - 1) * (n - t + 1) + 1) + (t - 1) * math.log2(q)


def code_redundancy(code_size: int, n: int, q: int) -> float:
    if code_size < 1:
        raise ValueError("redundancy of an empty code is undefined")
    return n * math.log2(q) - math.log2(code_size)


@dataclass(frozen=True)
class BoundReport:
    n: int
    q: int
    t: int
    s: int
    ball_size: int
    max_code_size: Fraction
    min_redundancy_bits: float


def bound_report(n: int, q: int, t: int, s: int) -> BoundReport:
    return BoundReport(n, q, t, s, ball_size_formula(n, q, t, s), max_code_size(n, q, t, s),
                       sphere_packing_redundancy(n, q, t, s))


CSV_HEADER = ["n", "q", "t", "s", "ball_size", "min_redundancy_bits"]


def bounds_csv(reports) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_HEADER)
    for r in reports:
        w.writerow([r.n, r.q, r.t, r.s, r.ball_size, f"{r.min_redundancy_bits:.6f}"])
    return buf.getvalue()
