"""The (2,2)-burst code: row sums mod 2q and one weighted VT constraint.

A (2,2)-burst touches at most one cell per row of the two-row array, so the
row sums reveal each cell's error magnitude and the weighted VT syndrome
pins down the column.
"""
from __future__ import annotations

from dataclasses import dataclass

from ..core import vt_syndrome
from .common import DecodeFailure, centered, unique


@dataclass(frozen=True)
class ParamsC22:
    n: int
    q: int
    a1: int = 0
    a2: int = 0
    a3: int = 0

    def __post_init__(self):
        if self.n < 1 or self.q < 2:
            raise ValueError("need n >= 1 and q >= 2")
        if not 0 <= self.a1 < 2 * self.q or not 0 <= self.a2 < 2 * self.q:
            raise ValueError(f"a1, a2 must lie in [0, {2 * self.q - 1}]")
        if not 0 <= self.a3 < self.modulus:
            raise ValueError(f"a3 must lie in [0, {self.modulus - 1}]")

    @property
    def modulus(self) -> int:
        return c22_modulus(self.n, self.q)

    @property
    def residues(self) -> tuple:
        return (self.a1, self.a2, self.a3)


def c22_modulus(n: int, q: int) -> int:
    return q * (q - 1) * (n - 1) + 1


def weighted_vt(x, q: int) -> int:
    return vt_syndrome(x[0::2]) + (2 * q - 1) * vt_syndrome(x[1::2])


def c22_syndrome(x, q: int) -> tuple:
    n = len(x)
    return (sum(x[0::2]) % (2 * q), sum(x[1::2]) % (2 * q), weighted_vt(x, q) % c22_modulus(n, q))


def params_c22_for(x, q: int) -> ParamsC22:
    """The instance whose code contains x."""
    return ParamsC22(len(x), q, *c22_syndrome(x, q))


def member_c22(x, p: ParamsC22) -> bool:
    if len(x) != p.n:
        raise ValueError(f"expected length {p.n}, got {len(x)}")
    return c22_syndrome(x, p.q) == p.residues


def _shift_cells(z, q, fixes):
    """Subtract error magnitudes at 1-based positions; None if a symbol leaves Z_q."""
    y = list(z)
    for pos, delta in fixes:
        v = y[pos - 1] - delta
        if not 0 <= v < q:
            return None
        y[pos - 1] = v
    return tuple(y)


def _representatives(r: int, modulus: int, limit: int, nonneg: bool):
    """Integers congruent to r with the given sign and absolute value at most limit."""
    out = []
    v = r % modulus if nonneg else r % modulus - modulus
    while abs(v) <= limit:
        out.append(v)
        v = v + modulus if nonneg else v - modulus
    return out


def decode_c22(z, p: ParamsC22):
    n, q = p.n, p.q
    z = tuple(z)
    if len(z) != n:
        raise DecodeFailure(f"expected length {n}, got {len(z)}")
    d1 = centered(sum(z[0::2]) - p.a1, 2 * q, -(q - 1))
    d2 = centered(sum(z[1::2]) - p.a2, 2 * q, -(q - 1))
    if abs(d1) > q - 1 or abs(d2) > q - 1:
        raise DecodeFailure("row sums are not within one cell error of the residues")
    if d1 == 0 and d2 == 0:
        if member_c22(z, p):
            return z
        raise DecodeFailure("row sums match but the weighted syndrome does not")
    cols1, cols2 = (n + 1) // 2, n // 2
    limit = (q - 1) * cols1 + (2 * q - 1) * (q - 1) * cols2
    nonneg = d2 > 0 or (d2 == 0 and d1 >= 0)
    r = weighted_vt(z, q) - p.a3
    w = 2 * q - 1
    found = []
    for big in _representatives(r, p.modulus, limit, nonneg):
        if d2 == 0:
            # only a row-1 cell moved
            if big % d1 == 0 and 1 <= big // d1 <= cols1:
                found.append(_shift_cells(z, q, [(2 * (big // d1) - 1, d1)]))
            continue
        if d1 == 0:
            if big % (w * d2) == 0 and 1 <= big // (w * d2) <= cols2:
                found.append(_shift_cells(z, q, [(2 * (big // (w * d2)), d2)]))
            continue
        denom = d1 + w * d2
        for num, parity in ((2 * big, 1), (2 * (big - d1), 0)):
            if num % denom:
                continue
            i = num // denom - parity
            if i % 2 != parity or not 1 <= i <= n - 1:
                continue
            odd_pos, even_pos = (i, i + 1) if parity else (i + 1, i)
            found.append(_shift_cells(z, q, [(odd_pos, d1), (even_pos, d2)]))
    return unique((y for y in found if y is not None and member_c22(y, p)), "codeword")
