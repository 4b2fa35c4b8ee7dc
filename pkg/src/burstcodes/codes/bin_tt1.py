"""Binary P-bounded (t,t-1)-burst correcting code.

Five constraint families: VT mod tP, weight mod 2t, and row sums of the
k-row arrays (k = floor(t^2/2)) of x mod 2, of the marker sequence of x mod t
and of the marker sequence of the complement mod t.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass

from ..core import _require_binary, complement, marker, row_sums, vt_syndrome
from .common import DecodeFailure, check_window, unique


def array_rows(t: int) -> int:
    return t * t // 2


@dataclass(frozen=True)
class ParamsBinTT1:
    n: int
    t: int
    P: int
    a1: int = 0
    a2: int = 0
    b: tuple = None
    c: tuple = None
    c_prime: tuple = None

    def __post_init__(self):
        if self.t < 1 or self.n < 1:
            raise ValueError("need n >= 1 and t >= 1")
        if not 1 <= self.P <= self.n:
            raise ValueError(f"P={self.P} must lie in [1, n={self.n}]")
        k = self.k
        for name in ("b", "c", "c_prime"):
            v = getattr(self, name)
            object.__setattr__(self, name, (0,) * k if v is None else tuple(v))
            if len(getattr(self, name)) != k:
                raise ValueError(f"{name} must have {k} entries")
        if not 0 <= self.a1 < self.t * self.P or not 0 <= self.a2 < 2 * self.t:
            raise ValueError("a1 or a2 out of range")
        if any(not 0 <= v < 2 for v in self.b):
            raise ValueError("b entries must be bits")
        if any(not 0 <= v < self.t for v in self.c + self.c_prime):
            raise ValueError(f"c entries must lie in [0, {self.t - 1}]")

    @property
    def k(self) -> int:
        return array_rows(self.t)

    @property
    def residues(self) -> tuple:
        return (self.a1, self.a2, self.b, self.c, self.c_prime)


def bin_tt1_syndrome(x, t: int, P: int) -> tuple:
    k = array_rows(t)
    return (
        vt_syndrome(x) % (t * P),
        sum(x) % (2 * t),
        row_sums(x, k, 2),
        row_sums(marker(x), k, t),
        row_sums(marker(complement(x)), k, t),
    )


def params_bin_tt1_for(x, t: int, P: int | None = None) -> ParamsBinTT1:
    P = len(x) if P is None else P
    return ParamsBinTT1(len(x), t, P, *bin_tt1_syndrome(x, t, P))


def member_bin_tt1(x, p: ParamsBinTT1) -> bool:
    _require_binary(x)
    if len(x) != p.n:
        raise ValueError(f"expected length {p.n}, got {len(x)}")
    return bin_tt1_syndrome(x, p.t, p.P) == p.residues


def bin_tt1_candidates(z, p: ParamsBinTT1, window=None):
    """Every codeword that a (t,t-1)-burst inside the window could have turned into z."""
    n, t = p.n, p.t
    z = tuple(z)
    if len(z) != n - 1:
        raise DecodeFailure(f"expected length {n - 1}, got {len(z)}")
    _require_binary(z)
    lo, hi = check_window(window, n, p.P)
    if n < t:
        # the burst swallows the whole word, so any codeword explains z
        return [x for x in itertools.product((0, 1), repeat=n) if member_bin_tt1(x, p)]
    vt_mod, wt_mod = t * p.P, 2 * t
    # prefix sums of z for the cheap weight / VT prefilter
    pre_w = [0]
    pre_vt = [0]
    for i, v in enumerate(z, 1):
        pre_w.append(pre_w[-1] + v)
        pre_vt.append(pre_vt[-1] + i * v)
    total_w, total_vt = pre_w[-1], pre_vt[-1]
    blocks = [(blk, sum(blk), sum(j * v for j, v in enumerate(blk))) for blk in itertools.product((0, 1), repeat=t)]
    out = []
    for pos in range(max(1, lo), min(n - t + 1, hi - t + 1) + 1):
        # x = z[1, pos-1] + block + z[pos+t-1, n-1]; the tail shifts right by one
        head_w, head_vt = pre_w[pos - 1], pre_vt[pos - 1]
        tail_w = total_w - pre_w[pos + t - 2]
        tail_vt = total_vt - pre_vt[pos + t - 2] + tail_w
        for blk, blk_w, blk_vt in blocks:
            w = head_w + blk_w + tail_w
            if (w - p.a2) % wt_mod:
                continue
            vt = head_vt + blk_vt + pos * blk_w + tail_vt
            if (vt - p.a1) % vt_mod:
                continue
            x = z[:pos - 1] + blk + z[pos + t - 2:]
            if member_bin_tt1(x, p):
                out.append(x)
    return out


def decode_bin_tt1(z, p: ParamsBinTT1, window=None):
    """Search every (position, replacement block) inside the window; keep codewords.

    A window given as (start, end) must have length at most P; None means the
    whole word. Raises DecodeFailure with no survivor and UniquenessViolation
    if two distinct codewords survive.
    """
    return unique(bin_tt1_candidates(z, p, window), "codeword")
