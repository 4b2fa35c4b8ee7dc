"""q-ary (t,t-1)-burst correcting code built on signatures.

The signature of a codeword lies in a binary (t+1,t) code, which pins the
errors down to one monotone segment plus t-1 symbols on each side. Sums of
the side contexts over segments of the same class mod 2t recover the sides,
and symbol counts mod 2t recover the segment's contents; its direction comes
from the signature.
"""
from __future__ import annotations

from dataclasses import dataclass

from ..core import common_prefix, common_suffix, segment_starts, signature, starts_from_signature
from .bin_tt1 import ParamsBinTT1, bin_tt1_syndrome, decode_bin_tt1
from .common import DecodeFailure, centered, check_window, fit_window


def signature_bound(n: int, P: int | None) -> int:
    """Window bound of the inner signature code: n, or P+1 capped at n."""
    return n if P is None else min(P + 1, n)


@dataclass(frozen=True)
class ParamsQaryTT1:
    n: int
    q: int
    t: int
    P: int | None = None
    inner: ParamsBinTT1 = None
    beta: tuple = None
    gamma: tuple = None
    gamma_prime: tuple = None

    def __post_init__(self):
        n, q, t = self.n, self.q, self.t
        if n < 1 or q < 2 or t < 1:
            raise ValueError("need n >= 1, q >= 2, t >= 1")
        if self.P is not None and not t <= self.P <= n:
            raise ValueError(f"P={self.P} must lie in [t={t}, n={n}]")
        inner = self.inner
        if inner is None:
            inner = ParamsBinTT1(n, t + 1, signature_bound(n, self.P))
            object.__setattr__(self, "inner", inner)
        if (inner.n, inner.t, inner.P) != (n, t + 1, signature_bound(n, self.P)):
            raise ValueError("inner signature code has the wrong length, burst length or bound")
        sizes = {"beta": q - 1, "gamma": 2 * t * (t - 1), "gamma_prime": 2 * t * (t - 1)}
        for name, size in sizes.items():
            v = getattr(self, name)
            object.__setattr__(self, name, (0,) * size if v is None else tuple(v))
            if len(getattr(self, name)) != size:
                raise ValueError(f"{name} must have {size} entries")
        if any(not 0 <= v < 2 * t for v in self.beta):
            raise ValueError(f"beta entries must lie in [0, {2 * t - 1}]")
        if any(not 0 <= v < q for v in self.gamma + self.gamma_prime):
            raise ValueError(f"gamma entries must lie in [0, {q - 1}]")

    @property
    def bound(self) -> int:
        return self.n if self.P is None else self.P

    @property
    def residues(self) -> tuple:
        return (self.inner.residues, self.beta, self.gamma, self.gamma_prime)


def _context(x, starts, j, t, side):
    """Left or right context of segment j (1-based); coordinates outside [1, n] read 0."""
    n = len(x)
    first = starts[j - 1] - t + 1 if side == "left" else starts[j] + 1
    return [x[k - 1] if 1 <= k <= n else 0 for k in range(first, first + t - 1)]


def context_sums(x, q: int, t: int, starts=None) -> tuple:
    """(gamma, gamma') of x: per class j in [1, 2t], the summed contexts of segments j, j+2t, ..."""
    starts = segment_starts(x) if starts is None else starts
    m = len(starts) - 1
    left = [[0] * (t - 1) for _ in range(2 * t)]
    right = [[0] * (t - 1) for _ in range(2 * t)]
    for j in range(1, m + 1):
        cls = (j - 1) % (2 * t)
        for acc, side in ((left, "left"), (right, "right")):
            for k, v in enumerate(_context(x, starts, j, t, side)):
                acc[cls][k] += v
    flat_l = tuple(v % q for block in left for v in block)
    flat_r = tuple(v % q for block in right for v in block)
    return flat_l, flat_r


def symbol_counts(x, q: int, modulus: int) -> tuple:
    counts = [0] * q
    for v in x:
        counts[v] += 1
    return tuple(c % modulus for c in counts[1:])


def qary_tt1_syndrome(x, q: int, t: int, P: int | None = None) -> tuple:
    n = len(x)
    inner = bin_tt1_syndrome(signature(x), t + 1, signature_bound(n, P))
    gamma, gamma_prime = context_sums(x, q, t)
    return (inner, symbol_counts(x, q, 2 * t), gamma, gamma_prime)


def params_qary_tt1_for(x, q: int, t: int, P: int | None = None) -> ParamsQaryTT1:
    n = len(x)
    inner, beta, gamma, gamma_prime = qary_tt1_syndrome(x, q, t, P)
    return ParamsQaryTT1(n, q, t, P, ParamsBinTT1(n, t + 1, signature_bound(n, P), *inner), beta, gamma, gamma_prime)


def member_qary_tt1(x, p: ParamsQaryTT1) -> bool:
    if len(x) != p.n:
        raise ValueError(f"expected length {p.n}, got {len(x)}")
    return qary_tt1_syndrome(x, p.q, p.t, p.P) == p.residues


def burst_positions(x, z, t: int, lo: int = 1, hi: int | None = None) -> range:
    """Positions of (t, t-1)-bursts inside [lo, hi] that turn x into z."""
    n = len(x)
    hi = n if hi is None else hi
    if len(z) != n - 1:
        return range(0)
    left = common_prefix(x, z)
    right = common_suffix(x, z)
    return range(max(1, n - t + 1 - right, lo), min(left + 1, n - t + 1, hi - t + 1) + 1)


def decode_qary_tt1(z, p: ParamsQaryTT1, window=None):
    n, q, t = p.n, p.q, p.t
    z = tuple(z)
    if len(z) != n - 1:
        raise DecodeFailure(f"expected length {n - 1}, got {len(z)}")
    if any(not 0 <= v < q for v in z):
        raise DecodeFailure(f"received symbols must lie in [0, {q - 1}]")
    lo, hi = check_window(window, n, p.bound)

    # stage 1: the signature of the codeword
    sig_z = signature(z)
    # no window means the whole word, which a P-bounded code may not resolve uniquely
    sig_window = None if window is None else fit_window(lo, min(hi + 1, n), p.inner.P, n)
    sig_x = decode_bin_tt1(sig_z, p.inner, sig_window)
    starts = starts_from_signature(sig_x)
    m = len(starts) - 1

    # stage 2: the run holding the first signature difference names the damaged segment
    first_diff = common_prefix(sig_x, sig_z) + 1
    seg = next(j for j in range(1, m + 1) if starts[j - 1] < first_diff <= starts[j])
    u_lo, u_hi = starts[seg - 1] - t + 1, starts[seg] + t - 1
    x = [None] * n
    for k in range(1, n + 1):
        if k < u_lo:
            x[k - 1] = z[k - 1]
        elif k > u_hi:
            x[k - 1] = z[k - 2]

    # stage 3: side contexts from same-class sums
    cls = (seg - 1) % (2 * t)
    for side, target in (("left", p.gamma), ("right", p.gamma_prime)):
        acc = list(target[cls * (t - 1):(cls + 1) * (t - 1)])
        for j in range(seg - 2 * t * ((seg - 1) // (2 * t)), m + 1, 2 * t):
            if j == seg:
                continue
            ctx = _context(x, starts, j, t, side)
            if None in ctx:
                raise DecodeFailure("a same-class context overlaps the damaged region")
            acc = [a - v for a, v in zip(acc, ctx)]
        first = starts[seg - 1] - t + 1 if side == "left" else starts[seg] + 1
        for k, v in enumerate(acc):
            if 1 <= first + k <= n:
                x[first + k - 1] = v % q

    # stage 4: symbol counts give the segment's contents, the signature its order
    seg_lo, seg_hi = max(starts[seg - 1], 1), starts[seg]
    counts = [0] * q
    for v in z:
        counts[v] += 1
    for v in range(1, q):
        counts[v] -= centered(counts[v] - p.beta[v - 1], 2 * t, -t)
    counts[0] = n - sum(counts[1:])
    for k in range(1, n + 1):
        if seg_lo <= k <= seg_hi:
            continue
        if x[k - 1] is None:
            raise DecodeFailure("undetermined symbol outside the damaged segment")
        counts[x[k - 1]] -= 1
    if min(counts) < 0:
        raise DecodeFailure("symbol counts are inconsistent with the received word")
    contents = [v for v in range(q) for _ in range(counts[v])]
    if seg % 2 == 0:
        contents.reverse()
        if len(set(contents)) != len(contents):
            raise DecodeFailure("a strictly decreasing segment cannot repeat a symbol")
    x[seg_lo - 1:seg_hi] = contents
    x = tuple(x)

    if not member_qary_tt1(x, p) or not burst_positions(x, z, t, lo, hi):
        raise DecodeFailure("reconstruction is not a codeword within one burst of the received word")
    return x
