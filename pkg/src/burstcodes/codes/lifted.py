"""(t,t) and general (t,s) codes obtained by lifting columns of an array.

Writing x column by column into d rows and reading each column as one
q^d-ary symbol turns a (t,t)-burst (d = t-1) into a (2,2)-burst, and a
(t,s)-burst with t > s (d = t-s) into a (t',t'-1)-burst with
t' = ceil(t/d) + 1. Words whose length is not a multiple of d are padded with
zeros, which the decoders check and strip.
"""
from __future__ import annotations

from dataclasses import dataclass

from ..core import lift, pad_to_multiple, unlift
from .c22 import ParamsC22, c22_syndrome, decode_c22, member_c22
from .common import DecodeFailure, check_window, fit_window
from .qary_tt1 import ParamsQaryTT1, decode_qary_tt1, member_qary_tt1, params_qary_tt1_for, qary_tt1_syndrome


def _columns(n: int, d: int) -> int:
    return -(-n // d)


def _unpad(y, d, q, n):
    padded = _columns(n, d) * d
    try:
        full = unlift(y, d, q, padded)
    except ValueError as exc:
        raise DecodeFailure(str(exc)) from None
    if any(full[n:]):
        raise DecodeFailure("decoded padding is not all zeros")
    return full[:n]


# (t,t)

@dataclass(frozen=True)
class ParamsTT:
    n: int
    q: int
    t: int
    inner: ParamsC22 = None

    def __post_init__(self):
        if self.t < 2 or self.t > self.n:
            raise ValueError(f"need 2 <= t <= n, got t={self.t}, n={self.n}")
        if self.inner is None:
            object.__setattr__(self, "inner", ParamsC22(_columns(self.n, self.t - 1), self.q ** (self.t - 1)))
        if (self.inner.n, self.inner.q) != (_columns(self.n, self.t - 1), self.q ** (self.t - 1)):
            raise ValueError("inner (2,2) code has the wrong length or alphabet")

    @property
    def d(self) -> int:
        return self.t - 1


def ctt_syndrome(x, q: int, t: int) -> tuple:
    d = t - 1
    return c22_syndrome(lift(pad_to_multiple(x, d), d, q), q ** d)


def params_ctt_for(x, q: int, t: int) -> ParamsTT:
    n, d = len(x), t - 1
    return ParamsTT(n, q, t, ParamsC22(_columns(n, d), q ** d, *ctt_syndrome(x, q, t)))


def member_ctt(x, p: ParamsTT) -> bool:
    if len(x) != p.n:
        raise ValueError(f"expected length {p.n}, got {len(x)}")
    return member_c22(lift(pad_to_multiple(x, p.d), p.d, p.q), p.inner)


def decode_ctt(z, p: ParamsTT):
    z = tuple(z)
    if len(z) != p.n:
        raise DecodeFailure(f"expected length {p.n}, got {len(z)}")
    y = decode_c22(lift(pad_to_multiple(z, p.d), p.d, p.q), p.inner)
    return _unpad(y, p.d, p.q, p.n)


# (t,s), t > s

def lifted_burst_length(t: int, s: int) -> int:
    return -(-t // (t - s)) + 1


def lifted_bound(P: int, t: int, s: int) -> int:
    return -(-P // (t - s)) + 1


@dataclass(frozen=True)
class ParamsTS:
    n: int
    q: int
    t: int
    s: int
    P: int | None = None
    inner: ParamsQaryTT1 = None

    def __post_init__(self):
        if not 0 <= self.s < self.t <= self.n:
            raise ValueError(f"need 0 <= s < t <= n, got t={self.t}, s={self.s}, n={self.n}")
        if self.P is not None and not self.t <= self.P <= self.n:
            raise ValueError(f"P={self.P} must lie in [t={self.t}, n={self.n}]")
        cols, t_in = self.columns, self.t_prime
        if cols < t_in:
            raise ValueError(f"n={self.n} is too short: the lifted word has {cols} < t'={t_in} symbols")
        if self.inner is None:
            object.__setattr__(self, "inner", ParamsQaryTT1(cols, self.q ** self.d, t_in, self.inner_bound))
        if (self.inner.n, self.inner.q, self.inner.t, self.inner.P) != (cols, self.q ** self.d, t_in, self.inner_bound):
            raise ValueError("inner code has the wrong length, alphabet, burst length or bound")

    @property
    def d(self) -> int:
        return self.t - self.s

    @property
    def t_prime(self) -> int:
        return lifted_burst_length(self.t, self.s)

    @property
    def columns(self) -> int:
        return _columns(self.n, self.d)

    @property
    def inner_bound(self):
        if self.P is None:
            return None
        return max(self.t_prime, min(lifted_bound(self.P, self.t, self.s), self.columns))

    @property
    def bound(self) -> int:
        return self.n if self.P is None else self.P


def cts_syndrome(x, q: int, t: int, s: int, P: int | None = None) -> tuple:
    p = ParamsTS(len(x), q, t, s, P)
    return qary_tt1_syndrome(lift(pad_to_multiple(x, p.d), p.d, q), q ** p.d, p.t_prime, p.inner_bound)


def params_cts_for(x, q: int, t: int, s: int, P: int | None = None) -> ParamsTS:
    shape = ParamsTS(len(x), q, t, s, P)
    lifted = lift(pad_to_multiple(x, shape.d), shape.d, q)
    inner = params_qary_tt1_for(lifted, q ** shape.d, shape.t_prime, shape.inner_bound)
    return ParamsTS(len(x), q, t, s, P, inner)


def member_cts(x, p: ParamsTS) -> bool:
    if len(x) != p.n:
        raise ValueError(f"expected length {p.n}, got {len(x)}")
    return member_qary_tt1(lift(pad_to_multiple(x, p.d), p.d, p.q), p.inner)


def lifted_window(window, d: int, length: int, columns: int) -> tuple:
    """Columns of the d-row array touched by a coordinate window, widened to the given length."""
    lo, hi = window
    return fit_window(-(-lo // d), -(-hi // d), length, columns)


def decode_cts(z, p: ParamsTS, window=None):
    z = tuple(z)
    if len(z) != p.n - p.d:
        raise DecodeFailure(f"expected length {p.n - p.d}, got {len(z)}")
    inner_window = None
    if window is not None:
        lo, hi = check_window(window, p.n, p.bound)
        inner_window = lifted_window((lo, hi), p.d, p.inner.bound, p.columns)
    padded = z + (0,) * (p.columns * p.d - p.n)
    y = decode_qary_tt1(lift(padded, p.d, p.q), p.inner, inner_window)
    return _unpad(y, p.d, p.q, p.n)
