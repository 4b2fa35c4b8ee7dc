"""Permutation codes against a burst of t stable deletions (t-BSD).

A t-BSD in a permutation turns its sequence of overlapping window ranks into
something within one (2t,t)-burst, so requiring that rank sequence to lie in a
(2t,t)-burst correcting code over (t+1)! symbols makes the deletion
correctable; the permutation is then rebuilt by trying every way to put the
missing values back.
"""
from __future__ import annotations

import functools
import itertools
import math
from dataclasses import dataclass, field

from .codes import DecodeFailure, ParamsTS, decode_cts, member_cts, params_cts_for
from .codes.common import unique

# ranks are 1-based in this API; burst codes see rank - 1


def as_permutation(values) -> tuple:
    sigma = tuple(int(v) for v in values)
    if sorted(sigma) != list(range(1, len(sigma) + 1)):
        raise ValueError(f"{sigma} is not a permutation of 1..{len(sigma)}")
    return sigma


def parse_permutation(text: str) -> tuple:
    text = text.strip()
    if not text:
        return ()
    try:
        return tuple(int(v) for v in text.split(","))
    except ValueError:
        raise ValueError(f"malformed permutation {text!r}; expected comma-separated integers") from None


def format_permutation(values) -> str:
    return ",".join(str(v) for v in values)


def prj(u) -> tuple:
    """Relative order of u as a permutation; equal values rank by position."""
    u = tuple(u)
    if not u:
        raise ValueError("projection needs a nonempty sequence")
    order = sorted(range(len(u)), key=lambda i: (u[i], i))
    out = [0] * len(u)
    for rank, i in enumerate(order, 1):
        out[i] = rank
    return tuple(out)


def lex_rank(sigma) -> int:
    sigma = as_permutation(sigma)
    n = len(sigma)
    rank = 0
    rest = list(range(1, n + 1))
    for i, v in enumerate(sigma):
        k = rest.index(v)
        rank += k * math.factorial(n - 1 - i)
        rest.pop(k)
    return rank + 1


def lex_unrank(r: int, n: int) -> tuple:
    if not 1 <= r <= math.factorial(n):
        raise ValueError(f"rank {r} outside [1, {n}!]")
    r -= 1
    rest = list(range(1, n + 1))
    out = []
    for i in range(n):
        f = math.factorial(n - 1 - i)
        k, r = divmod(r, f)
        out.append(rest.pop(k))
    return tuple(out)


@functools.lru_cache(maxsize=1 << 16)
def _window_rank(window: tuple) -> int:
    return lex_rank(prj(window))


def overlapping_ranks(sigma, t: int) -> tuple:
    """Lexicographic ranks of the patterns of all length-(t+1) windows."""
    sigma = tuple(sigma)
    if len(sigma) <= t:
        raise ValueError(f"need more than t={t} values, got {len(sigma)}")
    return tuple(_window_rank(sigma[i:i + t + 1]) for i in range(len(sigma) - t))


def rank_word(sigma, t: int) -> tuple:
    """overlapping_ranks shifted to 0-based symbols over (t+1)!."""
    return tuple(r - 1 for r in overlapping_ranks(sigma, t))


def apply_stable_burst_deletion(sigma, i: int, t: int) -> tuple:
    sigma = tuple(sigma)
    if t < 0 or not 1 <= i <= len(sigma) - t + 1:
        raise ValueError(f"deletion [{i}, {i + t - 1}] outside [1, {len(sigma)}]")
    return sigma[:i - 1] + sigma[i - 1 + t:]


# t-BSD codes

def params_tbsd_for(sigma, t: int, P: int | None = None) -> ParamsTS:
    """The rank-sequence instance containing sigma; P bounds the window on the ranks."""
    sigma = as_permutation(sigma)
    return params_cts_for(rank_word(sigma, t), math.factorial(t + 1), 2 * t, t, P)


def member_tbsd(sigma, p: ParamsTS, t: int) -> bool:
    return member_cts(rank_word(as_permutation(sigma), t), p)


def rebuild(z, ranks, n: int) -> tuple:
    """The unique permutation extending z by one block of the missing values with these window ranks."""
    z = tuple(z)
    t = n - len(z)
    missing = sorted(set(range(1, n + 1)) - set(z))
    if len(missing) != t or len(set(z)) != len(z):
        raise DecodeFailure("received values are not a subsequence of a permutation of 1..n")
    width = n - len(ranks)
    found = []
    for pos in range(len(z) + 1):
        for block in itertools.permutations(missing):
            cand = z[:pos] + block + z[pos:]
            if overlapping_ranks(cand, width) == tuple(ranks):
                found.append(cand)
    return unique(found, "permutation")


def decode_tbsd(z, p: ParamsTS, t: int, n: int, window=None) -> tuple:
    z = tuple(z)
    if len(z) != n - t:
        raise DecodeFailure(f"expected {n - t} values, got {len(z)}")
    if t == 0:
        return as_permutation(z)
    received = rank_word(z, t) if len(z) > t else ()
    ranks = decode_cts(received, p, window)
    return rebuild(z, [r + 1 for r in ranks], n)


# <=t-BSD codes

@dataclass(frozen=True)
class PermCompositeParams:
    """One (2i,i) rank-sequence code per deletion count i in [1, t]."""
    n: int
    t: int
    P: int
    inner: tuple = field(default=())
    locator: str = "trivial"

    def __post_init__(self):
        if len(self.inner) != self.t:
            raise ValueError(f"need {self.t} inner codes, got {len(self.inner)}")
        for i, p in enumerate(self.inner, 1):
            if (p.n, p.q, p.t, p.s) != (self.n - i, math.factorial(i + 1), 2 * i, i):
                raise ValueError(f"inner code {i} has the wrong shape")


def rank_bound(n: int, P: int, i: int):
    """Bound on the rank window for i deletions: P + i, or None once it covers everything."""
    return None if P + i >= n - i else P + i


def leq_tbsd_for(sigma, t: int, P: int, locator: str = "trivial") -> PermCompositeParams:
    sigma = as_permutation(sigma)
    n = len(sigma)
    inner = tuple(params_tbsd_for(sigma, i, rank_bound(n, P, i)) for i in range(1, t + 1))
    return PermCompositeParams(n, t, min(P, n), inner, locator)


def member_leq_tbsd(sigma, cp: PermCompositeParams) -> bool:
    return all(member_tbsd(sigma, p, i) for i, p in enumerate(cp.inner, 1))


def rank_window(window, i: int, length: int) -> tuple:
    """Stretch a window on the permutation to the ranks it can disturb."""
    lo, hi = window
    return (max(1, lo - i), min(length, hi))


def decode_leq_tbsd(z, cp: PermCompositeParams, locator=None) -> tuple:
    from .applications import make_locator

    z = tuple(z)
    i = cp.n - len(z)
    if i == 0:
        return as_permutation(z)
    if not 1 <= i <= cp.t:
        raise DecodeFailure(f"{len(z)} values is not n minus 0..{cp.t}")
    loc = locator or make_locator(cp.locator)
    window = loc.locate(z, cp.n, cp.P)
    inner = cp.inner[i - 1]
    return decode_tbsd(z, inner, i, cp.n, rank_window(window, i, inner.n))
