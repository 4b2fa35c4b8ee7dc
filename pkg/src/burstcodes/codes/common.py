"""Errors and window helpers shared by all decoders."""
from __future__ import annotations


class DecodeFailure(Exception):
    """The received word is not within one burst of any codeword."""


class UniquenessViolation(Exception):
    """Two distinct codewords explain the same received word.

    For a valid instance and a window no longer than its bound this would
    contradict the correctness of the construction, so tests treat it as fatal.
    """

    def __init__(self, message, candidates=()):
        super().__init__(message)
        self.candidates = tuple(candidates)


def fit_window(lo: int, hi: int, length: int, n: int) -> tuple:
    """An interval of the given length inside [1, n] covering [lo, hi].

    Shorter if n itself is shorter. Placement starts at lo and slides left
    only when it would run past n.
    """
    if hi - lo + 1 > length:
        raise ValueError(f"[{lo}, {hi}] does not fit in a window of length {length}")
    if length >= n:
        return (1, n)
    start = max(1, min(lo, n - length + 1))
    return (start, start + length - 1)


def check_window(window, n: int, bound: int) -> tuple:
    if window is None:
        return (1, n)
    lo, hi = int(window[0]), int(window[1])
    if lo < 1 or hi > n or lo > hi:
        raise ValueError(f"window [{lo}, {hi}] outside [1, {n}]")
    if hi - lo + 1 > bound:
        raise ValueError(f"window length {hi - lo + 1} exceeds the bound {bound}")
    return (lo, hi)


def unique(candidates, what: str):
    """The single distinct candidate, or the right exception."""
    found = list(dict.fromkeys(candidates))
    if not found:
        raise DecodeFailure(f"no {what} is consistent with the received word")
    if len(found) > 1:
        raise UniquenessViolation(f"{len(found)} distinct {what}s explain the received word", found)
    return found[0]


def centered(value: int, modulus: int, low: int) -> int:
    """The representative of value mod modulus in [low, low + modulus - 1]."""
    return (value - low) % modulus + low
