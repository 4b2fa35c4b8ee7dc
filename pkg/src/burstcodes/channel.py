"""Burst events, the other error models reduced to bursts, and error balls."""
from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from typing import Iterator, Sequence

from .core import Word, as_word


@dataclass(frozen=True)
class BurstEvent:
    """Delete ``deleted_len`` symbols at 1-based ``position``, insert ``inserted`` there."""

    position: int
    deleted_len: int
    inserted: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "inserted", tuple(self.inserted))
        if self.deleted_len < 0:
            raise ValueError("deleted length must be non-negative")
        if self.deleted_len + len(self.inserted) < 1:
            raise ValueError("a burst must delete or insert at least one symbol")

    @property
    def s(self) -> int:
        return len(self.inserted)

    def to_json(self) -> str:
        return json.dumps({"pos": self.position, "t": self.deleted_len, "ins": list(self.inserted)})

    @classmethod
    def from_dict(cls, obj: dict) -> "BurstEvent":
        try:
            return cls(int(obj["pos"]), int(obj["t"]), tuple(int(v) for v in obj["ins"]))
        except KeyError as exc:
            raise ValueError(f"event is missing field {exc}") from None

    @classmethod
    def from_json(cls, text: str) -> "BurstEvent":
        return cls.from_dict(json.loads(text))


def position_range(n: int, t: int) -> range:
    """Valid 1-based burst positions; a pure insertion may also append at n+1."""
    if t > n:
        raise ValueError(f"cannot delete {t} symbols from a word of length {n}")
    return range(1, n - t + 2)


def apply_burst(x: Sequence[int], e: BurstEvent, q: int | None = None) -> Word:
    n = len(x)
    if e.position not in position_range(n, e.deleted_len):
        raise ValueError(f"burst position {e.position} out of range for n={n}, t={e.deleted_len}")
    if q is not None:
        as_word(e.inserted, q)
    i = e.position - 1
    return tuple(x[:i]) + e.inserted + tuple(x[i + e.deleted_len:])


def splice(x: Sequence[int], position: int, t: int, inserted: Sequence[int]) -> Word:
    """apply_burst without the event object or range checks (hot loops)."""
    i = position - 1
    return tuple(x[:i]) + tuple(inserted) + tuple(x[i + t:])


def is_exact_burst(x: Sequence[int], e: BurstEvent) -> bool:
    if e.deleted_len < 1 or e.s < 1:
        raise ValueError("exactness is defined for t >= 1 and s >= 1")
    i = e.position
    return e.inserted[0] != x[i - 1] and e.inserted[-1] != x[i + e.deleted_len - 2]


def burst_events(n: int, q: int, t: int, s: int) -> Iterator[BurstEvent]:
    for pos in position_range(n, t):
        for ins in itertools.product(range(q), repeat=s):
            yield BurstEvent(pos, t, ins)


def ball_words(x: Sequence[int], q: int, t: int, s: int) -> set:
    """All words reachable from x by one (t,s)-burst."""
    x = tuple(x)
    n = len(x)
    out = set()
    blocks = list(itertools.product(range(q), repeat=s))
    for pos in position_range(n, t):
        head, tail = x[:pos - 1], x[pos - 1 + t:]
        for ins in blocks:
            out.add(head + ins + tail)
    return out


@dataclass(frozen=True)
class ErrorBall:
    center: Word
    q: int
    t: int
    s: int
    members: frozenset

    def __len__(self) -> int:
        return len(self.members)

    def __contains__(self, y) -> bool:
        return tuple(y) in self.members

    def sorted(self) -> list:
        return sorted(self.members)


def ball(x: Sequence[int], q: int, t: int, s: int) -> ErrorBall:
    x = tuple(x)
    return ErrorBall(x, q, t, s, frozenset(ball_words(x, q, t, s)))


def ball_partition(x: Sequence[int], q: int, t: int, s: int) -> dict:
    """The cells B(x, i), i in [1, n-t+2], built directly from their defining constraints.

    Cell i <= n-t+1 holds the words whose first s symbols from coordinate i
    start with a symbol other than x_i and whose other symbols are x with
    [i, i+t-1] removed. The last cell holds the words that keep x_[1, n-t+1].
    """
    if s < 1:
        raise ValueError("the partition needs s >= 1")
    x = tuple(x)
    n = len(x)
    if t > n:
        raise ValueError(f"t={t} exceeds n={n}")
    free = list(itertools.product(range(q), repeat=s - 1))
    cells = {}
    for i in range(1, n - t + 2):
        xi = x[i - 1] if i <= n else 0
        head, tail = x[:i - 1], x[i - 1 + t:]
        cells[i] = {head + (a,) + rest + tail for a in range(q) if a != xi for rest in free}
    keep = x[:n - t + 1] + (0,) * max(0, n - t + 1 - n)
    cells[n - t + 2] = {keep + rest for rest in free}
    return cells


def apply_inversion(x: Sequence[int], i: int, length: int) -> Word:
    """Reverse the substring of the given length starting at 1-based i."""
    n = len(x)
    if length < 1 or i < 1 or i + length - 1 > n:
        raise ValueError(f"inversion [{i}, {i + length - 1}] outside [1, {n}]")
    x = tuple(x)
    return x[:i - 1] + x[i - 1:i - 1 + length][::-1] + x[i - 1 + length:]


def apply_absorption_a(x: Sequence[int], i: int, q: int) -> Word:
    """Delete x_i and saturate-add it into x_{i+1}; at i = n it is a plain deletion."""
    n = len(x)
    if not 1 <= i <= n:
        raise ValueError(f"absorption position {i} outside [1, {n}]")
    x = tuple(x)
    if i == n:
        return x[:-1]
    merged = min(x[i - 1] + x[i], q - 1)
    return x[:i - 1] + (merged,) + x[i + 1:]


def apply_absorption_b(x: Sequence[int], i: int, new_val: int, q: int) -> Word:
    """Lower x_i to new_val and saturate-add the difference into x_{i+1}."""
    n = len(x)
    if not 1 <= i <= n:
        raise ValueError(f"absorption position {i} outside [1, {n}]")
    x = tuple(x)
    if not 0 <= new_val < x[i - 1]:
        raise ValueError(f"new value {new_val} must lie in [0, {x[i - 1] - 1}]")
    if i == n:
        return x[:-1] + (new_val,)
    moved = x[i - 1] - new_val
    return x[:i - 1] + (new_val, min(x[i] + moved, q - 1)) + x[i + 1:]


def apply_localized_deletions(x: Sequence[int], window_start: int, t: int, offsets) -> Word:
    """Delete the coordinates window_start + o for o in offsets, all inside a length-t window."""
    n = len(x)
    offsets = sorted(set(offsets))
    if not offsets:
        raise ValueError("at least one coordinate must be deleted")
    if offsets[0] < 0 or offsets[-1] > t - 1:
        raise ValueError(f"offsets must lie in [0, {t - 1}]")
    if window_start < 1 or window_start + t - 1 > n:
        raise ValueError(f"window [{window_start}, {window_start + t - 1}] outside [1, {n}]")
    drop = {window_start - 1 + o for o in offsets}
    return tuple(v for k, v in enumerate(x) if k not in drop)


def localized_as_burst(x: Sequence[int], window_start: int, t: int, offsets) -> BurstEvent:
    """The (t, t-|offsets|)-burst equivalent to a localized deletion."""
    offsets = set(offsets)
    kept = tuple(x[window_start - 1 + o] for o in range(t) if o not in offsets)
    return BurstEvent(window_start, t, kept)
