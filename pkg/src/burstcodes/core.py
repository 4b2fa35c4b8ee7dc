"""Words over Z_q and the structural transforms the burst codes are built from.

A word is a tuple of ints in ``[0, q-1]``. The alphabet size is never inferred
from the symbols; functions that need it take ``q`` explicitly. Positions in
the public API are 1-based, and reads outside ``[1, n]`` return 0.
"""
from __future__ import annotations

from typing import Iterable, Sequence

Word = tuple


def as_word(symbols: Iterable[int], q: int | None = None) -> Word:
    x = tuple(int(v) for v in symbols)
    if q is not None:
        if q < 2:
            raise ValueError(f"alphabet size must be >= 2, got {q}")
        for v in x:
            if not 0 <= v < q:
                raise ValueError(f"symbol {v} outside [0, {q - 1}]")
    return x


def parse_word(text: str, q: int) -> Word:
    """Parse the text form: a digit string for q <= 10, else comma-separated."""
    text = text.strip()
    if q > 10 or "," in text:
        parts = [p for p in text.split(",") if p.strip() != ""]
        try:
            return as_word((int(p) for p in parts), q)
        except ValueError as exc:
            raise ValueError(f"malformed word {text!r}: {exc}") from None
    if text and not text.isdigit():
        raise ValueError(f"malformed word {text!r}")
    return as_word((int(c) for c in text), q)


def format_word(x: Sequence[int], q: int) -> str:
    if q <= 10:
        return "".join(str(v) for v in x)
    return ",".join(str(v) for v in x)


def at(x: Sequence[int], i: int) -> int:
    """x_i with 1-based i; zero outside [1, n]."""
    if 1 <= i <= len(x):
        return x[i - 1]
    return 0


def sum_weight(x: Sequence[int]) -> int:
    return sum(x)


def vt_syndrome(x: Sequence[int]) -> int:
    return sum(i * v for i, v in enumerate(x, 1))


def array_row(x: Sequence[int], t: int, i: int) -> Word:
    """Row i (1-based) of the t-row column-major array of x."""
    if t < 1:
        raise ValueError("t must be positive")
    if not 1 <= i <= t:
        raise ValueError(f"row index {i} outside [1, {t}]")
    return tuple(x[i - 1::t])


def row_sums(x: Sequence[int], k: int, modulus: int) -> tuple:
    return tuple(sum(x[j::k]) % modulus for j in range(k))


def lift(x: Sequence[int], d: int, q: int) -> Word:
    """Integer-encode each length-d column of x, low digit first."""
    if d < 1:
        raise ValueError("d must be positive")
    out = []
    for start in range(0, len(x), d):
        v = 0
        for k, sym in enumerate(x[start:start + d]):
            v += sym * q ** k
        out.append(v)
    return tuple(out)


def unlift(y: Sequence[int], d: int, q: int, n: int) -> Word:
    """Inverse of lift for a word of original length n.

    Raises ValueError when y is not the lift of any length-n word.
    """
    if d < 1:
        raise ValueError("d must be positive")
    columns = -(-n // d)
    if len(y) != columns:
        raise ValueError(f"expected {columns} lifted symbols, got {len(y)}")
    out = []
    for j, v in enumerate(y):
        width = min(d, n - j * d)
        if not 0 <= v < q ** width:
            raise ValueError(f"lifted symbol {v} at column {j + 1} is not a {width}-digit base-{q} value")
        for _ in range(width):
            v, r = divmod(v, q)
            out.append(r)
    return tuple(out)


def pad_to_multiple(x: Sequence[int], d: int) -> Word:
    if d < 1:
        raise ValueError("d must be positive")
    return tuple(x) + (0,) * (-len(x) % d)


def signature(x: Sequence[int]) -> Word:
    """1 where the word does not decrease from its predecessor; the first bit is 1."""
    if not x:
        return ()
    return (1,) + tuple(1 if x[i] >= x[i - 1] else 0 for i in range(1, len(x)))


def starts_from_signature(alpha: Sequence[int]) -> Word:
    """Segment starts recovered from the run lengths of a signature."""
    starts = [0]
    for i in range(1, len(alpha)):
        if alpha[i] != alpha[i - 1]:
            starts.append(i)
    starts.append(len(alpha))
    return tuple(starts)


def signature_from_starts(starts: Sequence[int]) -> Word:
    bits = []
    for j in range(len(starts) - 1):
        bits.extend([1 - j % 2] * (starts[j + 1] - starts[j]))
    return tuple(bits)


def segment_starts(x: Sequence[int]) -> Word:
    """Starts of the maximal monotone segments of (0, x).

    Segments alternate between nondecreasing and strictly decreasing, and
    consecutive segments share their boundary symbol. The result begins with
    0 and ends with n.
    """
    if not x:
        raise ValueError("segment starts need a nonempty word")
    padded = (0,) + tuple(x)
    starts = [0]
    rising = True
    for i in range(1, len(padded)):
        step_up = padded[i] >= padded[i - 1]
        if step_up != rising:
            starts.append(i - 1)
            rising = step_up
    starts.append(len(x))
    return tuple(starts)


def segment_context(x: Sequence[int], starts: Sequence[int], j: int, t: int, side: str) -> Word:
    """The t-1 symbols just left of segment j, or just right of it."""
    m = len(starts) - 1
    if not 1 <= j <= m:
        raise ValueError(f"segment index {j} outside [1, {m}]")
    if side == "left":
        first = starts[j - 1] - t + 1
    elif side == "right":
        first = starts[j] + 1
    else:
        raise ValueError(f"side must be 'left' or 'right', got {side!r}")
    return tuple(at(x, first + k) for k in range(t - 1))


def _require_binary(x: Sequence[int]) -> None:
    for v in x:
        if v not in (0, 1):
            raise ValueError(f"expected a binary word, found symbol {v}")


def marker(x: Sequence[int]) -> Word:
    """1-based coordinates of the ones of a binary word."""
    _require_binary(x)
    return tuple(i for i, v in enumerate(x, 1) if v)


def complement(x: Sequence[int]) -> Word:
    _require_binary(x)
    return tuple(1 - v for v in x)


def indicator(x: Sequence[int]) -> Word:
    return tuple(v & 1 for v in x)


def common_prefix(a: Sequence[int], b: Sequence[int]) -> int:
    k = 0
    for u, v in zip(a, b):
        if u != v:
            break
        k += 1
    return k


def common_suffix(a: Sequence[int], b: Sequence[int]) -> int:
    k = 0
    for u, v in zip(reversed(a), reversed(b)):
        if u != v:
            break
        k += 1
    return k
