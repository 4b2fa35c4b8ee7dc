"""Codes for inversions, absorptions, <=t-burst-deletions and localized deletions.

Each error type is a special case of some (t,s)-burst, so the decoders
delegate to the burst decoders. The <=t and localized families combine one
P-bounded code per possible deletion count with a locator that narrows the
errors to a window of length P. The locator codes themselves are external;
two stand-ins are provided: a genie that is told the true error span and a
trivial one that always answers [1, n] (so it needs P = n).
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .core import indicator
from .codes import (DecodeFailure, ParamsC22, ParamsTS, ParamsTT, decode_c22, decode_ctt, decode_cts,
                    member_cts, params_cts_for, params_from_dict, params_to_dict)


class LocatorViolation(DecodeFailure):
    """The locator's window does not fit the code it is paired with."""


@dataclass
class TrivialLocator:
    name = "trivial"

    def locate(self, z, n: int, P: int) -> tuple:
        if P < n:
            raise LocatorViolation(f"the trivial locator answers [1, {n}] but the codes only handle windows of {P}")
        return (1, n)

    def accepts(self, x) -> bool:
        return True


@dataclass
class GenieLocator:
    """Test stand-in told the true error span; places a window of length P around it."""
    span: tuple = None
    policy: str = "center"
    name = "genie"

    def locate(self, z, n: int, P: int) -> tuple:
        if self.span is None:
            raise LocatorViolation("the genie locator was not given the error span")
        lo, hi = self.span
        width = hi - lo + 1
        if width > P:
            raise LocatorViolation(f"error span of length {width} exceeds P={P}")
        if self.policy == "left":
            start = lo
        elif self.policy == "right":
            start = hi - P + 1
        elif self.policy == "center":
            start = lo - (P - width) // 2
        else:
            raise ValueError(f"unknown placement policy {self.policy!r}")
        length = min(P, n)
        # clamp so the window stays inside [1, n] and still covers the span
        start = max(1, hi - length + 1, min(start, lo, n - length + 1))
        return (start, start + length - 1)

    def accepts(self, x) -> bool:
        return True


LOCATORS = {"trivial": TrivialLocator, "genie": GenieLocator}


def make_locator(name: str, **kwargs):
    try:
        return LOCATORS[name](**kwargs)
    except KeyError:
        raise ValueError(f"unknown locator {name!r}; choose from {sorted(LOCATORS)}") from None


# single-error families

def decode_inversion(z, p: ParamsTT):
    """An inversion of length at most t is a (t,t)-burst."""
    return decode_ctt(z, p)


def decode_absorption_a(z, p: ParamsTS):
    """Type-A absorption is a (2,1)-burst (a plain deletion at the last coordinate)."""
    if (p.t, p.s) != (2, 1):
        raise ValueError("type-A absorption needs a (2,1) code")
    return decode_cts(z, p)


def decode_absorption_b(z, p: ParamsC22):
    """Type-B absorption is a (2,2)-burst (a substitution at the last coordinate)."""
    return decode_c22(z, p)


# composite families

@dataclass(frozen=True)
class CompositeParams:
    """One P-bounded code per deletion count i in [1, t], plus the locator choice."""
    kind: str              # "leq_burst_del" or "localized"
    n: int
    q: int
    t: int
    P: int
    inner: tuple = field(default=())
    locator: str = "trivial"

    def __post_init__(self):
        if self.kind not in ("leq_burst_del", "localized"):
            raise ValueError(f"unknown composite kind {self.kind!r}")
        if len(self.inner) != self.t:
            raise ValueError(f"need {self.t} inner codes, got {len(self.inner)}")
        for i, p in enumerate(self.inner, 1):
            if (p.n, p.q, p.t, p.s) != (self.n, self.q, *inner_burst(self.kind, self.t, i)):
                raise ValueError(f"inner code {i} has the wrong shape")
            if p.bound != self.P:
                raise ValueError(f"inner code {i} is {p.bound}-bounded, expected {self.P}")


def inner_burst(kind: str, t: int, i: int) -> tuple:
    """The (t,s) burst that i deletions become."""
    return (i, 0) if kind == "leq_burst_del" else (t, t - i)


def composite_for(x, kind: str, q: int, t: int, P: int, locator: str = "trivial") -> CompositeParams:
    """The composite instance whose codes all contain x."""
    n = len(x)
    bound = None if P >= n else P
    inner = tuple(params_cts_for(x, q, *inner_burst(kind, t, i), P=bound) for i in range(1, t + 1))
    return CompositeParams(kind, n, q, t, min(P, n), inner, locator)


def member_composite(x, cp: CompositeParams, locator=None) -> bool:
    loc = locator or make_locator(cp.locator)
    return loc.accepts(indicator(x)) and all(member_cts(x, p) for p in cp.inner)


def decode_composite(z, cp: CompositeParams, locator=None):
    z = tuple(z)
    i = cp.n - len(z)
    if i == 0:
        return z
    if not 1 <= i <= cp.t:
        raise DecodeFailure(f"length {len(z)} is not n minus 0..{cp.t}")
    loc = locator or make_locator(cp.locator)
    window = loc.locate(z, cp.n, cp.P)
    if window[1] - window[0] + 1 > cp.P:
        raise LocatorViolation(f"locator window {window} is longer than P={cp.P}")
    return decode_cts(z, cp.inner[i - 1], window)


def member_leq_burst_del(x, cp, locator=None):
    return member_composite(x, cp, locator)


def decode_leq_burst_del(z, cp, locator=None):
    return decode_composite(z, cp, locator)


def member_localized(x, cp, locator=None):
    return member_composite(x, cp, locator)


def decode_localized(z, cp, locator=None):
    return decode_composite(z, cp, locator)


def composite_to_dict(cp: CompositeParams) -> dict:
    return {"family": cp.kind, "n": cp.n, "q": cp.q, "t": cp.t, "P": cp.P, "locator": cp.locator,
            "inner": [params_to_dict(p) for p in cp.inner]}


def composite_from_dict(obj: dict) -> CompositeParams:
    try:
        inner = tuple(params_from_dict(d) for d in obj["inner"])
        return CompositeParams(obj["family"], int(obj["n"]), int(obj["q"]), int(obj["t"]), int(obj["P"]),
                               inner, obj.get("locator", "trivial"))
    except KeyError as exc:
        raise ValueError(f"composite instance is missing field {exc}") from None
