"""One registry entry per code family, plus parameter search and instance files.

Every family's residues are a function of the word (its syndrome), so the
instances of a family partition the whole space and a best instance can be
found by counting syndromes.
"""
from __future__ import annotations

import itertools
import json
import math
from collections import Counter
from dataclasses import dataclass
from typing import Callable

from .bin_tt1 import ParamsBinTT1, array_rows, bin_tt1_syndrome, decode_bin_tt1, member_bin_tt1, params_bin_tt1_for
from .c22 import ParamsC22, c22_modulus, c22_syndrome, decode_c22, member_c22, params_c22_for
from .lifted import (ParamsTS, ParamsTT, ctt_syndrome, cts_syndrome, decode_ctt, decode_cts, member_ctt,
                     member_cts, params_ctt_for, params_cts_for)
from .qary_tt1 import ParamsQaryTT1, decode_qary_tt1, member_qary_tt1, params_qary_tt1_for, qary_tt1_syndrome, signature_bound

DEFAULT_CAP = 2 ** 22


class CapExceeded(ValueError):
    pass


@dataclass(frozen=True)
class Shape:
    """Family plus the sizes that fix its constraint moduli."""
    family: str
    n: int
    q: int
    t: int = 2
    s: int = 2
    P: int | None = None

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ValueError(f"unknown family {self.family!r}; choose from {sorted(FAMILIES)}")
        FAMILIES[self.family].check(self)


@dataclass(frozen=True)
class Family:
    name: str
    check: Callable
    syndrome: Callable      # (x, shape) -> hashable key
    params_for: Callable    # (x, shape) -> params
    member: Callable
    decode: Callable        # (z, params, window) -> word
    burst: Callable         # shape -> (t, s) of the corrected burst
    log_classes: Callable   # shape -> log2 of the product of all moduli


def _check_c22(sh):
    if (sh.t, sh.s) != (2, 2) or sh.n < 2:
        raise ValueError("the (2,2) family needs t = s = 2 and n >= 2")


def _check_ctt(sh):
    if sh.t != sh.s or not 2 <= sh.t <= sh.n:
        raise ValueError("the (t,t) family needs s = t and 2 <= t <= n")


def _check_bin(sh):
    if sh.q != 2 or sh.s != sh.t - 1 or sh.t > sh.n:
        raise ValueError("the binary family needs q = 2, s = t-1, t <= n")
    if sh.P is not None and not 1 <= sh.P <= sh.n:
        raise ValueError("P must lie in [1, n]")


def _check_qary(sh):
    if sh.s != sh.t - 1 or not 1 <= sh.t <= sh.n:
        raise ValueError("the q-ary (t,t-1) family needs s = t-1 and 1 <= t <= n")
    if sh.P is not None and not sh.t <= sh.P <= sh.n:
        raise ValueError("P must lie in [t, n]")


def _check_cts(sh):
    ParamsTS(sh.n, sh.q, sh.t, sh.s, sh.P)


def _log_bin(n, t, P):
    k = array_rows(t)
    return math.log2(t * P) + math.log2(2 * t) + k + 2 * k * math.log2(t)


def _log_qary(n, q, t, P):
    return (_log_bin(n, t + 1, signature_bound(n, P)) + (q - 1) * math.log2(2 * t)
            + 4 * t * (t - 1) * math.log2(q))


def _log_cts(sh):
    p = ParamsTS(sh.n, sh.q, sh.t, sh.s, sh.P)
    return _log_qary(p.columns, p.inner.q, p.t_prime, p.inner_bound)


def _log_c22(n, q):
    return 2 * math.log2(2 * q) + math.log2(c22_modulus(n, q))


FAMILIES = {
    "c22": Family(
        "c22", _check_c22,
        lambda x, sh: c22_syndrome(x, sh.q),
        lambda x, sh: params_c22_for(x, sh.q),
        member_c22,
        lambda z, p, window=None: decode_c22(z, p),
        lambda sh: (2, 2),
        lambda sh: _log_c22(sh.n, sh.q),
    ),
    "ctt": Family(
        "ctt", _check_ctt,
        lambda x, sh: ctt_syndrome(x, sh.q, sh.t),
        lambda x, sh: params_ctt_for(x, sh.q, sh.t),
        member_ctt,
        lambda z, p, window=None: decode_ctt(z, p),
        lambda sh: (sh.t, sh.t),
        lambda sh: _log_c22(-(-sh.n // (sh.t - 1)), sh.q ** (sh.t - 1)),
    ),
    "bin_tt1": Family(
        "bin_tt1", _check_bin,
        lambda x, sh: bin_tt1_syndrome(x, sh.t, sh.P or sh.n),
        lambda x, sh: params_bin_tt1_for(x, sh.t, sh.P),
        member_bin_tt1,
        decode_bin_tt1,
        lambda sh: (sh.t, sh.t - 1),
        lambda sh: _log_bin(sh.n, sh.t, sh.P or sh.n),
    ),
    "qary_tt1": Family(
        "qary_tt1", _check_qary,
        lambda x, sh: qary_tt1_syndrome(x, sh.q, sh.t, sh.P),
        lambda x, sh: params_qary_tt1_for(x, sh.q, sh.t, sh.P),
        member_qary_tt1,
        decode_qary_tt1,
        lambda sh: (sh.t, sh.t - 1),
        lambda sh: _log_qary(sh.n, sh.q, sh.t, sh.P),
    ),
    "cts": Family(
        "cts", _check_cts,
        lambda x, sh: cts_syndrome(x, sh.q, sh.t, sh.s, sh.P),
        lambda x, sh: params_cts_for(x, sh.q, sh.t, sh.s, sh.P),
        member_cts,
        decode_cts,
        lambda sh: (sh.t, sh.s),
        _log_cts,
    ),
}


def family_of(params) -> str:
    if isinstance(params, ParamsC22):
        return "c22"
    if isinstance(params, ParamsTT):
        return "ctt"
    if isinstance(params, ParamsBinTT1):
        return "bin_tt1"
    if isinstance(params, ParamsQaryTT1):
        return "qary_tt1"
    if isinstance(params, ParamsTS):
        return "cts"
    raise TypeError(f"not a code instance: {params!r}")


def shape_of(params) -> Shape:
    fam = family_of(params)
    if fam == "c22":
        return Shape(fam, params.n, params.q, 2, 2)
    if fam == "ctt":
        return Shape(fam, params.n, params.q, params.t, params.t)
    if fam == "bin_tt1":
        return Shape(fam, params.n, 2, params.t, params.t - 1, None if params.P == params.n else params.P)
    if fam == "qary_tt1":
        return Shape(fam, params.n, params.q, params.t, params.t - 1, params.P)
    return Shape(fam, params.n, params.q, params.t, params.s, params.P)


def member(x, params) -> bool:
    return FAMILIES[family_of(params)].member(x, params)


def decode(z, params, window=None):
    return FAMILIES[family_of(params)].decode(z, params, window)


def check_cap(q: int, n: int, cap: int = DEFAULT_CAP) -> None:
    if q ** n > cap:
        raise CapExceeded(f"q^n = {q}^{n} exceeds the enumeration cap {cap}; raise the cap or shrink n")


def all_words(n: int, q: int, cap: int = DEFAULT_CAP):
    check_cap(q, n, cap)
    return itertools.product(range(q), repeat=n)


def class_sizes(shape: Shape, cap: int = DEFAULT_CAP) -> Counter:
    fam = FAMILIES[shape.family]
    return Counter(fam.syndrome(x, shape) for x in all_words(shape.n, shape.q, cap))


def param_search(family: str, n: int, q: int, t: int = 2, s: int = 2, P: int | None = None,
                 cap: int = DEFAULT_CAP) -> tuple:
    """The largest instance of the family (ties go to the smallest residues) and its size."""
    shape = Shape(family, n, q, t, s, P)
    fam = FAMILIES[family]
    sizes = class_sizes(shape, cap)
    best = min(sizes, key=lambda key: (-sizes[key], key))
    for x in all_words(n, q, cap):
        if fam.syndrome(x, shape) == best:
            return fam.params_for(x, shape), sizes[best]
    raise AssertionError("unreachable: the best class is nonempty")


def pigeonhole_redundancy(shape: Shape) -> float:
    """Redundancy in bits that the best instance is guaranteed not to exceed."""
    return FAMILIES[shape.family].log_classes(shape)


# instance files

def _bin_residues(p: ParamsBinTT1) -> dict:
    return {"a1": p.a1, "a2": p.a2, "b": list(p.b), "c": list(p.c), "c_prime": list(p.c_prime)}


def _qary_residues(p: ParamsQaryTT1) -> dict:
    out = _bin_residues(p.inner)
    out.update(beta=list(p.beta), gamma=list(p.gamma), gamma_prime=list(p.gamma_prime))
    return out


def params_to_dict(params) -> dict:
    sh = shape_of(params)
    if sh.family == "c22":
        residues = {"a1": params.a1, "a2": params.a2, "a3": params.a3}
    elif sh.family == "ctt":
        residues = {"a1": params.inner.a1, "a2": params.inner.a2, "a3": params.inner.a3}
    elif sh.family == "bin_tt1":
        residues = _bin_residues(params)
    elif sh.family == "qary_tt1":
        residues = _qary_residues(params)
    else:
        residues = _qary_residues(params.inner)
    return {"family": sh.family, "n": sh.n, "q": sh.q, "t": sh.t, "s": sh.s, "P": sh.P, "residues": residues}


def params_from_dict(obj: dict):
    try:
        family = obj["family"]
        n, q = int(obj["n"]), int(obj["q"])
        res = obj.get("residues", {})
    except KeyError as exc:
        raise ValueError(f"instance is missing field {exc}") from None
    t = int(obj.get("t") or 2)
    s = obj.get("s")
    s = int(s) if s is not None else (t if family in ("c22", "ctt") else t - 1)
    P = obj.get("P")
    P = int(P) if P is not None else None
    shape = Shape(family, n, q, t, s, P)

    def bin_params(n_, t_, P_):
        return ParamsBinTT1(n_, t_, P_, int(res.get("a1", 0)), int(res.get("a2", 0)),
                            res.get("b"), res.get("c"), res.get("c_prime"))

    def qary_params(n_, q_, t_, P_):
        return ParamsQaryTT1(n_, q_, t_, P_, bin_params(n_, t_ + 1, signature_bound(n_, P_)),
                             res.get("beta"), res.get("gamma"), res.get("gamma_prime"))

    a = (int(res.get("a1", 0)), int(res.get("a2", 0)), int(res.get("a3", 0)))
    if family == "c22":
        return ParamsC22(n, q, *a)
    if family == "ctt":
        d = t - 1
        return ParamsTT(n, q, t, ParamsC22(-(-n // d), q ** d, *a))
    if family == "bin_tt1":
        return bin_params(n, t, P or n)
    if family == "qary_tt1":
        return qary_params(n, q, t, P)
    shape_p = ParamsTS(n, q, t, shape.s, P)
    inner = qary_params(shape_p.columns, q ** shape_p.d, shape_p.t_prime, shape_p.inner_bound)
    return ParamsTS(n, q, t, shape.s, P, inner)


def params_to_json(params) -> str:
    return json.dumps(params_to_dict(params), sort_keys=True)


def params_from_json(text: str):
    return params_from_dict(json.loads(text))
