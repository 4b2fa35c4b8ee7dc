"""Exhaustive checks: ball disjointness, decode roundtrips and redundancy tables.

Every syndrome class of a family is a code instance, so instead of checking
one instance at a time most checks run over the whole space and key each
ball element by (class, element). A collision inside a class is a pair of
codewords with intersecting balls. Words are visited in lexicographic order,
so the first witness is deterministic.
"""
from __future__ import annotations

import csv
import io
import itertools
import json
import math
import time
from dataclasses import asdict, dataclass, field

from .bounds import code_redundancy, sphere_packing_redundancy
from .channel import ball_words, position_range, splice
from .codes import (DEFAULT_CAP, FAMILIES, DecodeFailure, Shape, UniquenessViolation, all_words, check_cap,
                    class_sizes, param_search, pigeonhole_redundancy)


@dataclass
class CheckResult:
    name: str
    passed: bool
    trials: int = 0
    counterexample: tuple | None = None
    violations: int = 0     # how often two codewords survived one decode

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        extra = "" if self.passed else f" counterexample={self.counterexample}"
        return f"{status} {self.name} ({self.trials} trials){extra}"


@dataclass
class VerificationReport:
    family: str
    n: int
    q: int
    t: int
    s: int
    P: int | None = None
    code_size: int | None = None
    redundancy_bits: float | None = None
    bound_bits: float | None = None
    checks: list = field(default_factory=list)
    wall_time: float = 0.0

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def to_dict(self) -> dict:
        d = asdict(self)
        d.pop("wall_time")  # kept out so reports are reproducible byte for byte
        d["passed"] = self.passed
        return d

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, default=list)

    def to_text(self) -> str:
        head = f"{self.family} n={self.n} q={self.q} t={self.t} s={self.s} P={self.P}"
        lines = [head]
        if self.code_size is not None:
            lines.append(f"code size {self.code_size}, redundancy {self.redundancy_bits:.4f} bits, "
                         f"sphere-packing bound {self.bound_bits:.4f} bits" if self.bound_bits is not None
                         else f"code size {self.code_size}, redundancy {self.redundancy_bits:.4f} bits")
        lines += [c.line() for c in self.checks]
        lines.append("PASS" if self.passed else "FAIL")
        return "\n".join(lines)


def enumerate_code(membership, n: int, q: int, cap: int = DEFAULT_CAP) -> list:
    return [x for x in all_words(n, q, cap) if membership(x)]


def _first_collision(items, name):
    """items yields (key, owner); fail on the first key with two owners."""
    owners = {}
    trials = 0
    for key, owner in items:
        trials += 1
        prev = owners.setdefault(key, owner)
        if prev != owner:
            return CheckResult(name, False, trials, (prev, owner, key[-1]))
    return CheckResult(name, True, trials)


def check_disjoint_balls(code, q: int, t: int, s: int, name: str = "disjoint balls") -> CheckResult:
    """Pairwise disjointness of the (t,s)-balls; counterexample (x, y, common element)."""
    def items():
        for x in code:
            for z in sorted(ball_words(x, q, t, s)):
                yield (z,), tuple(x)
    return _first_collision(items(), name)


def check_class_disjointness(words, key_fn, q: int, t: int, s: int,
                             name: str = "disjoint balls, all classes") -> CheckResult:
    """Every class of a syndrome partition is (t,s)-correcting."""
    def items():
        for x in words:
            k = key_fn(x)
            for z in sorted(ball_words(x, q, t, s)):
                yield (k, z), x
    return _first_collision(items(), name)


def windowed_outcomes(x, q: int, t: int, s: int, P: int):
    """(window, z) for every length-P window and every burst whose deleted span lies inside it."""
    n = len(x)
    blocks = list(itertools.product(range(q), repeat=s))
    out = set()
    for lo in range(1, max(1, n - P + 1) + 1):
        hi = min(n, lo + P - 1)
        for pos in position_range(n, t):
            if pos < lo or pos + t - 1 > hi:
                continue
            for ins in blocks:
                out.add(((lo, hi), splice(x, pos, t, ins)))
    return sorted(out)


def check_bounded_disjointness(words, key_fn, q: int, t: int, s: int, P: int,
                               name: str = "P-bounded disjointness, all classes") -> CheckResult:
    """Two codewords of a class never share an outcome of bursts inside one common length-P window."""
    def items():
        for x in words:
            k = key_fn(x)
            for window, z in windowed_outcomes(x, q, t, s, P):
                yield (k, window, z), x
    return _first_collision(items(), name)


def roundtrip(code, decoder, outcomes, name: str = "roundtrip") -> CheckResult:
    """decoder(z, hint) must return x for every x in code and every (z, hint) in outcomes(x)."""
    trials = violations = 0
    first_bad = None
    for x in code:
        x = tuple(x)
        for z, hint in outcomes(x):
            trials += 1
            try:
                y = decoder(z, hint)
            except UniquenessViolation as exc:
                violations += 1
                y = f"UniquenessViolation: {exc}"
            except DecodeFailure as exc:
                y = f"DecodeFailure: {exc}"
            if y != x and first_bad is None:
                first_bad = (x, z, hint, y)
    return CheckResult(name, first_bad is None, trials, first_bad, violations)


def dual_burst_check(code, q: int, t: int, s: int) -> CheckResult:
    """A (t,s)-correcting code must also have disjoint (s,t)-balls."""
    return check_disjoint_balls(code, q, s, t, name=f"dual ({s},{t}) disjoint balls")


def check_class_dual(words, key_fn, q, t, s) -> CheckResult:
    return check_class_disjointness(words, key_fn, q, s, t, f"dual ({s},{t}) disjoint balls, all classes")


# family-level drivers

def verify_family(family: str, n: int, q: int, t: int = 2, s: int = 2, P: int | None = None,
                  scope: str = "all", dual: bool = True, cap: int = DEFAULT_CAP) -> VerificationReport:
    """Disjointness, decode roundtrip and (optionally) duality for one family.

    scope="all" checks every class with every word decoded under its own
    class; scope="best" checks the largest class only.
    """
    start = time.perf_counter()
    shape = Shape(family, n, q, t, s, P)
    fam = FAMILIES[family]
    bt, bs = fam.burst(shape)
    check_cap(q, n, cap)
    report = VerificationReport(family, n, q, t, s, P)
    sizes = class_sizes(shape, cap)
    size = max(sizes.values())
    report.code_size = size
    report.redundancy_bits = code_redundancy(size, n, q)
    if bs >= 1:
        report.bound_bits = sphere_packing_redundancy(n, q, bt, bs)
    key = lambda x: fam.syndrome(x, shape)  # noqa: E731
    bounded = P is not None and P < n

    if scope == "all":
        words = list(all_words(n, q, cap))
        if bounded:
            report.checks.append(check_bounded_disjointness(words, key, q, bt, bs, P))
        else:
            report.checks.append(check_class_disjointness(words, key, q, bt, bs))
        if dual and bt != bs and not bounded:
            report.checks.append(check_class_dual(words, key, q, bt, bs))
        params_of = lambda x: fam.params_for(x, shape)  # noqa: E731
    elif scope == "best":
        best, _ = param_search(family, n, q, t, s, P, cap)
        words = enumerate_code(lambda x: fam.member(x, best), n, q, cap)
        if bounded:
            report.checks.append(check_bounded_disjointness(words, lambda x: 0, q, bt, bs, P, "P-bounded disjointness"))
        else:
            report.checks.append(check_disjoint_balls(words, q, bt, bs))
        if dual and bt != bs and not bounded:
            report.checks.append(dual_burst_check(words, q, bt, bs))
        params_of = lambda x: best  # noqa: E731
    else:
        raise ValueError(f"scope must be 'all' or 'best', got {scope!r}")

    if bounded:
        def outcomes(x):
            for window, z in windowed_outcomes(x, q, bt, bs, P):
                yield z, (params_of(x), window)
    else:
        def outcomes(x):
            p = params_of(x)
            for z in sorted(ball_words(x, q, bt, bs)):
                yield z, (p, None)
    report.checks.append(roundtrip(words, lambda z, h: fam.decode(z, h[0], h[1]), outcomes,
                                   "decode roundtrip" + (", genie windows" if bounded else "")))
    report.wall_time = time.perf_counter() - start
    return report


def redundancy_table(family: str, ns, q: int, t: int = 2, s: int = 2, P: int | None = None,
                     cap: int = DEFAULT_CAP) -> list:
    """Best enumerated size per n, its redundancy, the sphere-packing bound and the pigeonhole bound."""
    rows = []
    for n in ns:
        shape = Shape(family, n, q, t, s, P)
        bt, bs = FAMILIES[family].burst(shape)
        size = max(class_sizes(shape, cap).values())
        red = code_redundancy(size, n, q)
        bound = sphere_packing_redundancy(n, q, bt, bs) if bs >= 1 else None
        rows.append({
            "family": family, "n": n, "q": q, "t": t, "s": s,
            "code_size": size,
            "redundancy_bits": red,
            "sphere_packing_bits": bound,
            "pigeonhole_bits": pigeonhole_redundancy(shape),
            "gap_bits": None if bound is None else red - bound,
        })
    return rows


TABLE_COLUMNS = ["family", "n", "q", "t", "s", "code_size", "redundancy_bits", "sphere_packing_bits",
                 "pigeonhole_bits", "gap_bits"]


def table_csv(rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(TABLE_COLUMNS)
    for r in rows:
        w.writerow(["" if r[c] is None else (f"{r[c]:.6f}" if isinstance(r[c], float) else r[c])
                    for c in TABLE_COLUMNS])
    return buf.getvalue()


def redundancy_sandwich(shape: Shape, code_size: int) -> tuple:
    """(sphere-packing bits, code redundancy bits, pigeonhole bits) for one instance."""
    bt, bs = FAMILIES[shape.family].burst(shape)
    return (sphere_packing_redundancy(shape.n, shape.q, bt, bs), code_redundancy(code_size, shape.n, shape.q),
            pigeonhole_redundancy(shape))


def all_permutations(n: int, cap: int = DEFAULT_CAP):
    if math.factorial(n) > cap:
        raise ValueError(f"{n}! permutations exceed the enumeration cap {cap}")
    return itertools.permutations(range(1, n + 1))


# applications

def verify_inversion(n: int, q: int, t: int, cap: int = DEFAULT_CAP) -> VerificationReport:
    """Every word, decoded under its own (t,t) class, survives every inversion of length 2..t."""
    from .applications import decode_inversion
    from .channel import apply_inversion
    from .codes import params_ctt_for

    start = time.perf_counter()
    report = VerificationReport("inversion", n, q, t, t)

    def outcomes(x):
        p = params_ctt_for(x, q, t)
        seen = set()
        for length in range(2, t + 1):
            for i in range(1, n - length + 2):
                z = apply_inversion(x, i, length)
                if z not in seen:
                    seen.add(z)
                    yield z, p
    report.checks.append(roundtrip(all_words(n, q, cap), decode_inversion, outcomes, "inversion roundtrip"))
    report.wall_time = time.perf_counter() - start
    return report


def verify_absorption(kind: str, n: int, q: int, cap: int = DEFAULT_CAP) -> VerificationReport:
    """Type A uses the (2,1) code, type B the (2,2) code; every word under its own class."""
    from .applications import decode_absorption_a, decode_absorption_b
    from .channel import apply_absorption_a, apply_absorption_b
    from .codes import params_c22_for, params_cts_for

    start = time.perf_counter()
    if kind == "A":
        report = VerificationReport("absorption_a", n, q, 2, 1)

        def outcomes(x):
            p = params_cts_for(x, q, 2, 1)
            for z in sorted({apply_absorption_a(x, i, q) for i in range(1, n + 1)}):
                yield z, p
        decoder = decode_absorption_a
    elif kind == "B":
        report = VerificationReport("absorption_b", n, q, 2, 2)

        def outcomes(x):
            p = params_c22_for(x, q)
            zs = {apply_absorption_b(x, i, v, q) for i in range(1, n + 1) for v in range(x[i - 1])}
            for z in sorted(zs):
                yield z, p
        decoder = decode_absorption_b
    else:
        raise ValueError("absorption type must be 'A' or 'B'")
    report.checks.append(roundtrip(all_words(n, q, cap), decoder, outcomes, f"absorption {kind} roundtrip"))
    report.wall_time = time.perf_counter() - start
    return report


def composite_events(kind: str, n: int, t: int):
    """(window start, width, offsets) of every deletion pattern of the composite kind."""
    if kind == "leq_burst_del":
        return [(pos, i, tuple(range(i))) for i in range(1, t + 1) for pos in range(1, n - i + 2)]
    return [(ws, t, offs) for ws in range(1, n - t + 2)
            for r in range(1, t + 1) for offs in itertools.combinations(range(t), r)]


def verify_composite(kind: str, n: int, q: int, t: int, P: int, locator: str,
                     cap: int = DEFAULT_CAP) -> VerificationReport:
    """<=t-burst-deletion or localized-deletion roundtrip, every word under its own instance."""
    from .applications import GenieLocator, composite_for, decode_composite
    from .channel import apply_localized_deletions

    start = time.perf_counter()
    report = VerificationReport(kind, n, q, t, 0, P)
    events = composite_events(kind, n, t)

    def outcomes(x):
        cp = composite_for(x, kind, q, t, P, locator)
        seen = set()
        for ws, width, offs in events:
            z = apply_localized_deletions(x, ws, width, offs)
            span = (ws, ws + width - 1)
            key = (z, span if locator == "genie" else None)
            if key not in seen:
                seen.add(key)
                yield z, (cp, GenieLocator(span) if locator == "genie" else None)
    report.checks.append(roundtrip(all_words(n, q, cap), lambda z, h: decode_composite(z, h[0], h[1]), outcomes,
                                   f"{kind} roundtrip, {locator} locator"))
    report.wall_time = time.perf_counter() - start
    return report


# permutations

def check_rank_bursts(n: int, t: int, cap: int = DEFAULT_CAP) -> CheckResult:
    """A t-BSD moves the rank sequence by at most one (2t,t)-burst."""
    from .permutation import apply_stable_burst_deletion, rank_word

    q = math.factorial(t + 1)
    trials = 0
    for sigma in all_permutations(n, cap):
        ranks = rank_word(sigma, t)
        # a rank word shorter than 2t is rewritten whole, so only the length is constrained
        reach = ball_words(ranks, q, 2 * t, t) if len(ranks) >= 2 * t else None
        for i in range(1, n - t + 2):
            trials += 1
            z = rank_word(apply_stable_burst_deletion(sigma, i, t), t)
            if (len(z) != max(n - 2 * t, 0)) if reach is None else z not in reach:
                return CheckResult("rank sequence within one (2t,t)-burst", False, trials, (sigma, i))
    return CheckResult("rank sequence within one (2t,t)-burst", True, trials)


def check_rank_separation(n: int, t: int, cap: int = DEFAULT_CAP) -> CheckResult:
    """Two permutations sharing a t-BSD descendant have different rank sequences."""
    from .permutation import apply_stable_burst_deletion, rank_word

    parents = {}
    trials = 0
    name = "distinct rank sequences for shared descendants"
    for sigma in all_permutations(n, cap):
        ranks = rank_word(sigma, t)
        for i in range(1, n - t + 2):
            trials += 1
            z = apply_stable_burst_deletion(sigma, i, t)
            for other, other_ranks in parents.setdefault(z, []):
                if other != sigma and other_ranks == ranks:
                    return CheckResult(name, False, trials, (other, sigma, z))
            if all(o != sigma for o, _ in parents[z]):
                parents[z].append((sigma, ranks))
    return CheckResult(name, True, trials)


def verify_tbsd(n: int, t: int, cap: int = DEFAULT_CAP) -> VerificationReport:
    from .permutation import apply_stable_burst_deletion, decode_tbsd, params_tbsd_for

    start = time.perf_counter()
    report = VerificationReport("tbsd", n, math.factorial(t + 1), t, 0)
    report.checks.append(check_rank_bursts(n, t, cap))
    report.checks.append(check_rank_separation(n, t, cap))

    def outcomes(sigma):
        p = params_tbsd_for(sigma, t)
        for i in range(1, n - t + 2):
            yield apply_stable_burst_deletion(sigma, i, t), p
    report.checks.append(roundtrip(all_permutations(n, cap), lambda z, p: decode_tbsd(z, p, t, n), outcomes,
                                   "t-BSD roundtrip"))
    report.wall_time = time.perf_counter() - start
    return report


def verify_leq_tbsd(n: int, t: int, P: int, locator: str, cap: int = DEFAULT_CAP) -> VerificationReport:
    from .applications import GenieLocator
    from .permutation import apply_stable_burst_deletion, decode_leq_tbsd, leq_tbsd_for

    start = time.perf_counter()
    report = VerificationReport("leq_tbsd", n, 0, t, 0, P)

    def outcomes(sigma):
        cp = leq_tbsd_for(sigma, t, P, locator)
        for i in range(1, t + 1):
            for pos in range(1, n - i + 2):
                loc = GenieLocator((pos, pos + i - 1)) if locator == "genie" else None
                yield apply_stable_burst_deletion(sigma, pos, i), (cp, loc)
    report.checks.append(roundtrip(all_permutations(n, cap), lambda z, h: decode_leq_tbsd(z, h[0], h[1]),
                                   outcomes, f"<=t-BSD roundtrip, {locator} locator"))
    report.wall_time = time.perf_counter() - start
    return report
