"""Command-line interface.

Exit status: 0 ok, 1 domain failure (decode or verification failed),
2 usage error (bad arguments, malformed input, enumeration cap exceeded).
"""
from __future__ import annotations

import argparse
import csv
import json
import random
import sys

from . import applications, bounds, channel, permutation, verify
from .codes import (DEFAULT_CAP, CapExceeded, DecodeFailure, UniquenessViolation, decode, param_search,
                    params_from_dict, params_to_dict)
from .core import as_word, format_word, parse_word

PERM_FAMILIES = ("tbsd", "leq_tbsd")
COMPOSITE_FAMILIES = ("leq_burst_del", "localized")


class UsageError(Exception):
    pass


def _int_list(text: str) -> list:
    try:
        vals = [int(v) for v in text.split(",") if v.strip()]
    except ValueError:
        raise UsageError(f"expected comma-separated integers, got {text!r}") from None
    if not vals:
        raise UsageError("empty list")
    return vals


def _window(text):
    if text is None:
        return None
    vals = _int_list(text)
    if len(vals) != 2:
        raise UsageError("a window is given as start,end")
    return tuple(vals)


def _word(text, q):
    try:
        return parse_word(text, q)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _emit_report(report, fmt, out):
    if fmt == "json":
        print(report.to_json(), file=out)
    elif fmt == "csv":
        w = csv.writer(out, lineterminator="\n")
        w.writerow(["family", "n", "q", "t", "s", "P", "check", "passed", "trials", "counterexample"])
        for c in report.checks:
            w.writerow([report.family, report.n, report.q, report.t, report.s, report.P, c.name, c.passed,
                        c.trials, "" if c.counterexample is None else repr(c.counterexample)])
    else:
        print(report.to_text(), file=out)
    return 0 if report.passed else 1


# subcommands

def cmd_ball(args, out):
    n = args.n if args.center is None else len(_word(args.center, args.q))
    if args.n is not None and n != args.n:
        raise UsageError(f"--center has length {n}, not --n {args.n}")
    if n is None:
        raise UsageError("give --n or --center")
    if not 0 <= args.t <= n:
        raise UsageError(f"need 0 <= t <= n, got t={args.t}")
    formula = bounds.ball_size_formula(n, args.q, args.t, args.s) if args.s >= 1 and args.t >= 1 else None
    center = _word(args.center, args.q) if args.center is not None else (0,) * n
    members = channel.ball(center, args.q, args.t, args.s)
    if formula is not None and formula != len(members):
        print(f"formula {formula} disagrees with enumeration {len(members)}", file=sys.stderr)
        return 1
    result = {"n": n, "q": args.q, "t": args.t, "s": args.s, "center": format_word(center, args.q),
              "ball_size": len(members), "formula": formula}
    if args.contains is not None:
        result["contains"] = _word(args.contains, args.q) in members
    if args.list:
        result["members"] = [format_word(y, args.q) for y in members.sorted()]
    if args.format == "json":
        print(json.dumps(result, sort_keys=True), file=out)
    else:
        if args.contains is not None:
            print("true" if result["contains"] else "false", file=out)
        else:
            print(len(members), file=out)
        for y in result.get("members", []):
            print(y, file=out)
    return 0


def _load_instance(path):
    try:
        with open(path) as fh:
            return json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise UsageError(f"cannot read instance file {path}: {exc}") from None


def _perm_params(obj):
    """tbsd: {"family": "tbsd", "n", "t", "inner": <cts instance>}; leq_tbsd: inner is a list."""
    try:
        n, t = int(obj["n"]), int(obj["t"])
        if obj["family"] == "tbsd":
            return n, t, params_from_dict(obj["inner"])
        inner = tuple(params_from_dict(d) for d in obj["inner"])
        return n, t, permutation.PermCompositeParams(n, t, int(obj["P"]), inner, obj.get("locator", "trivial"))
    except KeyError as exc:
        raise UsageError(f"instance is missing field {exc}") from None


def perm_instance_to_dict(kind, params, n, t):
    if kind == "tbsd":
        return {"family": "tbsd", "n": n, "t": t, "inner": params_to_dict(params)}
    return {"family": "leq_tbsd", "n": n, "t": t, "P": params.P, "locator": params.locator,
            "inner": [params_to_dict(p) for p in params.inner]}


def cmd_decode(args, out):
    obj = _load_instance(args.instance)
    family = obj.get("family")
    window = _window(args.window)
    try:
        if family in PERM_FAMILIES:
            n, t, p = _perm_params(obj)
            z = permutation.parse_permutation(args.word)
            if family == "tbsd":
                x = permutation.decode_tbsd(z, p, t, n, window)
            else:
                loc = applications.GenieLocator(window) if window else None
                x = permutation.decode_leq_tbsd(z, p, loc)
            print(permutation.format_permutation(x), file=out)
            return 0
        if family in COMPOSITE_FAMILIES:
            cp = applications.composite_from_dict(obj)
            z = _word(args.word, cp.q)
            loc = applications.GenieLocator(window) if window else None
            x = applications.decode_composite(z, cp, loc)
            print(format_word(x, cp.q), file=out)
            return 0
        p = params_from_dict(obj)
    except ValueError as exc:
        if isinstance(exc, DecodeFailure):
            raise
        raise UsageError(str(exc)) from None
    z = _word(args.word, p.q)
    x = decode(z, p, window)
    print(format_word(x, p.q), file=out)
    return 0


def cmd_verify(args, out):
    fam = args.family
    if fam in ("c22", "ctt", "bin_tt1", "qary_tt1", "cts"):
        if args.n is None or args.q is None:
            raise UsageError("--n and --q are required")
        t = args.t if args.t is not None else 2
        s = args.s if args.s is not None else (t if fam in ("c22", "ctt") else t - 1)
        report = verify.verify_family(fam, args.n, args.q, t, s, args.P, "best" if args.best else "all",
                                      cap=args.cap)
    elif fam == "tbsd":
        report = verify.verify_tbsd(args.n, args.t or 1, args.cap)
    elif fam == "leq_tbsd":
        report = verify.verify_leq_tbsd(args.n, args.t or 1, args.P or args.n, args.locator, args.cap)
    elif fam in COMPOSITE_FAMILIES:
        report = verify.verify_composite(fam, args.n, args.q or 2, args.t or 2, args.P or args.n, args.locator,
                                         args.cap)
    elif fam == "inversion":
        report = verify.verify_inversion(args.n, args.q, args.t or 2, args.cap)
    elif fam in ("absorption_a", "absorption_b"):
        report = verify.verify_absorption(fam[-1].upper(), args.n, args.q, args.cap)
    else:
        raise UsageError(f"unknown family {fam!r}")
    return _emit_report(report, args.format, out)


def cmd_table(args, out):
    ns = _int_list(args.n)
    if args.kind == "bounds":
        reports = [bounds.bound_report(n, args.q, args.t, args.s) for n in ns]
        out.write(bounds.bounds_csv(reports))
        return 0
    if args.family is None:
        raise UsageError("--family is required for a redundancy table")
    t = args.t
    s = args.s if args.s is not None else (t if args.family in ("c22", "ctt") else t - 1)
    rows = verify.redundancy_table(args.family, ns, args.q, t, s, args.P, args.cap)
    out.write(verify.table_csv(rows))
    return 0


def cmd_search(args, out):
    t = args.t
    s = args.s if args.s is not None else (t if args.family in ("c22", "ctt") else t - 1)
    params, size = param_search(args.family, args.n, args.q, t, s, args.P, args.cap)
    obj = params_to_dict(params)
    obj["code_size"] = size
    print(json.dumps(obj, sort_keys=True), file=out)
    return 0


def cmd_simulate(args, out):
    if args.perm is not None:
        sigma = permutation.as_permutation(permutation.parse_permutation(args.perm))
        if args.bsd is None:
            raise UsageError("a permutation needs --bsd i,t")
        i, t = _int_list(args.bsd)
        print(permutation.format_permutation(permutation.apply_stable_burst_deletion(sigma, i, t)), file=out)
        return 0
    if args.word is None or args.q is None:
        raise UsageError("give --word and --q (or --perm)")
    x = _word(args.word, args.q)
    chosen = [a for a in ("event", "random_event", "inversion", "absorption_a", "absorption_b", "localized")
              if getattr(args, a) is not None]
    if len(chosen) != 1:
        raise UsageError("give exactly one error: --event, --random-event, --inversion, --absorption-a, "
                         "--absorption-b or --localized")
    kind = chosen[0]
    if kind == "event":
        try:
            e = channel.BurstEvent.from_json(args.event)
        except (json.JSONDecodeError, TypeError) as exc:
            raise UsageError(f"malformed event: {exc}") from None
        y = channel.apply_burst(x, e, args.q)
    elif kind == "random_event":
        t, s = _int_list(args.random_event)
        rng = random.Random(args.seed)
        pos = rng.randint(1, len(x) - t + 1)
        ins = [rng.randrange(args.q) for _ in range(s)]
        e = channel.BurstEvent(pos, t, ins)
        print(f"# seed {args.seed} event {e.to_json()}", file=out)
        y = channel.apply_burst(x, e, args.q)
    elif kind == "inversion":
        i, length = _int_list(args.inversion)
        y = channel.apply_inversion(x, i, length)
    elif kind == "absorption_a":
        y = channel.apply_absorption_a(x, int(args.absorption_a), args.q)
    elif kind == "absorption_b":
        i, v = _int_list(args.absorption_b)
        y = channel.apply_absorption_b(x, i, v, args.q)
    else:
        vals = _int_list(args.localized)
        y = channel.apply_localized_deletions(x, vals[0], vals[1], vals[2:])
    print(format_word(y, args.q), file=out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="burstcodes", description="(t,s)-burst correcting codes")
    sub = parser.add_subparsers(dest="command", required=True)

    def fmt(p, choices=("text", "json")):
        p.add_argument("--format", choices=choices, default="text")

    p = sub.add_parser("ball", help="ball size by formula and enumeration")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--n", type=int)
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--center", help="center word (default all zeros)")
    p.add_argument("--list", action="store_true", help="list members")
    p.add_argument("--contains", help="test membership of a word")
    fmt(p)
    p.set_defaults(func=cmd_ball)

    p = sub.add_parser("decode", help="decode a received word with an instance file")
    p.add_argument("--instance", required=True)
    p.add_argument("--word", required=True)
    p.add_argument("--window", help="start,end of the window holding the errors")
    p.set_defaults(func=cmd_decode)

    p = sub.add_parser("verify", help="exhaustive verification of a family")
    p.add_argument("--family", required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--q", type=int)
    p.add_argument("--t", type=int)
    p.add_argument("--s", type=int)
    p.add_argument("--P", type=int)
    p.add_argument("--locator", choices=("genie", "trivial"), default="trivial")
    scope = p.add_mutually_exclusive_group()
    scope.add_argument("--best", action="store_true", help="check only the largest instance")
    scope.add_argument("--all", action="store_true", help="check every instance (default)")
    p.add_argument("--cap", type=int, default=DEFAULT_CAP, help="largest q^n (or n!) to enumerate")
    p.add_argument("--workers", type=int, default=1, help="accepted for compatibility; checks run in one process")
    fmt(p, ("text", "json", "csv"))
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("table", help="redundancy or bound table as CSV")
    p.add_argument("--kind", choices=("redundancy", "bounds"), default="redundancy")
    p.add_argument("--family")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--t", type=int, default=2)
    p.add_argument("--s", type=int)
    p.add_argument("--P", type=int)
    p.add_argument("--n", required=True, help="comma-separated lengths")
    p.add_argument("--cap", type=int, default=DEFAULT_CAP)
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("search", help="largest instance of a family")
    p.add_argument("--family", required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--t", type=int, default=2)
    p.add_argument("--s", type=int)
    p.add_argument("--P", type=int)
    p.add_argument("--cap", type=int, default=DEFAULT_CAP)
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("simulate", help="apply one error to a word")
    p.add_argument("--q", type=int)
    p.add_argument("--word")
    p.add_argument("--perm", help="comma-separated permutation")
    p.add_argument("--event", help='burst as JSON: {"pos": i, "t": t, "ins": [...]}')
    p.add_argument("--random-event", dest="random_event", help="t,s of a burst drawn with --seed")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--inversion", help="i,length")
    p.add_argument("--absorption-a", dest="absorption_a", help="i")
    p.add_argument("--absorption-b", dest="absorption_b", help="i,new_value")
    p.add_argument("--localized", help="window_start,t,offset[,offset...]")
    p.add_argument("--bsd", help="i,t stable deletions from --perm")
    p.set_defaults(func=cmd_simulate)
    return parser


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args, out)
    except (DecodeFailure, UniquenessViolation) as exc:
        print(f"decode failure: {exc}", file=sys.stderr)
        return 1
    except CapExceeded as exc:
        print(f"refused: {exc}", file=sys.stderr)
        return 2
    except (UsageError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
