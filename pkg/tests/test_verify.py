import itertools
import math

import pytest

from burstcodes.bounds import sphere_packing_redundancy
from burstcodes.channel import ball_words
from burstcodes.codes import (CapExceeded, ParamsC22, Shape, c22_syndrome, decode_c22, member_c22, param_search,
                              params_c22_for)
from burstcodes.verify import (all_permutations, check_bounded_disjointness, check_class_disjointness,
                               check_disjoint_balls, dual_burst_check, enumerate_code, redundancy_sandwich,
                               redundancy_table, roundtrip, table_csv, verify_family, windowed_outcomes)


def test_enumerate_code():
    assert len(enumerate_code(lambda x: True, 3, 2)) == 8
    code = enumerate_code(lambda x: member_c22(x, ParamsC22(8, 2)), 8, 2)
    assert code == sorted(code)
    assert len(code) == sum(1 for x in itertools.product(range(2), repeat=8) if c22_syndrome(x, 2) == (0, 0, 0))
    # a residue no word of length 3 reaches
    assert enumerate_code(lambda x: member_c22(x, ParamsC22(3, 2, 3, 0, 0)), 3, 2) == []


def test_enumeration_cap():
    with pytest.raises(CapExceeded):
        enumerate_code(lambda x: True, 30, 2)
    with pytest.raises(ValueError):
        list(all_permutations(12, cap=1000))


def test_disjointness_singleton_and_full_space():
    assert check_disjoint_balls([(0, 1, 0, 1, 1)], 2, 2, 2).passed
    res = check_disjoint_balls(list(itertools.product(range(2), repeat=5)), 2, 2, 2)
    assert not res.passed
    x, y, z = res.counterexample
    assert x != y and z in ball_words(x, 2, 2, 2) and z in ball_words(y, 2, 2, 2)


def test_disjointness_best_c22():
    p, _ = param_search("c22", 8, 2)
    code = enumerate_code(lambda x: member_c22(x, p), 8, 2)
    assert check_disjoint_balls(code, 2, 2, 2).passed
    assert dual_burst_check(code, 2, 2, 2).passed


def test_class_disjointness_finds_bad_key():
    words = list(itertools.product(range(2), repeat=6))
    assert check_class_disjointness(words, lambda x: c22_syndrome(x, 2), 2, 2, 2).passed
    assert not check_class_disjointness(words, lambda x: sum(x) % 4, 2, 2, 2).passed


def test_roundtrip_harness_catches_a_broken_decoder():
    p, _ = param_search("c22", 6, 2)
    code = enumerate_code(lambda x: member_c22(x, p), 6, 2)

    def outcomes(x):
        return [(z, p) for z in sorted(ball_words(x, 2, 2, 2))]
    assert roundtrip(code, decode_c22, outcomes).passed

    def broken(z, p):
        return z
    res = roundtrip(code, broken, outcomes)
    assert not res.passed
    x, z, hint, got = res.counterexample
    assert got == z != x


def test_windowed_outcomes_stay_inside_windows():
    x = (0, 1, 1, 0, 1, 0, 0, 1)
    for (lo, hi), z in windowed_outcomes(x, 2, 2, 1, 4):
        assert hi - lo + 1 == 4
        assert x[:lo - 1] == z[:lo - 1]
        assert x[hi:] == z[hi - 1:]


def test_bounded_disjointness():
    words = list(itertools.product(range(2), repeat=8))
    from burstcodes.codes import bin_tt1_syndrome
    key = lambda x: bin_tt1_syndrome(x, 2, 4)  # noqa: E731
    assert check_bounded_disjointness(words, key, 2, 2, 1, 4).passed


@pytest.mark.parametrize("args", [
    ("c22", 7, 2, 2, 2, None), ("ctt", 7, 2, 3, 3, None), ("bin_tt1", 9, 2, 2, 1, None),
    ("bin_tt1", 9, 2, 2, 1, 6), ("qary_tt1", 6, 3, 2, 1, None), ("cts", 9, 2, 3, 1, None),
    ("cts", 9, 2, 2, 0, 4)])
@pytest.mark.parametrize("scope", ["all", "best"])
def test_verify_family_passes(args, scope):
    rep = verify_family(*args, scope=scope)
    assert rep.passed, rep.to_text()
    names = [c.name for c in rep.checks]
    family, _, _, t, s, P = args
    if t != s and P is None:
        assert any(name.startswith("dual") for name in names)


def test_verify_family_bad_scope():
    with pytest.raises(ValueError):
        verify_family("c22", 6, 2, scope="some")


def test_reports_are_reproducible():
    a = verify_family("bin_tt1", 8, 2, 2, 1).to_json()
    b = verify_family("bin_tt1", 8, 2, 2, 1).to_json()
    assert a == b


def test_redundancy_table_c22():
    rows = redundancy_table("c22", [6, 8, 10], 2)
    for r in rows:
        assert r["sphere_packing_bits"] == pytest.approx(sphere_packing_redundancy(r["n"], 2, 2, 2), abs=1e-9)
        assert 0 <= r["gap_bits"]
        assert r["redundancy_bits"] <= r["pigeonhole_bits"] + 1e-9
        assert r["pigeonhole_bits"] <= math.log2(r["n"]) + 4 + 2 + 1e-9
    text = table_csv(rows)
    assert text.splitlines()[0].endswith("gap_bits")
    assert len(text.splitlines()) == 4


def test_single_substitution_bound_column():
    for n in range(2, 10):
        for q in (2, 3):
            assert sphere_packing_redundancy(n, q, 1, 1) == pytest.approx(math.log2((q - 1) * n + 1))


def test_redundancy_sandwich():
    p, size = param_search("c22", 8, 2)
    low, mid, high = redundancy_sandwich(Shape("c22", 8, 2), size)
    assert low <= mid <= high


def test_applications_and_permutation_drivers():
    from burstcodes.verify import (verify_absorption, verify_composite, verify_inversion, verify_leq_tbsd,
                                   verify_tbsd)
    assert verify_inversion(5, 3, 3).passed
    assert verify_absorption("A", 5, 3).passed
    assert verify_absorption("B", 5, 3).passed
    with pytest.raises(ValueError):
        verify_absorption("C", 5, 3)
    assert verify_composite("leq_burst_del", 8, 2, 2, 4, "genie").passed
    assert verify_composite("localized", 8, 2, 2, 8, "trivial").passed
    rep = verify_tbsd(6, 1)
    assert rep.passed and len(rep.checks) == 3
    assert verify_leq_tbsd(7, 1, 3, "genie").passed


def test_rank_checks_on_short_permutations():
    from burstcodes.verify import check_rank_bursts, check_rank_separation
    # at n=5, t=2 the rank word has 3 symbols, fewer than the 4 a burst removes
    assert check_rank_bursts(5, 2).passed
    assert check_rank_separation(5, 2).passed
