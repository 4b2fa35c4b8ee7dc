import itertools
import math

import pytest
from hypothesis import given, settings, strategies as st

from burstcodes.applications import GenieLocator
from burstcodes.codes import DecodeFailure
from burstcodes.permutation import (apply_stable_burst_deletion, as_permutation, decode_leq_tbsd, decode_tbsd,
                                    format_permutation, leq_tbsd_for, lex_rank, lex_unrank, member_leq_tbsd,
                                    member_tbsd, overlapping_ranks, params_tbsd_for, parse_permutation, prj,
                                    rank_word, rebuild)


def test_projection():
    assert prj((5, 2, 5)) == (2, 1, 3)
    assert prj((3, 1, 2)) == (3, 1, 2)
    assert prj((7, 7, 7)) == (1, 2, 3)


def test_lex_rank_examples():
    assert lex_rank((1, 2, 3)) == 1
    assert lex_rank((3, 2, 1)) == 6
    for k, sigma in enumerate(itertools.permutations(range(1, 6)), 1):
        assert lex_rank(sigma) == k
        assert lex_unrank(k, 5) == sigma


def test_overlapping_ranks_examples():
    assert overlapping_ranks((1, 2, 3, 4), 1) == (1, 1, 1)
    assert overlapping_ranks((2, 1, 3), 1) == (2, 1)
    # windows 314 -> 213 (rank 3), 142 -> 132 (rank 2)
    assert overlapping_ranks((3, 1, 4, 2), 2) == (3, 2)
    assert rank_word((3, 1, 4, 2), 2) == (2, 1)


def test_stable_deletion_examples():
    assert apply_stable_burst_deletion((1, 2, 3, 4, 5), 2, 2) == (1, 4, 5)
    assert apply_stable_burst_deletion((3, 1, 4, 2), 1, 4) == ()
    assert apply_stable_burst_deletion((3, 1, 4, 2), 1, 1) == (1, 4, 2)


def test_permutation_parsing():
    assert parse_permutation("3,1,2") == (3, 1, 2)
    assert format_permutation((3, 1, 2)) == "3,1,2"
    with pytest.raises(ValueError):
        as_permutation((1, 1, 2))
    with pytest.raises(ValueError):
        parse_permutation("1,x")


@settings(max_examples=40, deadline=None)
@given(st.permutations(range(1, 10)), st.integers(1, 2), st.data())
def test_rebuild_recovers_any_deletion(sigma, t, data):
    sigma = tuple(sigma)
    i = data.draw(st.integers(1, len(sigma) - t + 1))
    z = apply_stable_burst_deletion(sigma, i, t)
    assert rebuild(z, overlapping_ranks(sigma, t), len(sigma)) == sigma


def test_rebuild_rejects_repeated_values():
    with pytest.raises(DecodeFailure):
        rebuild((1, 1, 2), (1, 1, 1), 4)


def check_tbsd(sigma, t):
    n = len(sigma)
    p = params_tbsd_for(sigma, t)
    assert member_tbsd(sigma, p, t)
    assert p.q == math.factorial(t + 1)
    for i in range(1, n - t + 2):
        assert decode_tbsd(apply_stable_burst_deletion(sigma, i, t), p, t, n) == sigma


def test_tbsd_exhaustive_n6():
    for sigma in itertools.permutations(range(1, 7)):
        check_tbsd(sigma, 1)


@settings(max_examples=60, deadline=None)
@given(st.integers(7, 10).flatmap(lambda n: st.permutations(range(1, n + 1))), st.integers(1, 2))
def test_tbsd_random(sigma, t):
    check_tbsd(tuple(sigma), t)


def test_tbsd_suffix_deletion():
    sigma = (2, 5, 1, 7, 3, 6, 4)
    p = params_tbsd_for(sigma, 2)
    assert decode_tbsd(sigma[:-2], p, 2, 7) == sigma


@settings(max_examples=60, deadline=None)
@given(st.permutations(range(1, 8)), st.sampled_from([("genie", 3), ("genie", 4), ("trivial", 7)]))
def test_leq_tbsd_random(sigma, loc_p):
    locator, P = loc_p
    n, t = 7, 2
    sigma = tuple(sigma)
    cp = leq_tbsd_for(sigma, t, P, locator)
    assert member_leq_tbsd(sigma, cp)
    assert decode_leq_tbsd(sigma, cp) == sigma
    for i in range(1, t + 1):
        for pos in range(1, n - i + 2):
            loc = GenieLocator((pos, pos + i - 1)) if locator == "genie" else None
            assert decode_leq_tbsd(apply_stable_burst_deletion(sigma, pos, i), cp, loc) == sigma


def test_leq_tbsd_rejects_too_many_deletions():
    sigma = tuple(range(1, 8))
    cp = leq_tbsd_for(sigma, 2, 7)
    with pytest.raises(DecodeFailure):
        decode_leq_tbsd(sigma[:4], cp)
