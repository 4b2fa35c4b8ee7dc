import itertools

import pytest
from hypothesis import given, strategies as st

from burstcodes.core import (array_row, at, common_prefix, common_suffix, complement, format_word, indicator, lift,
                             marker, pad_to_multiple, parse_word, row_sums, segment_context, segment_starts,
                             signature, signature_from_starts, starts_from_signature, sum_weight, unlift, vt_syndrome)

RUNNING = parse_word("132434412132", 5)


def words(q, min_size=0, max_size=12):
    return st.lists(st.integers(0, q - 1), min_size=min_size, max_size=max_size).map(tuple)


def test_parse_and_format_roundtrip():
    assert parse_word("0101", 2) == (0, 1, 0, 1)
    assert parse_word("10,0,11", 12) == (10, 0, 11)
    assert format_word((10, 0, 11), 12) == "10,0,11"
    assert format_word((1, 3, 2), 5) == "132"


@pytest.mark.parametrize("text,q", [("01x1", 2), ("012", 2), ("1,a", 12)])
def test_parse_rejects_bad_symbols(text, q):
    with pytest.raises(ValueError):
        parse_word(text, q)


def test_out_of_range_reads_are_zero():
    assert at((4, 5), 0) == 0
    assert at((4, 5), -1) == 0
    assert at((4, 5), 3) == 0
    assert at((4, 5), 2) == 5


def test_sum_weight():
    assert sum_weight((0,) * 5) == 0
    assert sum_weight(parse_word("01010011", 2)) == 4
    # plain digit sum 1+3+2+4+3+4+4+1+2+1+3+2
    assert sum_weight(RUNNING) == 30


def test_vt_syndrome():
    assert vt_syndrome((0,) * 4) == 0
    assert vt_syndrome(parse_word("01010011", 2)) == 2 + 4 + 7 + 8
    assert vt_syndrome((1, 1, 1, 1)) == 10


def test_array_row():
    x = (1, 2, 3, 4, 5, 6)
    assert array_row(x, 2, 1) == (1, 3, 5)
    assert array_row(x, 2, 2) == (2, 4, 6)
    assert array_row((1,), 3, 3) == ()


def test_lift_examples():
    assert lift((0, 1, 1, 1), 2, 2) == (2, 3)
    assert lift((0,) * 6, 3, 3) == (0, 0)
    assert lift((0, 1, 0, 1, 1), 2, 2) == (2, 2, 1)
    assert unlift((2, 3), 2, 2, 4) == (0, 1, 1, 1)
    assert unlift((0, 0), 3, 3, 6) == (0,) * 6
    assert unlift((2, 2, 1), 2, 2, 5) == (0, 1, 0, 1, 1)


def test_unlift_rejects_overwide_last_column():
    # the short last column holds one binary digit, so 2 is not a valid value
    with pytest.raises(ValueError):
        unlift((2, 2, 2), 2, 2, 5)


@given(st.integers(2, 4).flatmap(lambda q: st.tuples(st.just(q), words(q, 1), st.integers(1, 4))))
def test_lift_unlift_inverse(args):
    q, x, d = args
    assert unlift(lift(x, d, q), d, q, len(x)) == x
    assert len(lift(x, d, q)) == -(-len(x) // d)


def test_pad_to_multiple():
    assert pad_to_multiple((0, 1, 1), 2) == (0, 1, 1, 0)
    assert pad_to_multiple((0, 1, 1, 0), 2) == (0, 1, 1, 0)
    assert pad_to_multiple((1,), 4) == (1, 0, 0, 0)


def test_signature_examples():
    assert format_word(signature(RUNNING), 2) == "110101101010"
    assert format_word(signature(parse_word("2213123121", 4)), 2) == "1101011010"
    assert signature((0, 0, 0)) == (1, 1, 1)


def test_segment_starts_examples():
    assert segment_starts(RUNNING) == (0, 2, 3, 4, 5, 7, 8, 9, 10, 11, 12)
    assert segment_starts((0, 1, 2, 3)) == (0, 4)
    assert segment_starts((3, 0)) == (0, 1, 2)


def test_segment_context_examples():
    starts = segment_starts(RUNNING)
    assert segment_context(RUNNING, starts, 1, 2, "left") == (0,)
    assert segment_context(RUNNING, starts, 5, 2, "left") == (4,)
    assert segment_context(RUNNING, starts, 5, 2, "right") == (1,)


def test_signature_and_starts_agree_exhaustively():
    for q in range(2, 5):
        for n in range(1, 9 if q < 4 else 7):
            for x in itertools.product(range(q), repeat=n):
                starts = segment_starts(x)
                assert starts[0] == 0 and starts[-1] == n
                assert all(b > a for a, b in zip(starts, starts[1:]))
                assert signature_from_starts(starts) == signature(x)
                assert starts_from_signature(signature(x)) == starts


def test_marker_complement_indicator():
    x = parse_word("01010011", 2)
    assert marker(x) == (2, 4, 7, 8)
    assert marker((0,) * 4) == ()
    assert marker((1,) * 4) == (1, 2, 3, 4)
    assert complement((0, 1, 0, 1)) == (1, 0, 1, 0)
    assert complement((0,) * 4) == (1,) * 4
    assert complement(x) == parse_word("10101100", 2)
    assert indicator((0, 1, 2, 3)) == (0, 1, 0, 1)
    assert indicator((0,) * 4) == (0,) * 4
    assert format_word(indicator(RUNNING), 2) == "110010010110"


def test_marker_rejects_nonbinary():
    with pytest.raises(ValueError):
        marker((0, 2))


@given(words(3), words(3))
def test_prefix_suffix_bounds(a, b):
    k = common_prefix(a, b)
    assert a[:k] == b[:k]
    assert k == min(len(a), len(b)) or a[k] != b[k]
    j = common_suffix(a, b)
    assert a[len(a) - j:] == b[len(b) - j:]


@given(words(2, 1), st.integers(1, 4))
def test_row_sums_add_up(x, k):
    assert sum(row_sums(x, k, 10 ** 6)) == sum(x)
