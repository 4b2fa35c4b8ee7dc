import itertools

import pytest
from hypothesis import given, strategies as st

from burstcodes.bounds import ball_size_formula
from burstcodes.channel import (BurstEvent, apply_absorption_a, apply_absorption_b, apply_burst, apply_inversion,
                                apply_localized_deletions, ball, ball_partition, ball_words, burst_events,
                                is_exact_burst, localized_as_burst)
from burstcodes.core import parse_word


def w(text, q=2):
    return parse_word(text, q)


def test_apply_burst_examples():
    assert apply_burst(w("011110"), BurstEvent(2, 4, (1, 0, 1))) == w("01010")
    assert apply_burst(w("011110"), BurstEvent(3, 2, (0,))) == w("01010")
    assert apply_burst(w("00"), BurstEvent(1, 0, (1,))) == w("100")
    assert apply_burst(w("00"), BurstEvent(3, 0, (1,))) == w("001")


def test_apply_burst_rejects_bad_position_and_symbols():
    with pytest.raises(ValueError):
        apply_burst(w("0110"), BurstEvent(4, 2, (0,)))
    with pytest.raises(ValueError):
        apply_burst(w("0110"), BurstEvent(1, 5, ()))
    with pytest.raises(ValueError):
        apply_burst(w("0110"), BurstEvent(1, 1, (2,)), q=2)


def test_event_json_roundtrip():
    e = BurstEvent(3, 2, (1, 0))
    assert BurstEvent.from_json(e.to_json()) == e
    with pytest.raises(ValueError):
        BurstEvent.from_dict({"pos": 1, "t": 1})


def test_is_exact_burst():
    # inserted_1 = x_2 = 1, so this event shortens to a smaller burst
    assert not is_exact_burst(w("011110"), BurstEvent(2, 4, (1, 0, 1)))
    assert is_exact_burst(w("011110"), BurstEvent(3, 2, (0,)))
    assert not is_exact_burst(w("00"), BurstEvent(1, 1, (0,)))


def test_ball_examples():
    assert len(ball(w("00000"), 2, 2, 1)) == 5
    assert w("0101") in ball(w("0101"), 2, 2, 2)
    assert len(ball(w("012", 3), 3, 1, 1)) == 7


def ball_oracle(x, q, t, s):
    """Independent enumeration: every way to cut t symbols and paste s."""
    out = set()
    n = len(x)
    for i in range(n - t + 1):
        for ins in itertools.product(range(q), repeat=s):
            out.add(x[:i] + ins + x[i + t:])
    return out


@given(st.integers(2, 3).flatmap(lambda q: st.tuples(
    st.just(q), st.lists(st.integers(0, q - 1), min_size=3, max_size=7).map(tuple),
    st.integers(1, 3), st.integers(1, 3))))
def test_ball_matches_formula_and_oracle(args):
    q, x, t, s = args
    if t > len(x):
        return
    members = ball_words(x, q, t, s)
    assert members == ball_oracle(x, q, t, s)
    assert len(members) == ball_size_formula(len(x), q, t, s)


def test_ball_size_depends_on_center_without_insertions():
    # s = 0: plain burst deletions, the count varies with the runs of x
    assert len(ball(w("0000"), 2, 1, 0)) == 1
    assert len(ball(w("0101"), 2, 1, 0)) == 4


def test_partition_examples():
    cells = ball_partition(w("00000"), 2, 2, 1)
    assert [len(cells[i]) for i in sorted(cells)] == [1, 1, 1, 1, 1]
    cells = ball_partition(w("012", 3), 3, 1, 1)
    assert [len(cells[i]) for i in sorted(cells)] == [2, 2, 2, 1]


@given(st.integers(2, 3).flatmap(lambda q: st.tuples(
    st.just(q), st.lists(st.integers(0, q - 1), min_size=3, max_size=6).map(tuple),
    st.integers(1, 3), st.integers(1, 3))))
def test_partition_cells_tile_the_ball(args):
    q, x, t, s = args
    if t > len(x):
        return
    cells = ball_partition(x, q, t, s)
    last = len(x) - t + 2
    union = set()
    for i, cell in cells.items():
        assert not union & cell
        union |= cell
        assert len(cell) == (q ** (s - 1) if i == last else (q - 1) * q ** (s - 1))
    assert union == ball_words(x, q, t, s)


def test_burst_events_count():
    assert sum(1 for _ in burst_events(5, 2, 2, 1)) == 4 * 2


def test_inversion_examples():
    x = parse_word("012301230123", 4)
    assert apply_inversion(x, 1, 4) == parse_word("321001230123", 4)
    assert apply_inversion(w("010"), 1, 3) == w("010")
    assert apply_inversion(parse_word("0123", 4), 2, 2) == parse_word("0213", 4)


@given(st.lists(st.integers(0, 3), min_size=2, max_size=8).map(tuple), st.data())
def test_inversion_is_a_tt_burst(x, data):
    length = data.draw(st.integers(2, len(x)))
    i = data.draw(st.integers(1, len(x) - length + 1))
    assert apply_inversion(x, i, length) in ball_words(x, 4, length, length)


def test_absorption_a_examples():
    x = parse_word("01231113", 4)
    assert apply_absorption_a(x, 6, 4) == parse_word("0123123", 4)
    assert apply_absorption_a(x, 8, 4) == parse_word("0123111", 4)
    assert apply_absorption_a(x, 7, 4) == parse_word("0123113", 4)


def test_absorption_b_examples():
    x = parse_word("01231312", 4)
    assert apply_absorption_b(x, 4, 0, 4) == parse_word("01203312", 4)
    assert apply_absorption_b(x, 4, 2, 4) == parse_word("01222312", 4)
    assert apply_absorption_b(x, 8, 1, 4) == parse_word("01231311", 4)


def test_absorption_b_requires_a_strict_decrease():
    with pytest.raises(ValueError):
        apply_absorption_b(parse_word("0123", 4), 2, 1, 4)


@given(st.lists(st.integers(0, 3), min_size=2, max_size=8).map(tuple), st.data())
def test_absorptions_are_bursts(x, data):
    i = data.draw(st.integers(1, len(x)))
    assert apply_absorption_a(x, i, 4) in ball_words(x, 4, 2, 1)
    if x[i - 1] > 0:
        v = data.draw(st.integers(0, x[i - 1] - 1))
        assert apply_absorption_b(x, i, v, 4) in ball_words(x, 4, 2, 2)


def test_localized_deletions():
    x = parse_word("01234", 5)
    # positions 2 and 4 go
    assert apply_localized_deletions(x, 2, 3, (0, 2)) == parse_word("024", 5)
    assert apply_localized_deletions(x, 2, 3, (0, 1, 2)) == apply_burst(x, BurstEvent(2, 3, ()))
    assert apply_localized_deletions(x, 2, 3, (1,)) == parse_word("0134", 5)


@given(st.lists(st.integers(0, 1), min_size=4, max_size=10).map(tuple), st.data())
def test_localized_deletion_is_a_burst(x, data):
    t = data.draw(st.integers(1, min(3, len(x))))
    start = data.draw(st.integers(1, len(x) - t + 1))
    offs = data.draw(st.sets(st.integers(0, t - 1), min_size=1))
    e = localized_as_burst(x, start, t, sorted(offs))
    assert (e.deleted_len, e.s) == (t, t - len(offs))
    assert apply_burst(x, e) == apply_localized_deletions(x, start, t, sorted(offs))
