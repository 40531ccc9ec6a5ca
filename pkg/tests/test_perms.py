"""Permutation words, letter classification, and class enumeration."""

from itertools import permutations
from math import comb, factorial

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from eulab.errors import CapExceededError, InvalidPermutationError
from eulab.perms import (
    DOUBLE_ASC,
    DOUBLE_DESC,
    PEAK,
    VALLEY,
    PermClass,
    check_word,
    class_size,
    classify,
    enumerate_class,
    enumeration_cap,
    format_perm,
    is_prefix_decreasing,
    lrmin_values,
    minima,
    parse_perm,
    rlmin_values,
    stats,
)


def test_stats_213():
    s = stats((2, 1, 3))
    assert (s.des, s.asc) == (1, 1)
    assert (s.peaks, s.valleys) == (0, 1)
    assert (s.double_asc, s.double_desc) == (1, 1)
    assert (s.lrmin, s.rlmin) == (2, 2)
    assert (s.internal_da, s.internal_dd) == (0, 0)
    assert (s.rlmin_da, s.lrmin_dd) == (1, 1)
    assert s.weight == 2


def test_stats_identity():
    n = 6
    s = stats(tuple(range(1, n + 1)))
    assert (s.des, s.asc) == (0, n - 1)
    assert (s.peaks, s.valleys) == (0, 1)
    assert (s.double_asc, s.double_desc) == (n - 1, 0)
    assert (s.lrmin, s.rlmin) == (1, n)


def test_classify_worked_example():
    word = (7, 5, 4, 1, 2, 3, 9, 8, 6)
    assert classify(word) == (
        DOUBLE_DESC,
        DOUBLE_DESC,
        DOUBLE_DESC,
        VALLEY,
        DOUBLE_ASC,
        DOUBLE_ASC,
        PEAK,
        DOUBLE_DESC,
        VALLEY,
    )


def test_every_letter_classified_once():
    for p in permutations(range(1, 6)):
        kinds = classify(p)
        assert len(kinds) == 5
        assert set(kinds) <= {PEAK, VALLEY, DOUBLE_ASC, DOUBLE_DESC}
        # the value 1 is always a valley under the high padding
        assert kinds[p.index(1)] == VALLEY


def test_minima_examples():
    word = (5, 4, 1, 2, 7, 3, 6, 10, 9, 8)
    lpos, rpos = minima(word)
    assert lpos == (1, 2, 3)
    assert rpos == (3, 4, 6, 7, 10)
    assert rlmin_values(word) == {1, 2, 3, 6, 8}
    assert tuple(word[i - 1] for i in rpos) == (1, 2, 3, 6, 8)

    n = 5
    down = tuple(range(n, 0, -1))
    assert minima(down) == (tuple(range(1, n + 1)), (n,))
    assert lrmin_values(down) == set(range(1, n + 1))

    assert minima((2, 1)) == ((1, 2), (2,))


def test_rlmin_values_increase_left_to_right():
    for p in permutations(range(1, 7)):
        _, rpos = minima(p)
        vals = [p[i - 1] for i in rpos]
        assert vals == sorted(vals)


def test_is_prefix_decreasing():
    assert is_prefix_decreasing((3, 1, 2)) is True
    assert is_prefix_decreasing((2, 3, 1)) is False
    assert is_prefix_decreasing((1,)) is True
    # equivalent criterion: the first ascent (if any) is at the value 1
    for p in permutations(range(1, 7)):
        asc_positions = [i for i in range(5) if p[i] < p[i + 1]]
        first_asc_at_one = not asc_positions or p[asc_positions[0]] == 1
        assert is_prefix_decreasing(p) == first_asc_at_one, p


def test_parse_and_format():
    assert parse_perm("2 1 3") == (2, 1, 3)
    assert parse_perm("2,1,3") == (2, 1, 3)
    assert format_perm((2, 1, 3)) == "2 1 3"
    with pytest.raises(InvalidPermutationError):
        parse_perm("1 1 2")
    with pytest.raises(InvalidPermutationError):
        parse_perm("0 1")
    with pytest.raises(InvalidPermutationError):
        check_word((1, 3))


def test_enumerate_prefix_decreasing_class():
    words = list(enumerate_class(PermClass.PRW, 4))
    assert len(words) == 16
    assert words == sorted(words)
    expected = {
        (1, 2, 3, 4), (1, 2, 4, 3), (1, 3, 2, 4), (1, 3, 4, 2),
        (2, 1, 3, 4), (2, 1, 4, 3), (3, 1, 2, 4), (3, 1, 4, 2),
        (3, 2, 1, 4), (4, 1, 2, 3), (4, 1, 3, 2), (4, 2, 1, 3),
        (4, 3, 1, 2), (4, 3, 2, 1), (1, 4, 2, 3), (1, 4, 3, 2),
    }
    assert set(words) == expected
    assert list(enumerate_class(PermClass.PRW, 1)) == [(1,)]


def test_enumerate_alternating():
    words = list(enumerate_class(PermClass.ALT_DOWN_UP, 4))
    assert words == [
        (2, 1, 4, 3), (3, 1, 4, 2), (3, 2, 4, 1), (4, 1, 3, 2), (4, 2, 3, 1),
    ]


def test_enumerate_sym_edge_cases():
    assert list(enumerate_class(PermClass.SYM, 0)) == [()]
    assert len(list(enumerate_class(PermClass.SYM, 4))) == 24


def test_enumerate_interior_ndd():
    words = list(enumerate_class(PermClass.NDD_INTERIOR, 3))
    # the unpadded condition only excludes an index 1 < i < n with a
    # descending run through it
    assert (3, 2, 1) not in words
    assert set(words) == set(permutations(range(1, 4))) - {(3, 2, 1)}


def test_class_sizes():
    assert class_size(PermClass.PRW, 4) == 16
    assert class_size(PermClass.ALT_DOWN_UP, 4) == 5
    assert class_size(PermClass.SYM, 5) == 120


def test_prefix_decreasing_count_formula():
    for n in range(1, 8):
        count = class_size(PermClass.PRW, n + 1)
        assert count == 1 + sum(comb(n, m) * factorial(m) for m in range(1, n + 1))


def test_cap_enforced(monkeypatch):
    with pytest.raises(CapExceededError):
        list(enumerate_class(PermClass.SYM, 11))
    monkeypatch.setenv("EULAB_MAX_N", "3")
    assert enumeration_cap() == 3
    with pytest.raises(CapExceededError):
        list(enumerate_class(PermClass.SYM, 4))
    monkeypatch.delenv("EULAB_MAX_N")
    assert enumeration_cap() == 10


def test_explicit_cap_argument():
    assert len(list(enumerate_class(PermClass.SYM, 4, cap=4))) == 24
    with pytest.raises(CapExceededError):
        list(enumerate_class(PermClass.SYM, 5, cap=4))


@pytest.mark.parametrize("n", range(1, 8))
def test_profile_invariants_exhaustive(n):
    for p in permutations(range(1, n + 1)):
        s = stats(p)
        assert s.des + s.asc == n - 1
        assert s.peaks + s.double_desc == s.des
        assert s.peaks + s.double_asc == s.asc
        assert s.valleys == s.peaks + 1
        assert s.double_asc + s.double_desc == n - 1 - 2 * s.peaks
        assert s.internal_da + s.rlmin_da == s.double_asc
        assert s.internal_dd + s.lrmin_dd == s.double_desc
        if is_prefix_decreasing(p):
            # every left-to-right minimum above 1 is then a double descent
            assert s.lrmin_dd == s.lrmin - 1
        assert s.weight == s.lrmin + s.rlmin - 2


@settings(max_examples=50, deadline=None)
@given(st.permutations(list(range(1, 9))))
def test_stats_accepts_any_word(p):
    s = stats(tuple(p))
    assert s.n == 8
    assert s.des + s.asc == 7
