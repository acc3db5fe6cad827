from itertools import permutations

import pytest
from hypothesis import given, settings, strategies as st

from meanderknots.errors import MalformedInputError, NotAMeanderError
from meanderknots.meander import (count_open_meanders, enumerate_meandric_systems,
                                  enumerate_open_meanders, meander_from_words, meandric_system,
                                  open_meander, parse_permutation, validate_meander_permutation,
                                  words_from_meander)

COUNTS = {1: 1, 2: 1, 3: 2, 4: 3, 5: 8, 6: 14, 7: 42, 8: 81, 9: 262, 10: 538,
          11: 1828, 12: 3926}


def _interleave(a, b):
    (i, j), (k, l) = sorted(a), sorted(b)
    return i < k < j < l or k < i < l < j


def is_meander_brute(p):
    """Curve p[0] -> p[1] -> ... with arcs alternately above and below the
    axis (the first arc above), rays at both ends leaving to infinity."""
    n = len(p)
    if n % 2 == 0 and p[0] > p[-1]:
        # both ends leave below; the curve is read from the left one
        return False
    arcs = [(p[k], p[k + 1]) for k in range(n - 1)]
    sides = [arcs[0::2], arcs[1::2]]
    for side in sides:
        for x in range(len(side)):
            for y in range(x + 1, len(side)):
                if _interleave(side[x], side[y]):
                    return False
    # the first end leaves below, the last on the side opposite its arc
    rays = [(p[0], 1)]
    rays.append((p[-1], 1 if n % 2 == 0 else 0))
    for foot, s in rays:
        if any(min(a) < foot < max(a) for a in sides[s]):
            return False
    return True


@pytest.mark.parametrize("n", range(1, 8))
def test_enumeration_matches_brute_force(n):
    want = {p for p in permutations(range(1, n + 1)) if is_meander_brute(p)}
    got = {m.permutation for m in enumerate_open_meanders(n)}
    assert got == want


@pytest.mark.parametrize("n,count", sorted(COUNTS.items()))
def test_counts(n, count):
    assert count_open_meanders(n) == count


@pytest.mark.slow
@pytest.mark.parametrize("n,count", [(13, 13820), (14, 30694), (15, 110954), (16, 252939)])
def test_counts_large(n, count):
    assert count_open_meanders(n) == count


def test_counts_backends_agree(backend):
    assert count_open_meanders(9) == 262
    assert count_open_meanders(10) == 538


@given(st.permutations(list(range(1, 8))))
def test_validation_matches_brute_force(p):
    assert validate_meander_permutation(tuple(p)) == is_meander_brute(tuple(p))


@settings(max_examples=50)
@given(st.integers(1, 9), st.data())
def test_words_roundtrip(n, data):
    ms = list(enumerate_open_meanders(n))
    m = data.draw(st.sampled_from(ms))
    up, lo = words_from_meander(m)
    assert meander_from_words(up, lo) == m


def test_paper_example_words():
    m = open_meander((1, 10, 9, 4, 3, 2, 5, 8, 7, 6))
    assert m.order == 10


def test_not_a_meander():
    with pytest.raises(NotAMeanderError):
        open_meander((2, 1, 3, 4))
    assert not validate_meander_permutation((1, 3, 2, 4))


def test_parse_permutation():
    assert parse_permutation("(1, 2,3)") == (1, 2, 3)
    with pytest.raises(MalformedInputError):
        parse_permutation("(a,b)")


@pytest.mark.parametrize("n", [2, 4, 6, 8])
def test_systems_cover_all_pairs(n):
    from math import comb
    k = n // 2
    catalan = comb(2 * k, k) // (k + 1)
    total = sum(sum(1 for _ in enumerate_meandric_systems(n, c)) for c in range(1, k + 1))
    assert total == catalan ** 2


def test_closed_meanders():
    # one loop: closed meanders 1, 2, 8, 42
    assert [sum(1 for _ in enumerate_meandric_systems(2 * k, 1)) for k in range(1, 5)] == [1, 2, 8, 42]


def test_meandric_system_loops():
    s = meandric_system("()()", "(())")
    assert len(s.loops) == 1
    s = meandric_system("()()", "()()")
    assert len(s.loops) == 2
