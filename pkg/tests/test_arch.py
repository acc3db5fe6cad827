from math import comb

import pytest
from hypothesis import given, strategies as st

from meanderknots.arch import (ArchConfiguration, DecoratedDyckWord, dyck_decode, dyck_encode,
                               dyck_words, enumerate_arch_configurations)
from meanderknots.errors import MalformedInputError


def catalan(k):
    return comb(2 * k, k) // (k + 1)


@pytest.mark.parametrize("k", range(0, 8))
def test_closed_words_are_catalan(k):
    assert sum(1 for _ in dyck_words(k)) == catalan(k)


def _brute_words(k, loose):
    from itertools import product
    for w in product("()1", repeat=2 * k + loose):
        if w.count("1") != loose or w.count("(") != k:
            continue
        try:
            DecoratedDyckWord("".join(w))
        except MalformedInputError:
            continue
        yield "".join(w)


@pytest.mark.parametrize("k,loose,exposed", [(2, 1, False), (3, 1, True), (2, 2, False), (3, 2, True)])
def test_words_match_brute_force(k, loose, exposed):
    got = sorted(dyck_words(k, loose, exposed))
    want = []
    for w in _brute_words(k, loose):
        conf = dyck_decode(w)
        if exposed and any(not conf.exposed(x) for x in conf.loose_ends):
            continue
        want.append(w)
    assert got == sorted(want)


def test_words_in_canonical_order():
    words = list(dyck_words(3, 1))
    assert words == sorted(words, key=lambda w: DecoratedDyckWord(w).sort_key())


@given(st.integers(0, 6), st.integers(0, 2), st.data())
def test_encode_decode_roundtrip(k, loose, data):
    words = list(dyck_words(k, loose))
    w = data.draw(st.sampled_from(words))
    assert dyck_encode(dyck_decode(w)) == w


@pytest.mark.parametrize("bad", ["(()", ")(", "(x)", "111"])
def test_malformed_words_rejected(bad):
    with pytest.raises(MalformedInputError):
        DecoratedDyckWord(bad)


def test_crossing_arcs_rejected():
    with pytest.raises(MalformedInputError):
        ArchConfiguration(4, ((1, 3), (2, 4)))


def test_depth_and_partners():
    a = dyck_decode("(())1")
    assert a.partners() == [3, 2, 1, 0, -1]
    assert a.depth(2) == 1 and a.exposed(5)
    assert a.max_depth() == 2


def test_enumerate_configurations_count():
    assert len(list(enumerate_arch_configurations(3))) == 5
