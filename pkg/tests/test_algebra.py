import itertools

import pytest
from hypothesis import given, settings, strategies as st

from meanderknots import catalog
from meanderknots.algebra import (_ogc_path_list, chord_diagram, chord_product,
                                  has_ordered_minimal_diagram, is_meander_shadow, meander_sum,
                                  minimal_diagrams, mirror_ordered, ogc_product_knots,
                                  ogc_product_links, ogc_shadows, search_many,
                                  search_meander_diagram, search_ogc_diagram)
from meanderknots.classify import census_meanders
from meanderknots.diagram import (GaussCode, analyze, close_open_meander, find_ordered_form,
                                  is_ordered, realize_gauss_code)
from meanderknots.errors import DomainError, ParityError
from meanderknots.invariants import fingerprint
from meanderknots.meander import OpenMeander

EX = {e.name: e.gauss for e in catalog.entries("examples") if e.name and e.gauss is not None}


def closure(p):
    return close_open_meander(OpenMeander(len(p), tuple(p)))


def test_product_9_2_9_4():
    d = ogc_product_knots(EX["9_2"], EX["9_4"])
    assert fingerprint(d) == fingerprint(realize_gauss_code(EX["9_6"]))
    assert find_ordered_form(d.gauss) is not None


def test_link_product_8_1_8_3():
    d = ogc_product_links(EX["8_1"], EX["8_3"])
    assert d.n_components == 2
    assert fingerprint(d) == fingerprint(realize_gauss_code(EX["8_1^2"]))


def test_product_parity_errors():
    with pytest.raises(ParityError):
        ogc_product_knots(EX["8_1"], EX["8_3"])
    with pytest.raises(ParityError):
        ogc_product_links(EX["9_2"], EX["9_4"])
    with pytest.raises(DomainError):
        ogc_product_knots(EX["9_2"], find_ordered_form(closure((1, 2, 3)).gauss))


@pytest.mark.parametrize("n", [3, 5, 7, 9])
def test_torus_square(n):
    t = closure(range(1, n + 1))
    g = find_ordered_form(t.gauss)
    assert fingerprint(ogc_product_knots(g, g)) == fingerprint(t)


def test_chord_product_matches_code_product():
    c = chord_product(chord_diagram(EX["9_2"]), chord_diagram(EX["9_4"]))
    d = ogc_product_knots(EX["9_2"], EX["9_4"])
    assert c.gauss() == d.gauss


def test_mirror_ordered_is_ordered():
    g = mirror_ordered(EX["9_2"])
    assert is_ordered(g)
    assert fingerprint(realize_gauss_code(g)) == fingerprint(realize_gauss_code(EX["9_2"]))


@pytest.mark.parametrize("n", [3, 5, 7])
def test_products_admit_ordered_forms(n):
    gs = [find_ordered_form(closure(p).gauss) for p in census_meanders(n, False)]
    for a, b in itertools.product(gs, gs):
        try:
            d = ogc_product_knots(a, b)
        except Exception:
            continue
        assert find_ordered_form(d.gauss) is not None


_SMALL = [closure(p) for n in range(1, 8) for p in census_meanders(n)]


@settings(max_examples=80, deadline=None)
@given(st.sampled_from(_SMALL), st.sampled_from(_SMALL))
def test_sum_parity(a, b):
    s = meander_sum(a, b)
    assert s.n_components == (2 if a.n_components == b.n_components else 1)
    assert s.n_crossings == a.n_crossings + b.n_crossings
    assert tuple(s.meander) and len(s.meander) == s.n_crossings


def test_sum_needs_meanders():
    with pytest.raises(DomainError):
        meander_sum(realize_gauss_code("{1,-2,3,-4,2,-1,4,-3}"), closure((1, 2, 3)))


def test_trefoil_plus_hopf_is_knot():
    s = meander_sum(closure((1, 2, 3)), closure((1, 2)))
    assert s.is_knot


@pytest.mark.parametrize("m,count", [(1, 1), (2, 2), (3, 4), (4, 9), (5, 22), (6, 58),
                                     (7, 162), (8, 465)])
def test_ogc_shadow_counts(m, count):
    assert len(_ogc_path_list(m)) == count


@pytest.mark.parametrize("m", [3, 5, 7, 9])
def test_positive_ogc_shadows_are_meander_shadows(m):
    for d in ogc_shadows(m):
        flags = analyze(d)
        if flags.positive and flags.reduced:
            assert is_meander_shadow(d)


def test_meander_closures_are_meander_shadows():
    for p in census_meanders(7):
        assert is_meander_shadow(closure(p))


def test_ogc_shadows_are_ordered():
    for d in ogc_shadows(6):
        assert is_ordered(d.gauss)


def test_search_fig8():
    fig8 = realize_gauss_code("{1,-2,3,-4,2,-1,4,-3}")
    d, n = search_meander_diagram(fig8, 7)
    assert n == 5 and d.meander is not None
    assert fingerprint(d) == fingerprint(fig8)


def test_search_not_found_below_bound():
    fig8 = realize_gauss_code("{1,-2,3,-4,2,-1,4,-3}")
    assert search_meander_diagram(fig8, 3) is None


def test_search_bounds():
    with pytest.raises(DomainError):
        search_meander_diagram(fingerprint(closure((1, 2, 3))), 17)
    with pytest.raises(DomainError):
        search_ogc_diagram(fingerprint(closure((1, 2, 3))), 15)


def test_search_backends_agree(backend):
    targets = {"4_1": realize_gauss_code("{1,-2,3,-4,2,-1,4,-3}"),
               "6_1": catalog.lookup("6_1")[0].diagram()}
    found = search_many(targets, 7)
    assert {k: n for k, (_, n) in found.items()} == {"4_1": 5, "6_1": 7}


def test_ogc_search_fig8():
    fig8 = realize_gauss_code("{1,-2,3,-4,2,-1,4,-3}")
    d, n = search_ogc_diagram(fig8, 6)
    assert n == 4 and is_ordered(d.gauss)


def test_minimal_diagrams_7_6():
    target = fingerprint(catalog.lookup("7_6")[0].diagram())
    ds = minimal_diagrams(target, 7)
    assert len(ds) >= 2
    assert has_ordered_minimal_diagram(target, 7)


def test_8_16_has_no_ordered_minimal_diagram():
    target = fingerprint(catalog.lookup("8_16")[0].diagram())
    assert has_ordered_minimal_diagram(target, 8) is False


def test_product_link_code_shape():
    d = ogc_product_links(EX["8_1"], EX["8_3"])
    assert [len(c) for c in d.gauss.components] == [8, 8]
    assert isinstance(d.gauss, GaussCode)
