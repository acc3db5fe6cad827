import random

import pytest
from hypothesis import given, settings

from meanderknots.diagram import (GaussCode, close_open_meander, from_dt_code, mirror,
                                  realize_gauss_code, reverse_components)
from meanderknots.invariants import (alexander_class, alexander_polynomial, determinant,
                                     fingerprint, format_jones, jones_polynomial, kauffman_bracket,
                                     linking_matrix, normalized_bracket, state_sum_bracket,
                                     unknot_fingerprint)
from meanderknots.meander import OpenMeander
from meanderknots.polynomial import LaurentPolynomial

from strategies import closures, moved_diagrams


def state_sum_oracle(d):
    """Bracket from the Gauss code and crossing signs alone.  The
    A-smoothing of a positive crossing follows the orientation; at a
    negative crossing it is the other one.  Arcs between visits are the
    nodes of a union-find; each smoothing glues their ends."""
    comps = d.gauss.components
    start, arcs_in, arcs_out = 0, {}, {}
    for comp in comps:
        L = len(comp)
        for i, x in enumerate(comp):
            out_arc = start + i
            in_arc = start + (i - 1) % L
            arcs_in.setdefault(abs(x), []).append(in_arc)
            arcs_out.setdefault(abs(x), []).append(out_arc)
        start += L
    labels = sorted(arcs_in)
    m = len(labels)
    total = LaurentPolynomial()
    delta = LaurentPolynomial({2: -1, -2: -1})
    for s in range(1 << m):
        parent = list(range(start))

        def find(a):
            while parent[a] != a:
                a = parent[a]
            return a

        def join(a, b):
            parent[find(a)] = find(b)

        n_b = 0
        for k, lab in enumerate(labels):
            b = s >> k & 1
            n_b += b
            (i1, i2), (o1, o2) = arcs_in[lab], arcs_out[lab]
            oriented = (d.crossing_signs[lab] > 0) != bool(b)
            if oriented:
                join(i1, o2)
                join(i2, o1)
            else:
                join(i1, i2)
                join(o1, o2)
        loops = len({find(x) for x in range(start)})
        total = total + LaurentPolynomial.monomial(m - 2 * n_b) * delta ** (loops - 1)
    return total


def test_unknot_bracket():
    assert kauffman_bracket(realize_gauss_code(GaussCode(((),)))) == LaurentPolynomial.constant(1)


def test_trefoil_bracket_shape():
    b = kauffman_bracket(close_open_meander(OpenMeander(3, (1, 2, 3))))
    assert len(b) == 3 and b.span() == 12


def test_known_jones():
    right = close_open_meander(OpenMeander(3, (1, 2, 3)))
    v = jones_polynomial(right)
    assert format_jones(v) in ("-t^4 + t^3 + t", "t^-1 + t^-3 - t^-4")
    fig8 = realize_gauss_code("{1,-2,3,-4,2,-1,4,-3}")
    assert format_jones(jones_polynomial(fig8)) == "t^2 - t + 1 - t^-1 + t^-2"


@settings(max_examples=60, deadline=None)
@given(closures())
def test_sweep_equals_state_sum(d):
    assert kauffman_bracket(d) == state_sum_bracket(d)


@settings(max_examples=40, deadline=None)
@given(moved_diagrams(n_max=6))
def test_sweep_equals_state_sum_on_moved(d):
    assert kauffman_bracket(d) == state_sum_bracket(d)


@settings(max_examples=30, deadline=None)
@given(closures(n_max=7))
def test_state_sum_matches_oracle(d):
    assert state_sum_bracket(d) == state_sum_oracle(d)


@settings(max_examples=40, deadline=None)
@given(closures(n_max=8))
def test_fingerprint_ignores_mirror(d):
    assert fingerprint(mirror(d)) == fingerprint(d)


@settings(max_examples=30, deadline=None)
@given(closures(n_min=2, n_max=8))
def test_fingerprint_ignores_orientation(d):
    if d.n_components == 2:
        assert fingerprint(reverse_components(d, [1])) == fingerprint(d)


@settings(max_examples=40, deadline=None)
@given(closures(knots_only=True))
def test_determinant_is_alexander_at_minus_one(d):
    a = alexander_polynomial(d)
    assert determinant(d) == abs(a.evaluate(-1))


def test_determinants():
    assert determinant(close_open_meander(OpenMeander(3, (1, 2, 3)))) == 3
    assert determinant(realize_gauss_code("{1,-2,3,-4,2,-1,4,-3}")) == 5


def test_alexander_trefoil_and_fig8():
    tre = alexander_polynomial(close_open_meander(OpenMeander(3, (1, 2, 3))))
    assert tre.terms() == ((0, 1), (1, -1), (2, 1))
    fig = alexander_polynomial(realize_gauss_code("{1,-2,3,-4,2,-1,4,-3}"))
    assert fig.terms() == ((0, 1), (1, -3), (2, 1))


def test_fig8_meander_diagram():
    five = realize_gauss_code("{-1,2,-3,-4,5,3,-2,1,4,-5}")
    four = realize_gauss_code("{1,-2,3,-4,2,-1,4,-3}")
    assert fingerprint(five) == fingerprint(four)


def test_unknot_fingerprints():
    kink = close_open_meander(OpenMeander(1, (1,)))
    assert fingerprint(kink) == unknot_fingerprint(1)
    assert unknot_fingerprint(2) != unknot_fingerprint(1)


def test_hopf_linking():
    hopf = close_open_meander(OpenMeander(2, (1, 2)))
    lk = linking_matrix(hopf)
    assert abs(lk[0][1]) == 1


@pytest.mark.parametrize("seed", range(5))
def test_normalized_bracket_invariant_under_moves(seed):
    from meanderknots.moves import random_moves
    rng = random.Random(seed)
    d = close_open_meander(OpenMeander(7, (1, 2, 3, 4, 5, 6, 7)))
    e = random_moves(d, 30, rng)
    assert normalized_bracket(e) == normalized_bracket(d)
    assert alexander_class(e) == alexander_class(d)


def test_alexander_class_ignores_mirror():
    a = from_dt_code("{4,6,2}")
    assert alexander_class(a) == alexander_class(mirror(a))
