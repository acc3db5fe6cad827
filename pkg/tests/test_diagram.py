import pytest
from hypothesis import given, settings

from meanderknots.diagram import (Diagram, DTCode, GaussCode, analyze, checkerboard_faces,
                                  close_open_meander, find_ordered_form, from_dt_code,
                                  gauss_from_dt, is_ordered, mirror, nugatory_crossings,
                                  realize_gauss_code, remove_nugatory, to_dt_code)
from meanderknots.errors import DomainError, MalformedInputError, RealizabilityError
from meanderknots.meander import OpenMeander

from strategies import closures, moved_diagrams


def dt_oracle(code):
    """DT code of a one-component Gauss code read from position 1."""
    pos = {}
    for k, x in enumerate(code, 1):
        pos.setdefault(abs(x), []).append(k)
    out = []
    for k in range(1, len(code) + 1, 2):
        i, j = pos[abs(code[k - 1])]
        even = j if i == k else i
        if even % 2:
            return None
        # positive entry: the odd visit passes under
        out.append(even if code[k - 1] < 0 else -even)
    return tuple(out)


def relabel(code):
    new = {}
    return tuple(new.setdefault(abs(x), len(new) + 1) * (1 if x > 0 else -1) for x in code)


def nugatory_oracle(code):
    """Labels whose two occurrences cut the cyclic word into two parts that
    share no label."""
    out = []
    L = len(code)
    for lab in {abs(x) for x in code}:
        i, j = [k for k in range(L) if abs(code[k]) == lab]
        inside = {abs(x) for x in code[i + 1:j]}
        outside = {abs(x) for x in code[j + 1:] + code[:i]}
        if not inside & outside:
            out.append(lab)
    return sorted(out)


def test_parse_gauss_and_str():
    g = GaussCode.parse("{1, -2, 3, -1, 2, -3}")
    assert g.n_crossings == 3 and g.is_knot
    assert str(g) == "{1,-2,3,-1,2,-3}"
    link = GaussCode.parse("{{1,-2},{-1,2}}")
    assert link.n_components == 2


@pytest.mark.parametrize("bad", ["{1,1,-2,2}", "{1,-2,3}", "{0,0}"])
def test_malformed_gauss(bad):
    with pytest.raises(MalformedInputError):
        GaussCode.parse(bad)


def test_dt_parse():
    c = DTCode.parse("{{3},{4,6,2}}")
    assert c.pairing == (4, 6, 2)
    with pytest.raises(MalformedInputError):
        DTCode.parse("{4,6,3}")


def test_trefoil_from_dt():
    d = from_dt_code("{4,6,2}")
    assert d.n_crossings == 3
    assert str(to_dt_code(d)) == "{{3},{4,6,2}}"


def test_virtual_code_not_realizable():
    with pytest.raises(RealizabilityError):
        realize_gauss_code(GaussCode.parse("{1,-2,-1,2}"))


def test_non_planar_code_not_realizable():
    # passes the parity filter; every choice of turns fails Euler's count
    code = GaussCode.parse("{1,2,3,-1,-2,4,5,-3,-4,-5}")
    with pytest.raises(RealizabilityError):
        realize_gauss_code(code)
    for mask in range(1 << 5):
        turns = tuple((k, 1 if mask >> (k - 1) & 1 else -1) for k in range(1, 6))
        with pytest.raises(RealizabilityError):
            Diagram(code, turns)


@settings(max_examples=60, deadline=None)
@given(closures(knots_only=True))
def test_dt_matches_oracle(d):
    code = d.gauss.components[0]
    want = dt_oracle(code)
    assert want is not None
    back = gauss_from_dt(DTCode((len(want),), want))
    assert relabel(back.components[0]) == relabel(code)


@settings(max_examples=40, deadline=None)
@given(closures(n_min=2))
def test_dt_code_is_canonical(d):
    key = str(to_dt_code(d))
    comps = d.gauss.components
    rotated = GaussCode(tuple(c[1:] + c[:1] for c in comps))
    assert str(to_dt_code(realize_gauss_code(rotated))) == key
    reversed_ = GaussCode(tuple(c[::-1] for c in reversed(comps)))
    assert str(to_dt_code(realize_gauss_code(reversed_))) == key
    assert str(to_dt_code(mirror(d))) == key


@settings(max_examples=40, deadline=None)
@given(closures())
def test_realized_closure_is_planar(d):
    r = realize_gauss_code(d.gauss)
    assert len(r.embedding.face_cycles()) == r.n_crossings + 2 * len(r.embedding.pieces())


@settings(max_examples=40, deadline=None)
@given(moved_diagrams())
def test_checkerboard_is_proper(d):
    faces = checkerboard_faces(d)
    assert len(faces) == d.n_crossings + 2 * len(d.embedding.pieces())
    color = {}
    for f in faces:
        for e, forward in f.darts:
            color[(e, forward)] = f.color
    for e in range(d.embedding.n_edges):
        assert color[(e, True)] != color[(e, False)]


def test_trefoil_faces():
    d = close_open_meander(OpenMeander(3, (1, 2, 3)))
    faces = checkerboard_faces(d)
    assert len(faces) == 5
    assert sorted(f.color for f in faces).count(0) in (2, 3)


@settings(max_examples=60, deadline=None)
@given(moved_diagrams())
def test_nugatory_matches_word_criterion(d):
    if d.is_knot:
        assert sorted(nugatory_crossings(d)) == nugatory_oracle(d.gauss.components[0])


@settings(max_examples=30, deadline=None)
@given(moved_diagrams())
def test_remove_nugatory_leaves_reduced(d):
    from meanderknots.invariants import normalized_bracket
    r = remove_nugatory(d)
    assert analyze(r).reduced
    assert r.n_crossings <= d.n_crossings
    assert normalized_bracket(r) == normalized_bracket(d)


def test_flags():
    trefoil = close_open_meander(OpenMeander(3, (1, 2, 3)))
    f = analyze(trefoil)
    assert f.reduced and f.prime and not f.split and f.alternating and f.positive
    kinky = close_open_meander(OpenMeander(1, (1,)))
    assert not analyze(kinky).reduced
    hopf = close_open_meander(OpenMeander(2, (1, 2)))
    assert hopf.n_components == 2 and not analyze(hopf).split


def test_split_link():
    d = realize_gauss_code("{{1,-1},{2,-2}}")
    assert analyze(d).split


@settings(max_examples=40, deadline=None)
@given(closures(knots_only=True))
def test_ordered_form(d):
    g = find_ordered_form(d.gauss)
    assert g is not None and is_ordered(g)
    code = d.gauss.components[0]
    L = len(code)
    words = {relabel(s[k:] + s[:k]) for s in (code, code[::-1]) for k in range(L)}
    assert g.components[0] in words


def test_ordered_form_needs_a_knot():
    with pytest.raises(DomainError):
        find_ordered_form(GaussCode.parse("{{1,-2},{-1,2}}"))


def test_crossing_signs_flip_with_mirror():
    d = close_open_meander(OpenMeander(5, (1, 2, 3, 4, 5)))
    m = mirror(d)
    assert all(m.crossing_signs[k] == -v for k, v in d.crossing_signs.items())


def test_turns_required():
    with pytest.raises(MalformedInputError):
        Diagram(GaussCode.parse("{1,-2,3,-1,2,-3}"), ((1, 1),))
