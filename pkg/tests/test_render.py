import re
import xml.etree.ElementTree as ET

import pytest

from meanderknots.diagram import close_open_meander, realize_gauss_code
from meanderknots.errors import DomainError
from meanderknots.meander import open_meander
from meanderknots.render import STYLES, RenderSpec, render

NS = "{http://www.w3.org/2000/svg}"


def arcs(svg):
    return re.findall(r"A (\d+\.\d+) \1 0 0 [01] ", svg)


@pytest.mark.parametrize("style", STYLES)
def test_well_formed(style):
    svg = render(open_meander((1, 10, 9, 4, 3, 2, 5, 8, 7, 6)), RenderSpec(style))
    root = ET.fromstring(svg.split("\n", 1)[1])
    assert root.tag == NS + "svg"


def test_integer_radii():
    svg = render(open_meander((1, 10, 9, 4, 3, 2, 5, 8, 7, 6)))
    radii = [float(r) / 20 for r in arcs(svg)]
    assert radii and all(r == int(r) for r in radii)


def test_arc_nesting_follows_words():
    from meanderknots.render import _Geometry
    d = close_open_meander(open_meander((1, 10, 9, 4, 3, 2, 5, 8, 7, 6)))
    geo = _Geometry(d)
    spans = {}
    for segs in geo.edges:
        for s in segs:
            if s[0] == "arc":
                lo, hi = sorted((s[1], s[2]))
                spans.setdefault(s[3], []).append((lo, hi))
    for side in spans.values():
        for (a, b) in side:
            for (c, e) in side:
                assert not (a < c < b < e)


def test_deterministic():
    m = open_meander((1, 2, 3))
    assert render(m, RenderSpec("alternating")) == render(m, RenderSpec("alternating"))


def test_trefoil_checkerboard_has_five_faces():
    svg = render(open_meander((1, 2, 3)), RenderSpec("checkerboard"))
    root = ET.fromstring(svg.split("\n", 1)[1])
    faces = [p for p in root.iter(NS + "path") if "face" in p.get("class", "")]
    assert len(faces) == 5
    assert {p.get("class") for p in faces} == {"face c0", "face c1"}


def test_single_crossing_loop():
    svg = render(open_meander((1,)))
    root = ET.fromstring(svg.split("\n", 1)[1])
    assert len([p for p in root.iter(NS + "circle")]) == 1


def test_link_closure_renders():
    svg = render(open_meander((1, 2)), RenderSpec("alternating"))
    assert svg.count('class="over"') == 2


def test_non_meander_rejected():
    with pytest.raises(DomainError):
        render(realize_gauss_code("{1,-2,3,-4,2,-1,4,-3}"))


def test_unknown_style():
    with pytest.raises(ValueError):
        RenderSpec("sketch")
