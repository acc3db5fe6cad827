"""SVG drawings of meander diagrams.

Feet sit at x = 2i on a horizontal axis, the axis ends at x = 0 and
x = 2n + 2, so every arc between feet (or between a foot and an axis end)
is a semicircle of integer radius.  Numbers are written with three
decimals so identical inputs give identical bytes.
"""
import math
from dataclasses import dataclass

from .diagram import Diagram, checkerboard_faces, close_open_meander
from .errors import DomainError
from .meander import OpenMeander

STYLES = ("shadow", "alternating", "checkerboard")
SCALE = 20
FILLS = ("#c8c8c8", "#ffffff")


@dataclass(frozen=True)
class RenderSpec:
    style: str = "shadow"
    scale: int = SCALE

    def __post_init__(self):
        if self.style not in STYLES:
            raise ValueError(f"unknown style {self.style!r}")


def _f(v):
    return f"{v:.3f}"


class _Geometry:
    """Paths of every edge of a meander closure, in axis units (y up)."""

    def __init__(self, d):
        p = tuple(d.meander)
        n = len(p)
        self.n = n
        comps = d.gauss.components
        self.knot = len(comps) == 1
        seq = [abs(x) for x in comps[0][n:]] if self.knot else [abs(x) for x in comps[1]]
        upper = set()
        for k in range(0, n - 1, 2):
            upper.add(frozenset(p[k:k + 2]))
        self.seq = seq
        self.upper = upper
        self.right = 2 * n + 2
        # edges in the order of the flattened code
        self.edges = []
        emb = d.embedding
        labels = emb.labels
        for e in range(emb.n_edges):
            a, b = labels[emb.vis_label[e]], labels[emb.vis_label[emb.next[e]]]
            self.edges.append(self._edge(e, a, b, emb))
        self.radii = [abs(seg[2]) for segs in self.edges for seg in segs if seg[0] == "arc"]

    def _above(self, a, b):
        return frozenset((a, b)) in self.upper

    def _edge(self, e, a, b, emb):
        """Segments ('line', x0, x1) or ('arc', x0, x1, above) from foot a to foot b."""
        n = self.n
        comp = emb.vis_comp[e]
        local = e - (0 if comp == 0 else sum(1 for v in range(emb.n_edges) if emb.vis_comp[v] < comp))
        xa, xb = 2 * a, 2 * b
        seq = self.seq
        if comp == 0 and local < n - 1:
            return [("line", xa, xb)]
        first_side = self._above(seq[0], seq[1]) if len(seq) > 1 else True
        last_side = self._above(seq[-2], seq[-1]) if len(seq) > 1 else False
        if self.knot:
            if local == n - 1:
                return [("line", xa, self.right), ("arc", self.right, xb, not first_side)]
            if local == 2 * n - 1:
                return [("arc", xa, 0, not last_side), ("line", 0, xb)]
            return [("arc", xa, xb, self._above(a, b))]
        if comp == 0:
            return [("line", xa, self.right), ("arc", self.right, 0, True), ("line", 0, xb)]
        if local == n - 1:
            return [("arc", xa, xb, False)]
        return [("arc", xa, xb, self._above(a, b))]


def _path(segs, reverse=False, start=True):
    if reverse:
        segs = [(s[0], s[2], s[1]) + s[3:] for s in reversed(segs)]
    out = []
    for k, s in enumerate(segs):
        if start and k == 0:
            out.append(("M", s[1]))
        if s[0] == "line":
            out.append(("L", s[2]))
        else:
            out.append(("A", s[1], s[2], s[3]))
    return out


def _points(segs, reverse=False):
    """Flattened outline, used only to find the outer face."""
    if reverse:
        segs = [(s[0], s[2], s[1]) + s[3:] for s in reversed(segs)]
    pts = []
    for s in segs:
        if s[0] == "line":
            pts.append((s[1], 0.0))
            continue
        x0, x1, above = s[1], s[2], s[3]
        c, r = (x0 + x1) / 2, abs(x1 - x0) / 2
        a0 = 0.0 if x0 > x1 else math.pi
        a1 = math.pi - a0
        for k in range(16):
            t = a0 + (a1 - a0) * k / 16
            y = r * math.sin(t)
            pts.append((c + r * math.cos(t), y if above else -y))
    return pts


class _Svg:
    def __init__(self, geo, scale):
        self.geo, self.s = geo, scale
        r = max(geo.radii + [geo.n + 1])
        self.top = r + 1

    def xy(self, x, y=0.0):
        return _f(x * self.s + self.s), _f((self.top - y) * self.s)

    def d_attr(self, cmds):
        out = []
        for c in cmds:
            if c[0] == "M":
                out.append("M " + " ".join(self.xy(c[1])))
            elif c[0] == "L":
                out.append("L " + " ".join(self.xy(c[1])))
            else:
                x0, x1, above = c[1], c[2], c[3]
                r = _f(abs(x1 - x0) / 2 * self.s)
                sweep = 1 if (x1 > x0) == above else 0
                out.append(f"A {r} {r} 0 0 {sweep} " + " ".join(self.xy(x1)))
        return " ".join(out)

    def size(self):
        w = (self.geo.right + 2) * self.s
        h = 2 * self.top * self.s
        return _f(w), _f(h)


def render(x, spec=None):
    """SVG text for an open meander (drawn as its closure) or a diagram
    built from a meander."""
    spec = spec or RenderSpec()
    d = close_open_meander(x) if isinstance(x, OpenMeander) else x
    if not isinstance(d, Diagram) or d.meander is None:
        raise DomainError("only meander diagrams can be drawn")
    geo = _Geometry(d)
    svg = _Svg(geo, spec.scale)
    w, h = svg.size()
    lines = ['<?xml version="1.0" encoding="UTF-8"?>',
             f'<svg xmlns="http://www.w3.org/2000/svg" width="{w}" height="{h}" '
             f'viewBox="0.000 0.000 {w} {h}">']
    if spec.style == "checkerboard":
        lines.extend(_faces(d, geo, svg, w, h))
    strand = 'fill="none" stroke="#000000" stroke-width="2.000"'
    for e, segs in enumerate(geo.edges):
        lines.append(f'<path class="edge" d="{svg.d_attr(_path(segs))}" {strand}/>')
    if spec.style == "alternating":
        lines.extend(_crossings(d, geo, svg))
    for i in range(1, geo.n + 1):
        cx, cy = svg.xy(2 * i)
        lines.append(f'<circle class="foot" cx="{cx}" cy="{cy}" r="1.500" fill="#000000"/>')
    lines.append("</svg>")
    return "\n".join(lines) + "\n"


def _crossings(d, geo, svg):
    """Break the under-strand at every foot."""
    out = []
    n = geo.n
    axis = d.gauss.components[0][:n]
    gap = 0.45
    for x in axis:
        i = abs(x)
        cx = 2 * i
        if x > 0:
            a, b = svg.xy(cx, -gap), svg.xy(cx, gap)
            over = (svg.xy(cx - gap), svg.xy(cx + gap))
        else:
            a, b = svg.xy(cx - gap), svg.xy(cx + gap)
            over = (svg.xy(cx, -gap), svg.xy(cx, gap))
        out.append(f'<line class="gap" x1="{a[0]}" y1="{a[1]}" x2="{b[0]}" y2="{b[1]}" '
                   f'stroke="#ffffff" stroke-width="6.000"/>')
        out.append(f'<line class="over" x1="{over[0][0]}" y1="{over[0][1]}" x2="{over[1][0]}" '
                   f'y2="{over[1][1]}" stroke="#000000" stroke-width="2.000"/>')
    return out


def _area(pts):
    return 0.5 * sum(x0 * y1 - x1 * y0 for (x0, y0), (x1, y1) in zip(pts, pts[1:] + pts[:1]))


def _faces(d, geo, svg, w, h):
    faces = checkerboard_faces(d)
    outlines = []
    for f in faces:
        pts, cmds = [], []
        for k, (e, forward) in enumerate(f.darts):
            segs = geo.edges[e]
            cmds.extend(_path(segs, reverse=not forward, start=(k == 0)))
            pts.extend(_points(segs, reverse=not forward))
        outlines.append((cmds, abs(_area(pts))))
    outer = max(range(len(faces)), key=lambda i: outlines[i][1])
    out = []
    for i, f in enumerate(faces):
        body = svg.d_attr(outlines[i][0]) + " Z"
        if i == outer:
            body = f"M 0.000 0.000 L {w} 0.000 L {w} {h} L 0.000 {h} Z " + body
        out.append(f'<path class="face c{f.color}" d="{body}" fill="{FILLS[f.color]}" '
                   f'fill-rule="evenodd" stroke="none"/>')
    return out
