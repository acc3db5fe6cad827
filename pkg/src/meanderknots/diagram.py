"""Knot and link diagrams as signed Gauss codes plus a planar rotation system.

Embedding model.  Visits are numbered through the flattened code; edge e
runs from visit e to the next visit of the same component.  Edge-end 2e
is the tail of edge e (at visit e) and 2e+1 its head (at the next visit).
Each crossing stores a turn t = +1 when its second visit crosses the first
from right to left; its four ends in counter-clockwise order are then

    [out1, out2, in1, in2]   (t = +1)
    [out1, in2, in1, out2]   (t = -1)

A crossing's writhe sign is t when its first visit is the over-pass and -t
otherwise.  Faces are traced by always turning to the clockwise neighbour.
"""
import re
from dataclasses import dataclass, field
from functools import cached_property
from itertools import permutations

import networkx as nx

from .errors import MalformedInputError, RealizabilityError, DomainError

_MINUS = str.maketrans({"−": "-", "–": "-", "—": "-"})


def _int_groups(text):
    """Brace groups of integers, innermost only: '{{1,2},{3}}' -> [[1,2],[3]]."""
    text = text.translate(_MINUS)
    groups = re.findall(r"\{([^{}]*)\}", text)
    out = []
    for g in groups:
        body = g.replace(" ", "")
        try:
            out.append([int(x) for x in body.split(",") if x])
        except ValueError:
            raise MalformedInputError(f"non-integer entry in {g!r}") from None
    if not out and text.strip():
        raise MalformedInputError(f"no brace-enclosed list in {text!r}")
    return out


def _format_list(xs):
    return "{" + ",".join(str(x) for x in xs) + "}"


# ------------------------------------------------------------------ codes


@dataclass(frozen=True)
class GaussCode:
    components: tuple

    def __post_init__(self):
        comps = tuple(tuple(int(x) for x in c) for c in self.components)
        object.__setattr__(self, "components", comps)
        seen = {}
        for comp in comps:
            for x in comp:
                if x == 0:
                    raise MalformedInputError("crossing label 0 is not allowed")
                seen.setdefault(abs(x), []).append(x > 0)
        for label, signs in seen.items():
            if len(signs) != 2:
                raise MalformedInputError(f"label {label} occurs {len(signs)} times")
            if signs[0] == signs[1]:
                raise MalformedInputError(f"label {label} needs one over and one under visit")

    @classmethod
    def parse(cls, text):
        return cls(tuple(tuple(g) for g in _int_groups(text)))

    @classmethod
    def from_short(cls, short, link=False):
        """Rebuild a full code from the second half printed in the tables:
        the first half (or first component) visits 1..n with each label
        carrying the opposite sign."""
        short = tuple(short)
        if sorted(abs(x) for x in short) != list(range(1, len(short) + 1)):
            raise MalformedInputError(f"short code {short} does not visit 1..{len(short)} once each")
        sign = {abs(x): (1 if x > 0 else -1) for x in short}
        axis = tuple(-sign[i] * i for i in range(1, len(short) + 1))
        if link:
            return cls((axis, short))
        return cls((axis + short,))

    @property
    def n_crossings(self):
        return sum(len(c) for c in self.components) // 2

    @property
    def n_components(self):
        return len(self.components)

    @property
    def is_knot(self):
        return len(self.components) == 1

    def labels(self):
        return sorted({abs(x) for c in self.components for x in c})

    def mirror(self):
        return GaussCode(tuple(tuple(-x for x in c) for c in self.components))

    def relabeled(self):
        """Labels renumbered 1..n in order of first appearance."""
        new = {}
        for comp in self.components:
            for x in comp:
                new.setdefault(abs(x), len(new) + 1)
        return GaussCode(tuple(tuple(new[abs(x)] * (1 if x > 0 else -1) for x in c)
                               for c in self.components))

    def __str__(self):
        if len(self.components) == 1:
            return _format_list(self.components[0])
        return "{" + ",".join(_format_list(c) for c in self.components) + "}"


@dataclass(frozen=True)
class DTCode:
    component_sizes: tuple
    pairing: tuple

    def __post_init__(self):
        sizes = tuple(int(s) for s in self.component_sizes)
        pairing = tuple(int(x) for x in self.pairing)
        object.__setattr__(self, "component_sizes", sizes)
        object.__setattr__(self, "pairing", pairing)
        n = len(pairing)
        if sum(sizes) != n or any(s < 0 for s in sizes):
            raise MalformedInputError(f"component sizes {sizes} do not add up to {n}")
        if sorted(abs(x) for x in pairing) != list(range(2, 2 * n + 1, 2)):
            raise MalformedInputError(f"DT entries {pairing} are not a signed arrangement of 2..{2 * n}")

    @classmethod
    def parse(cls, text):
        groups = _int_groups(text)
        if len(groups) == 1:
            return cls((len(groups[0]),), tuple(groups[0]))
        if len(groups) != 2:
            raise MalformedInputError(f"cannot read DT code {text!r}")
        return cls(tuple(groups[0]), tuple(groups[1]))

    @property
    def n_crossings(self):
        return len(self.pairing)

    def __str__(self):
        return "{" + _format_list(self.component_sizes) + "," + _format_list(self.pairing) + "}"


# ---------------------------------------------------------------- diagram


class _Embedding:
    """Index structures derived from a code and its turns."""

    def __init__(self, gauss, turns):
        comps = gauss.components
        self.labels = gauss.labels()
        index = {lab: i for i, lab in enumerate(self.labels)}
        self.index = index
        m = len(self.labels)
        self.m = m
        vis_label, vis_over, vis_comp = [], [], []
        nxt, prv = [], []
        for k, comp in enumerate(comps):
            base = len(vis_label)
            L = len(comp)
            for i, x in enumerate(comp):
                vis_label.append(index[abs(x)])
                vis_over.append(x > 0)
                vis_comp.append(k)
                nxt.append(base + (i + 1) % L)
                prv.append(base + (i - 1) % L)
        self.vis_label, self.vis_over, self.vis_comp = vis_label, vis_over, vis_comp
        self.next, self.prev = nxt, prv
        self.n_edges = len(vis_label)
        visits = [[] for _ in range(m)]
        for v, c in enumerate(vis_label):
            visits[c].append(v)
        self.visits = visits
        self.turn = [turns[lab] for lab in self.labels]
        slots, over_out = [], []
        end_slot = [None] * (2 * self.n_edges)
        for c in range(m):
            v1, v2 = visits[c]
            out1, in1 = 2 * v1, 2 * prv[v1] + 1
            out2, in2 = 2 * v2, 2 * prv[v2] + 1
            if self.turn[c] > 0:
                s = [out1, out2, in1, in2]
            else:
                s = [out1, in2, in1, out2]
            slots.append(s)
            for k, x in enumerate(s):
                end_slot[x] = (c, k)
            over_out.append(0 if vis_over[v1] else s.index(out2))
        self.slots, self.end_slot, self.over_out = slots, end_slot, over_out

    def face_cycles(self):
        """Faces as cycles of arrival edge-ends."""
        n_ends = 2 * self.n_edges
        seen = [False] * n_ends
        faces = []
        for x0 in range(n_ends):
            if seen[x0]:
                continue
            cyc, x = [], x0
            while not seen[x]:
                seen[x] = True
                cyc.append(x)
                c, k = self.end_slot[x]
                x = self.slots[c][(k - 1) % 4] ^ 1
            faces.append(cyc)
        return faces

    def pieces(self):
        """Connected groups of crossings (as crossing indices)."""
        parent = list(range(self.m))

        def find(a):
            while parent[a] != a:
                parent[a] = parent[parent[a]]
                a = parent[a]
            return a

        for e in range(self.n_edges):
            a, b = find(self.vis_label[e]), find(self.vis_label[self.next[e]])
            if a != b:
                parent[a] = b
        groups = {}
        for c in range(self.m):
            groups.setdefault(find(c), []).append(c)
        return list(groups.values())

    def smoothing_joins(self):
        """joins[c][s] = two edge pairs glued by smoothing s (0=A, 1=B)."""
        out = []
        for c in range(self.m):
            s, i = self.slots[c], self.over_out[c]
            e = [x >> 1 for x in s]
            a = ((e[i], e[(i - 1) % 4]), (e[(i + 1) % 4], e[(i + 2) % 4]))
            b = ((e[i], e[(i + 1) % 4]), (e[(i + 2) % 4], e[(i + 3) % 4]))
            out.append((a, b))
        return out


@dataclass(frozen=True, eq=False)
class Diagram:
    gauss: GaussCode
    turns: tuple = ()
    meander: tuple = None
    check: bool = field(default=True, repr=False)

    def __post_init__(self):
        t = dict(self.turns)
        labels = self.gauss.labels()
        if sorted(t) != labels or any(v not in (1, -1) for v in t.values()):
            raise MalformedInputError("turns must give +1/-1 for every crossing")
        object.__setattr__(self, "turns", tuple(sorted(t.items())))
        if self.check:
            faces = len(self.embedding.face_cycles())
            pieces = len(self.embedding.pieces())
            if faces != self.n_crossings + 2 * pieces:
                raise RealizabilityError(
                    f"rotation system is not planar ({faces} faces for {self.n_crossings} crossings)")

    @cached_property
    def embedding(self):
        return _Embedding(self.gauss, dict(self.turns))

    @property
    def n_crossings(self):
        return self.gauss.n_crossings

    @property
    def n_components(self):
        return self.gauss.n_components

    @property
    def is_knot(self):
        return self.gauss.is_knot

    def turn(self, label):
        return dict(self.turns)[label]

    @cached_property
    def crossing_signs(self):
        emb = self.embedding
        out = {}
        for c, lab in enumerate(emb.labels):
            v1 = emb.visits[c][0]
            t = emb.turn[c]
            out[lab] = t if emb.vis_over[v1] else -t
        return out

    def writhe(self):
        return sum(self.crossing_signs.values())

    def crossing_components(self, label):
        emb = self.embedding
        v1, v2 = emb.visits[emb.index[label]]
        return emb.vis_comp[v1], emb.vis_comp[v2]

    def __str__(self):
        return str(self.gauss)

    def __repr__(self):
        return f"Diagram({self.gauss})"


# ----------------------------------------------------------------- flags


@dataclass(frozen=True)
class DiagramFlags:
    reduced: bool
    prime: bool
    split: bool
    alternating: bool
    positive: bool
    components_simple: bool


def _wedge_faces(emb):
    faces = emb.face_cycles()
    face_of = {}
    for f, cyc in enumerate(faces):
        for x in cyc:
            face_of[x] = f
    wedges = [[face_of[emb.slots[c][(j + 1) % 4]] for j in range(4)] for c in range(emb.m)]
    return faces, face_of, wedges


def nugatory_crossings(d):
    emb = d.embedding
    _, _, wedges = _wedge_faces(emb)
    return [emb.labels[c] for c in range(emb.m)
            if wedges[c][0] == wedges[c][2] or wedges[c][1] == wedges[c][3]]


def is_alternating(g):
    for comp in g.components:
        L = len(comp)
        if L and any((comp[i] > 0) == (comp[(i + 1) % L] > 0) for i in range(L)):
            return False
    return True


def is_split(g):
    k = len(g.components)
    if k < 2:
        return False
    where = {}
    parent = list(range(k))

    def find(a):
        while parent[a] != a:
            a = parent[a]
        return a

    for i, comp in enumerate(g.components):
        for x in comp:
            j = where.setdefault(abs(x), i)
            a, b = find(i), find(j)
            if a != b:
                parent[a] = b
    return len({find(i) for i in range(k)}) > 1


def analyze(d):
    emb = d.embedding
    faces, face_of, wedges = _wedge_faces(emb)
    nug = any(w[0] == w[2] or w[1] == w[3] for w in wedges)
    split = is_split(d.gauss) or len(emb.pieces()) > 1
    prime = not nug and not split
    if prime:
        seen = set()
        for e in range(emb.n_edges):
            pair = tuple(sorted((face_of[2 * e + 1], face_of[2 * e])))
            if pair in seen:
                prime = False
                break
            seen.add(pair)
    signs = set(d.crossing_signs.values())
    simple = all(len({abs(x) for x in comp}) == len(comp) for comp in d.gauss.components)
    return DiagramFlags(
        reduced=not nug,
        prime=prime,
        split=split,
        alternating=is_alternating(d.gauss),
        positive=len(signs) <= 1,
        components_simple=simple,
    )


def remove_nugatory(d):
    """Untwist nugatory crossings one at a time until none are left."""
    while True:
        emb = d.embedding
        _, _, wedges = _wedge_faces(emb)
        hit = next((c for c in range(emb.m)
                    if wedges[c][0] == wedges[c][2] or wedges[c][1] == wedges[c][3]), None)
        if hit is None:
            return d
        d = _untwist(d, hit)


def _untwist(d, c):
    emb = d.embedding
    v1, v2 = emb.visits[c]
    # crossings reachable from the arc leaving v2 without passing c get
    # rotated half a turn: over/under and turn both flip
    side, stack, seen_e = set(), [v2], set()
    while stack:
        e = stack.pop()
        if e in seen_e:
            continue
        seen_e.add(e)
        x = emb.vis_label[emb.next[e]]
        if x == c:
            continue
        if x not in side:
            side.add(x)
            for v in emb.visits[x]:
                stack.append(v)
                stack.append(emb.prev[v])
    lab_c = emb.labels[c]
    flip = {emb.labels[x] for x in side}
    comps = []
    for comp in d.gauss.components:
        comps.append(tuple(-x if abs(x) in flip else x for x in comp if abs(x) != lab_c))
    turns = {lab: (-t if lab in flip else t) for lab, t in d.turns if lab != lab_c}
    return Diagram(GaussCode(tuple(comps)), tuple(turns.items()))


def mirror(d):
    return Diagram(d.gauss.mirror(), d.turns, d.meander, check=False)


def reverse_components(d, which):
    """Reverse the orientation of the components whose indices are in
    ``which``.  A turn flips when one strand is reversed, and again when
    the two visits of a crossing trade places."""
    which = set(which)
    comps = d.gauss.components
    new = tuple(tuple(reversed(c)) if i in which else c for i, c in enumerate(comps))
    first = {}
    for g in (comps, new):
        order = {}
        for i, c in enumerate(g):
            for x in c:
                order.setdefault(abs(x), (i, x > 0))
        first[g] = order
    turns = {}
    for lab, t in d.turns:
        a, b = d.crossing_components(lab)
        flips = (a in which) + (b in which)
        if first[comps][lab] != first[new][lab]:
            flips += 1
        turns[lab] = -t if flips % 2 else t
    return Diagram(GaussCode(new), tuple(turns.items()), check=False)


# ------------------------------------------------------------------ faces


@dataclass(frozen=True)
class Face:
    darts: tuple      # (edge, forward) pairs, face on the left
    color: int


def checkerboard_faces(d):
    emb = d.embedding
    faces = emb.face_cycles()
    face_of = {}
    for f, cyc in enumerate(faces):
        for x in cyc:
            face_of[x] = f
    adj = [[] for _ in faces]
    for e in range(emb.n_edges):
        a, b = face_of[2 * e + 1], face_of[2 * e]
        adj[a].append(b)
        adj[b].append(a)
    color = [None] * len(faces)
    for root in range(len(faces)):
        if color[root] is not None:
            continue
        color[root] = 0
        stack = [root]
        while stack:
            f = stack.pop()
            for g in adj[f]:
                if color[g] is None:
                    color[g] = 1 - color[f]
                    stack.append(g)
                elif color[g] == color[f]:
                    raise RealizabilityError("faces do not admit a checkerboard colouring")
    out = []
    for f, cyc in enumerate(faces):
        out.append(Face(tuple((x >> 1, bool(x & 1)) for x in cyc), color[f]))
    return out


# -------------------------------------------------------------- closures


def _signed(label):
    """Axis visit sign at position i is (-1)^i."""
    return label if label % 2 == 0 else -label


def close_open_meander(m):
    p = tuple(m.permutation)
    n = len(p)
    axis = tuple(_signed(i) for i in range(1, n + 1))
    turns = {}
    if n % 2:
        forward = not (p[0] == n or p[-1] == 1) or n == 1
        seq = p if forward else p[::-1]
        curve = tuple(-_signed(x) for x in seq)
        for k, x in enumerate(seq):
            north = (k % 2 == 0) == forward
            turns[x] = 1 if north else -1
        comps = (axis + curve,)
    else:
        curve = tuple(-_signed(x) for x in p)
        for k, x in enumerate(p):
            turns[x] = 1 if k % 2 == 0 else -1
        comps = (axis, curve)
    return Diagram(GaussCode(comps), tuple(turns.items()), meander=p, check=False)


def close_meandric_system(s):
    n = s.order
    axis = tuple(_signed(i) for i in range(1, n + 1))
    comps, turns = [axis], {}
    for loop in s.loops:
        comps.append(tuple(-_signed(x) for x in loop))
        for k, x in enumerate(loop):
            turns[x] = 1 if k % 2 == 0 else -1
    return Diagram(GaussCode(tuple(comps)), tuple(turns.items()), check=False)


# ------------------------------------------------------------ realization


def realize_gauss_code(g, meander=None):
    """Find a planar rotation system for a signed Gauss code."""
    if isinstance(g, str):
        g = GaussCode.parse(g)
    m = g.n_crossings
    if m == 0:
        return Diagram(g, ())
    # parity filter: between the two visits of a self-crossing an even
    # number of visits must occur
    for comp in g.components:
        pos = {}
        for i, x in enumerate(comp):
            pos.setdefault(abs(x), []).append(i)
        for lab, where in pos.items():
            if len(where) == 2 and (where[1] - where[0]) % 2 == 0:
                raise RealizabilityError(f"crossing {lab} fails the Gauss parity condition")
    dummy = {lab: 1 for lab in g.labels()}
    emb = _Embedding(g, dummy)
    G = nx.Graph()
    rims = []
    for c in range(emb.m):
        v1, v2 = emb.visits[c]
        a, b = 2 * emb.prev[v1] + 1, 2 * v1
        p, q = 2 * emb.prev[v2] + 1, 2 * v2
        hub = ("h", c)
        for x in (a, p, b, q):
            G.add_edge(hub, ("r", x))
        for x, y in ((a, p), (p, b), (b, q), (q, a)):
            G.add_edge(("r", x), ("r", y))
        rims.append((a, p, b, q))
    for e in range(emb.n_edges):
        G.add_edge(("r", 2 * e), ("m", e))
        G.add_edge(("m", e), ("r", 2 * e + 1))
    ok, emb_nx = nx.check_planarity(G)
    if not ok:
        raise RealizabilityError(f"Gauss code {g} has no planar realization")
    turns = {}
    for c, (a, p, b, q) in enumerate(rims):
        cw = [x[1] for x in emb_nx.neighbors_cw_order(("h", c))]
        k = cw.index(a)
        after = cw[(k + 1) % 4]
        # clockwise a, q, b, p  <=>  counter-clockwise a, p, b, q  <=>  t = +1
        turns[emb.labels[c]] = 1 if after == q else -1
    return Diagram(g, tuple(turns.items()), meander=meander)


# ---------------------------------------------------------------- DT codes


def _dt_from_sequence(seqs):
    """Sequences of (label, under) per component, already in labelling
    order; returns the evens list or None if parity fails."""
    first = {}
    total = sum(len(seq) for seq in seqs)
    evens = [0] * (total // 2)
    k = 1
    for seq in seqs:
        for lab, under in seq:
            prev = first.pop(lab, None)
            if prev is None:
                first[lab] = (k, under)
            else:
                i, ui = prev
                if (i ^ k) & 1 == 0:
                    return None
                if i & 1:
                    evens[i >> 1] = k if ui else -k
                else:
                    evens[k >> 1] = i if under else -i
            k += 1
    return tuple(evens)


def _dt_key(evens):
    return tuple(abs(x) for x in evens), tuple(x < 0 for x in evens)


def to_dt_code(d):
    """Lexicographically least DT code over starting points, directions,
    component orders and a global mirror."""
    comps = [tuple((abs(x), x < 0) for x in c) for c in d.gauss.components]
    if any(len(c) == 0 for c in comps):
        raise DomainError("DT codes need every component to have crossings")
    variants = []
    for c in comps:
        L = len(c)
        opts = []
        for rev in (False, True):
            seq = c[::-1] if rev else c
            for s in range(L):
                opts.append(seq[s:] + seq[:s])
        variants.append(opts)
    k = len(comps)
    best = None
    for order in permutations(range(k)):
        best = _dt_search(order, variants, best)
    sizes = tuple(len(comps[i]) // 2 for i in best[1])
    return DTCode(sizes, best[0])


def _dt_search(order, variants, best):
    # depth-first over component variants with the parity condition checked
    # incrementally.  When the earliest odd position still lacking a partner
    # is paired into the component being placed, only the variants putting
    # that partner first can win.
    labels_of = [{lab for lab, _ in variants[i][0]} for i in range(len(variants))]
    odd_index = [[{seq[i][0]: i for i in reversed(range(1, len(seq), 2))} for seq in opts]
                 for opts in variants]

    def candidates(idx, chosen):
        seen = {}
        k = 1
        first_open = None
        for seq in chosen:
            for lab, _ in seq:
                seen[lab] = seen.get(lab, 0) + 1
        k = 1
        for seq in chosen:
            for lab, _ in seq:
                if k % 2 and seen[lab] == 1:
                    first_open = lab
                    break
                k += 1
            if first_open is not None:
                break
        opts = variants[order[idx]]
        if first_open is None or first_open not in labels_of[order[idx]]:
            return opts
        # the partner must land on an even global position, i.e. odd local index
        ranks = [pos.get(first_open, 1 << 30) for pos in odd_index[order[idx]]]
        low = min(ranks)
        return [seq for seq, r in zip(opts, ranks) if r == low]

    def rec(idx, chosen, offset, parity):
        nonlocal best
        if idx == len(order):
            evens = _dt_from_sequence(chosen)
            if evens is None:
                return
            # the mirror choice that makes the first entry positive wins
            cand = evens if evens[0] > 0 else tuple(-x for x in evens)
            if best is not None:
                babs = best[2][0]
                for x, y in zip(cand, babs):
                    if abs(x) != y:
                        break
                if abs(x) > y:
                    return
            key = _dt_key(cand)
            if best is None or key < best[2]:
                best = (cand, order, key)
            return
        for seq in candidates(idx, chosen):
            ok, new_par = True, dict(parity)
            for i, (lab, _) in enumerate(seq):
                par = (offset + i) % 2
                if lab in new_par:
                    if new_par[lab] == par:
                        ok = False
                        break
                    new_par[lab] = None
                else:
                    new_par[lab] = par
            if not ok:
                continue
            nxt = chosen + [seq]
            if best is not None and idx + 1 < len(order) and _beaten(nxt, best[2][0]):
                continue
            rec(idx + 1, nxt, offset + len(seq), new_par)

    rec(0, [], 0, {})
    return best


def _beaten(chosen, best_abs):
    """True when every completion of the placed components gives a DT code
    above ``best_abs``: compare the known prefix, closed by a lower bound
    for the first entry whose partner is still unplaced."""
    flat = [lab for seq in chosen for lab, _ in seq]
    first = {}
    partner = {}
    for k, lab in enumerate(flat, 1):
        if lab in first:
            partner[first[lab]] = k
        else:
            first[lab] = k
    placed = len(flat)
    for i, odd in enumerate(range(1, placed + 1, 2)):
        lab = flat[odd - 1]
        k = first[lab]
        if k != odd:
            value = k
        elif odd in partner:
            value = partner[odd]
        else:
            value = placed + 2
            return value > best_abs[i]
        if value != best_abs[i]:
            return value > best_abs[i]
    return False


def gauss_from_dt(c):
    if isinstance(c, str):
        c = DTCode.parse(c)
    n = c.n_crossings
    label_of, under = {}, {}
    for k, e in enumerate(c.pairing):
        odd, even = 2 * k + 1, abs(e)
        label_of[odd] = label_of[even] = k + 1
        # positive entry: the odd visit is the under-pass
        under[odd] = e > 0
        under[even] = e < 0
    comps, start = [], 1
    for size in c.component_sizes:
        stop = start + 2 * size
        comps.append(tuple(-label_of[i] if under[i] else label_of[i] for i in range(start, stop)))
        start = stop
    if start != 2 * n + 1:
        raise MalformedInputError("component sizes do not match the code")
    return GaussCode(tuple(comps))


def from_dt_code(c):
    return realize_gauss_code(gauss_from_dt(c))


# ------------------------------------------------------------ ordered form


def find_ordered_form(g):
    """An ordered Gauss code: rotation/reversal whose first half visits n
    distinct crossings, relabelled 1..n along that half."""
    if isinstance(g, Diagram):
        g = g.gauss
    if len(g.components) != 1:
        raise DomainError("ordered forms are defined for knots only")
    code = g.components[0]
    L = len(code)
    n = L // 2
    best = None
    for rev in (False, True):
        seq = code[::-1] if rev else code
        for s in range(L):
            rot = seq[s:] + seq[:s]
            if len({abs(x) for x in rot[:n]}) != n:
                continue
            new = {abs(x): i + 1 for i, x in enumerate(rot[:n])}
            cand = tuple(new[abs(x)] * (1 if x > 0 else -1) for x in rot)
            key = (tuple(abs(x) for x in cand[n:]), tuple(x < 0 for x in cand))
            if best is None or key < best[0]:
                best = (key, cand)
    return None if best is None else GaussCode((best[1],))


def is_ordered(g):
    if len(g.components) != 1:
        return False
    code = g.components[0]
    n = len(code) // 2
    return [abs(x) for x in code[:n]] == list(range(1, n + 1))
