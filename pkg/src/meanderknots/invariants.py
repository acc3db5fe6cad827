"""Kauffman bracket, Jones polynomial and the fingerprint used as a type key.

Normalisation: a crossingless circle has bracket 1, each extra circle a
factor delta = -A^2 - A^-2, and the writhe correction is (-A^3)^-w.
"""
from collections import defaultdict
from dataclasses import dataclass, field
from math import comb

import numpy as np

from . import kernels
from .diagram import nugatory_crossings, reverse_components
from .errors import DomainError
from .polynomial import DELTA, LaurentPolynomial


def _shift_mul(poly, k, loops, delta_pows):
    """poly * A^k * delta^loops on plain dicts."""
    if loops:
        out = defaultdict(int)
        for e, c in poly.items():
            for f, g in delta_pows[loops]:
                out[e + f + k] += c * g
        return out
    return {e + k: c for e, c in poly.items()}


def _delta_power_terms(k):
    # (-A^2 - A^-2)^k expanded
    return [(2 * (k - 2 * j), (-1) ** k * comb(k, j)) for j in range(k + 1)]


def _crossing_order(emb, d):
    if d.meander is not None:
        return [emb.index[i] for i in range(1, emb.m + 1)]
    done, order = set(), []
    while len(order) < emb.m:
        best, score = None, -1
        for c in range(emb.m):
            if c in done:
                continue
            s = sum(1 for x in emb.slots[c] if emb.end_slot[x ^ 1][0] in done)
            if s > score:
                best, score = c, s
        done.add(best)
        order.append(best)
    return order


def _sweep_bracket(emb, order):
    """Contract crossings one by one, keeping for every noncrossing pairing
    of the open strands the partial bracket (a frontier transfer matrix)."""
    m = emb.m
    rank = {c: i for i, c in enumerate(order)}
    delta_pows = {k: _delta_power_terms(k) for k in range(1, 5)}
    states = {(): {0: 1}}
    for step, c in enumerate(order):
        s, i = emb.slots[c], emb.over_out[c]
        smoothings = (
            (1, ((s[i], s[(i - 1) % 4]), (s[(i + 1) % 4], s[(i + 2) % 4]))),
            (-1, ((s[i], s[(i + 1) % 4]), (s[(i + 2) % 4], s[(i + 3) % 4]))),
        )
        kind = {}
        for x in s:
            cy = emb.end_slot[x ^ 1][0]
            kind[x] = "loop" if cy == c else ("close" if rank[cy] < step else "open")
        at_c = {}
        for x in s:
            if kind[x] == "close":
                at_c[x >> 1] = x
        new_states = {}
        for key, poly in states.items():
            M = {}
            for a, b in key:
                M[a] = b
                M[b] = a
            for sgn, (j1, j2) in smoothings:
                J = {j1[0]: j1[1], j1[1]: j1[0], j2[0]: j2[1], j2[1]: j2[0]}
                used = set()

                def walk(x):
                    # enter c at end x, return the frontier edge reached
                    while True:
                        y = J[x]
                        used.add(x)
                        used.add(y)
                        ky = kind[y]
                        if ky == "open":
                            return y >> 1
                        if ky == "loop":
                            x = y ^ 1
                            continue
                        f = M[y >> 1]
                        if f in at_c:
                            x = at_c[f]
                            continue
                        return f

                pairs = []
                for g, h in key:
                    gc, hc = g in at_c, h in at_c
                    if not gc and not hc:
                        pairs.append((g, h))
                for g in M:
                    if g in at_c:
                        continue
                    h = M[g]
                    if h in at_c and at_c[h] not in used:
                        pairs.append(tuple(sorted((g, walk(at_c[h])))))
                for x in s:
                    if kind[x] == "open" and x not in used:
                        pairs.append(tuple(sorted((x >> 1, walk(x)))))
                loops = 0
                for x in s:
                    if x in used:
                        continue
                    loops += 1
                    x0 = x
                    while True:
                        y = J[x]
                        used.add(x)
                        used.add(y)
                        if kind[y] == "loop":
                            x = y ^ 1
                        else:
                            x = at_c[M[y >> 1]]
                        if x == x0:
                            break
                if loops not in delta_pows:
                    delta_pows[loops] = _delta_power_terms(loops)
                nk = tuple(sorted(pairs))
                contrib = _shift_mul(poly, sgn, loops, delta_pows)
                bucket = new_states.setdefault(nk, defaultdict(int))
                for e, v in contrib.items():
                    bucket[e] += v
        states = new_states
    (key, poly), = states.items()
    assert key == ()
    return LaurentPolynomial(poly)


def _free_loops(d):
    return sum(1 for c in d.gauss.components if not c)


def kauffman_bracket(d, method="sweep"):
    """Exact bracket.  ``method`` is 'sweep' (frontier contraction, the
    default) or 'states' (all 2^n smoothings)."""
    emb = d.embedding
    free = _free_loops(d)
    if emb.m == 0:
        return DELTA ** (free - 1)
    if method == "states":
        return _state_sum_bracket(d)
    raw = _sweep_bracket(emb, _crossing_order(emb, d))
    return (raw * DELTA ** free).exact_divide(DELTA)


def _state_sum_bracket(d):
    emb = d.embedding
    m = emb.m
    joins = np.array(emb.smoothing_joins(), dtype=np.int64)
    hist = kernels.bracket_histogram(joins, emb.n_edges)
    free = _free_loops(d)
    acc = defaultdict(int)
    for bb, ll in zip(*np.nonzero(hist)):
        for f, g in _delta_power_terms(int(ll) + free - 1):
            acc[m - 2 * int(bb) + f] += int(hist[bb, ll]) * g
    return LaurentPolynomial(acc)


def state_sum_bracket(d):
    return kauffman_bracket(d, method="states")


def writhe_unit(w):
    """(-A^3)^-w"""
    return LaurentPolynomial.monomial(-3 * w, -1 if w % 2 else 1)


def normalized_bracket(d, method="sweep"):
    return kauffman_bracket(d, method) * writhe_unit(d.writhe())


def jones_polynomial(d):
    """Jones polynomial as a Laurent polynomial in t^(1/4)."""
    return normalized_bracket(d).invert()


def format_jones(v):
    if v.is_zero():
        return "0"
    parts = []
    for e, c in reversed(v.terms()):
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        if e == 0:
            body = str(mag)
        else:
            num, den = (e, 4)
            for g in (4, 2):
                if num % g == 0 and den % g == 0:
                    num, den = num // g, den // g
                    break
            power = "t" if (num, den) == (1, 1) else (f"t^{num}" if den == 1 else f"t^({num}/{den})")
            body = power if mag == 1 else f"{mag}*{power}"
        parts.append((sign, body))
    head = ("-" if parts[0][0] == "-" else "") + parts[0][1]
    return head + "".join(f" {s} {b}" for s, b in parts[1:])


def determinant(d):
    """|V(-1)|, from the normalised bracket at a primitive 8th root of unity."""
    f = normalized_bracket(d)
    if f.is_zero():
        return 0
    r = f.min_degree() % 4
    return abs(sum(c if ((e - r) // 4) % 2 == 0 else -c for e, c in f.terms()))


def linking_matrix(d):
    k = d.n_components
    if k < 2:
        raise DomainError("linking numbers need at least two components")
    mat = [[0] * k for _ in range(k)]
    for lab, sgn in d.crossing_signs.items():
        a, b = d.crossing_components(lab)
        if a != b:
            mat[a][b] += sgn
            mat[b][a] += sgn
    return [[x // 2 for x in row] for row in mat]


# ------------------------------------------------------------- fingerprint


def chirality_class(f):
    g = f.invert()
    return min(f, g, key=lambda p: p.terms())


@dataclass(frozen=True)
class Fingerprint:
    n_components: int
    chirality_class: LaurentPolynomial
    reduced_crossings: int = field(default=0, compare=False)
    normalized_bracket: LaurentPolynomial = field(default=None, compare=False, repr=False)

    def key(self):
        return (self.n_components, self.chirality_class.terms())

    def to_json(self):
        return {
            "components": self.n_components,
            "reduced_crossings": self.reduced_crossings,
            "bracket": [list(t) for t in self.chirality_class.terms()],
        }


def orientation_writhes(d):
    """Writhe for every reorientation of the components other than the
    first; reversing a set S flips the signs of crossings between S and
    the rest."""
    k = d.n_components
    comps = {lab: d.crossing_components(lab) for lab in d.crossing_signs}
    out = []
    for mask in range(0, 1 << k, 2):
        w = 0
        for lab, sgn in d.crossing_signs.items():
            a, b = comps[lab]
            flip = ((mask >> a) ^ (mask >> b)) & 1
            w += -sgn if flip else sgn
        out.append(w)
    return out


def fingerprint(d, method="sweep"):
    """Type key: component count plus the normalised bracket, minimised
    over mirror image and over the relative orientation of components."""
    bracket = kauffman_bracket(d, method)
    f = bracket * writhe_unit(d.writhe())
    key = min((chirality_class(bracket * writhe_unit(w)) for w in set(orientation_writhes(d))),
              key=lambda p: p.terms())
    reduced = d.n_crossings - len(nugatory_crossings(d))
    return Fingerprint(d.n_components, key, reduced, f)


def unknot_fingerprint(components=1):
    return Fingerprint(components, DELTA ** (components - 1), 0, DELTA ** (components - 1))


class CollisionReport:
    """Records pairs of distinct diagrams that share a fingerprint but are
    told apart by a secondary check."""

    def __init__(self):
        self.pairs = []

    def add(self, fp, first, second, detail=""):
        self.pairs.append((fp, str(first), str(second), detail))

    def __bool__(self):
        return bool(self.pairs)

    def __len__(self):
        return len(self.pairs)

    def to_json(self):
        return [{"fingerprint": fp.to_json(), "first": a, "second": b, "detail": c}
                for fp, a, b, c in self.pairs]


# ------------------------------------------------------- Alexander polynomial


def _bareiss_det(mat):
    """Fraction-free determinant over Z[t, 1/t]."""
    n = len(mat)
    if n == 0:
        return LaurentPolynomial.constant(1)
    a = [row[:] for row in mat]
    sign, prev = 1, LaurentPolynomial.constant(1)
    for k in range(n - 1):
        if a[k][k].is_zero():
            swap = next((r for r in range(k + 1, n) if not a[r][k].is_zero()), None)
            if swap is None:
                return LaurentPolynomial()
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = a[i][j] * a[k][k] - a[i][k] * a[k][j]
                a[i][j] = num.exact_divide(prev) if not num.is_zero() else num
        prev = a[k][k]
    det = a[n - 1][n - 1]
    return -det if sign < 0 else det


def alexander_polynomial(d):
    """Single-variable Alexander polynomial from the Wirtinger presentation,
    normalised to lowest degree 0 with a positive constant term."""
    g = d.gauss
    signs = d.crossing_signs
    # arc_after[(component, i)]: the arc leaving the under-pass at visit i;
    # an over-pass lies on the arc after the nearest earlier under-pass
    arc_after, prev_under = {}, {}
    n_arcs = free = 0
    for ci, comp in enumerate(g.components):
        L = len(comp)
        unders = [i for i, x in enumerate(comp) if x < 0]
        if not unders:
            free += 1
            for i in range(L):
                prev_under[(ci, i)] = (ci, -1)
            arc_after[(ci, -1)] = n_arcs
            n_arcs += 1
            continue
        for u in unders:
            arc_after[(ci, u)] = n_arcs
            n_arcs += 1
        for i in range(L):
            before = [u for u in unders if u < i]
            prev_under[(ci, i)] = (ci, before[-1] if before else unders[-1])
    t = LaurentPolynomial.monomial(1)
    one = LaurentPolynomial.constant(1)
    rows = []
    where = {}
    for ci, comp in enumerate(g.components):
        for i, x in enumerate(comp):
            where.setdefault(abs(x), {})[x > 0] = (ci, i, len(comp))
    for lab in g.labels():
        (co, io, _), (cu, iu, Lu) = where[lab][True], where[lab][False]
        over = arc_after[prev_under[(co, io)]]
        incoming = arc_after[prev_under[(cu, iu)]]
        outgoing = arc_after[(cu, iu)]
        row = [LaurentPolynomial() for _ in range(n_arcs)]
        # Fox derivatives of the Wirtinger relation; every row sums to 0
        if signs[lab] > 0:
            row[over] = row[over] + (one - t)
            row[incoming] = row[incoming] + t
            row[outgoing] = row[outgoing] - one
        else:
            row[over] = row[over] + (t - one)
            row[incoming] = row[incoming] + one
            row[outgoing] = row[outgoing] - t
        rows.append(row)
    if free and n_arcs > len(rows):
        return LaurentPolynomial()
    minor = [row[1:] for row in rows[1:]]
    det = _bareiss_det(minor)
    if det.is_zero():
        return det
    det = det.shift(-det.min_degree())
    rev = det.invert()
    rev = rev.shift(-rev.min_degree())
    best = min(det, -det, rev, -rev, key=lambda p: (p.terms()[0][1] < 0, p.terms()))
    return best


def alexander_class(d):
    """Alexander polynomial minimised over the relative orientations of the
    components, so that it depends on the link type alone."""
    k = d.n_components
    polys = []
    for mask in range(0, 1 << k, 2):
        which = [i for i in range(k) if mask >> i & 1]
        polys.append(alexander_polynomial(reverse_components(d, which) if which else d))
    return min(polys, key=lambda p: p.terms())
