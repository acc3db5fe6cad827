"""Operations on meanders and ordered Gauss codes, plus diagram searches.

Sums join two meander closures end to end.  Products splice the second
halves of ordered Gauss codes.  The searches scan every over/under
assignment of every meander (or ordered-code) shadow up to a bound and
report the smallest diagram of a target type.

Search kernel.  For a shadow with m crossings let L[s] be the loop count of
smoothing state s.  Flipping the crossings in x gives the bracket

    <D_x> = sum_s delta^(L[s]-1) A^(m - 2|s xor x|),

an XOR convolution, so one Walsh-Hadamard transform yields all 2^m brackets
at once.  Brackets are compared as values modulo a prime at two points and
every match is confirmed with an exact fingerprint.
"""
from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations

import numpy as np

from . import kernels
from .classify import alternate, census_meanders
from .diagram import (Diagram, GaussCode, analyze, close_open_meander, find_ordered_form,
                      from_dt_code, is_ordered, realize_gauss_code, to_dt_code)
from .errors import DomainError, MeanderKnotsError, ParityError
from .invariants import alexander_class, fingerprint
from .meander import OpenMeander

# ------------------------------------------------------------------- sums


def _axis_flags(d):
    n = len(d.meander)
    return {abs(x): x > 0 for x in d.gauss.components[0][:n]}


def _forward_form(d):
    """(permutation, axis over-flags) with the curve read from its start.
    A closure built from the reversed permutation is the forward closure of
    that reversal with every crossing switched."""
    p = tuple(d.meander)
    flags = _axis_flags(d)
    n = len(p)
    if n % 2 and n > 1 and (p[0] == n or p[-1] == 1):
        return p[::-1], {x: not v for x, v in flags.items()}
    return p, flags


def _as_closure(x):
    if isinstance(x, OpenMeander):
        return close_open_meander(x)
    if not isinstance(x, Diagram) or x.meander is None:
        raise DomainError("sums are defined for meander closures only")
    return x


def meander_sum(a, b):
    """Concatenate the meanders of two closures and carry over their
    crossing information.  Component count follows the parity of the total
    order: knot+knot gives a 2-component link, knot+link a knot."""
    a, b = _as_closure(a), _as_closure(b)
    p, fa = _forward_form(a)
    q, fb = _forward_form(b)
    na = len(p)
    r = p + tuple(x + na for x in q)
    # b's axis visits shift parity by na, so its over-flags flip with it
    flags = dict(fa)
    flags.update({x + na: v ^ bool(na % 2) for x, v in fb.items()})
    base = close_open_meander(OpenMeander(len(r), r))
    comps = []
    for ci, comp in enumerate(base.gauss.components):
        out = []
        for j, x in enumerate(comp):
            lab = abs(x)
            over = flags[lab] if (ci == 0 and j < len(r)) else not flags[lab]
            out.append(lab if over else -lab)
        comps.append(tuple(out))
    return Diagram(GaussCode(tuple(comps)), base.turns, meander=r)


# --------------------------------------------------------------- products


def _second_half(g, what):
    if isinstance(g, str):
        g = GaussCode.parse(g)
    if isinstance(g, Diagram):
        g = g.gauss
    if len(g.components) == 1:
        if not is_ordered(g):
            raise DomainError(f"{what} is not an ordered Gauss code")
        code = g.components[0]
        return len(code) // 2, code[len(code) // 2:]
    if len(g.components) == 2:
        axis, other = g.components
        if [abs(x) for x in axis] != list(range(1, len(axis) + 1)):
            raise DomainError(f"{what} is not an ordered link code")
        return len(axis), other
    raise DomainError(f"{what} has more than two components")


def ogc_product_knots(g1, g2):
    """Second half of g1 followed by the negated second half of g2."""
    n1, h1 = _second_half(g1, "first factor")
    n2, h2 = _second_half(g2, "second factor")
    if n1 != n2:
        raise DomainError(f"factors have {n1} and {n2} crossings")
    if n1 % 2 == 0:
        raise ParityError("knot products need an odd number of crossings")
    return realize_gauss_code(GaussCode((h1 + tuple(-x for x in h2),)))


def ogc_product_links(g1, g2):
    """Two-component code: second half of g1, negated second half of g2."""
    n1, h1 = _second_half(g1, "first factor")
    n2, h2 = _second_half(g2, "second factor")
    if n1 != n2:
        raise DomainError(f"factors have {n1} and {n2} crossings")
    if n1 % 2:
        raise ParityError("link products need an even number of crossings")
    return realize_gauss_code(GaussCode((tuple(h1), tuple(-x for x in h2))))


def mirror_ordered(g):
    """Ordered code of the mirror image: the switched code, put back into
    ordered form."""
    if isinstance(g, str):
        g = GaussCode.parse(g)
    out = find_ordered_form(g.mirror())
    if out is None:
        raise DomainError("code has no ordered form")
    return out


# ---------------------------------------------------------- chord diagrams


@dataclass(frozen=True)
class ChordDiagram:
    n: int
    circle: tuple         # crossing labels in the order met
    orientations: tuple   # per chord (label, tail position, head position), head = under

    def gauss(self):
        tail = {lab: t for lab, t, _ in self.orientations}
        return GaussCode((tuple(lab if tail[lab] == i else -lab for i, lab in enumerate(self.circle)),))

    def chords(self):
        return {lab: (t, h) for lab, t, h in self.orientations}


def chord_diagram(g):
    if isinstance(g, str):
        g = GaussCode.parse(g)
    if isinstance(g, Diagram):
        g = g.gauss
    if len(g.components) != 1:
        raise DomainError("chord diagrams are drawn for knots")
    code = g.components[0]
    tail, head = {}, {}
    for i, x in enumerate(code):
        (tail if x > 0 else head)[abs(x)] = i
    orient = tuple((lab, tail[lab], head[lab]) for lab in sorted(tail))
    return ChordDiagram(len(tail), tuple(abs(x) for x in code), orient)


def chord_product(c1, c2):
    """Glue the second halves of two chord diagrams into one circle; the
    second half keeps its chords but reverses their direction."""
    if c1.n != c2.n:
        raise DomainError("chord diagrams of different orders")
    n = c1.n
    t1 = {lab: t for lab, t, _ in c1.orientations}
    t2 = {lab: t for lab, t, _ in c2.orientations}
    circle = c1.circle[n:] + c2.circle[n:]
    tails, heads = {}, {}
    for i, lab in enumerate(c1.circle[n:]):
        (tails if t1[lab] == i + n else heads)[lab] = i
    for i, lab in enumerate(c2.circle[n:]):
        (heads if t2[lab] == i + n else tails)[lab] = i + n
    orient = tuple((lab, tails[lab], heads[lab]) for lab in sorted(tails))
    return ChordDiagram(n, circle, orient)


# ------------------------------------------------------------------ shadows


def meander_shadows(m):
    """Closures of order m, one of each mirror pair."""
    return [close_open_meander(OpenMeander(m, p)) for p in census_meanders(m)]


def _ogc_paths(m):
    """Curves returning from the right end of the axis to its left end and
    crossing it once at each of 1..m.  The plane cut along the axis is a
    disk with boundary L, 1+..m+, R, m-..1-; the curve is a chain of
    noncrossing chords in it.  Yields tuples of (label, entered from above)."""
    size = 2 * m + 2
    right = m + 1

    def pos(i, upper):
        return i if upper else size - i

    def crosses(a, b, c, d):
        lo, hi = min(a, b), max(a, b)
        return (lo < c < hi) != (lo < d < hi)

    chords, path = [], []
    used = [False] * (m + 1)
    end_of = {}

    def balanced(cur):
        # every region left by the chords must hold an even number of
        # free points, or the remaining chords cannot pair them up
        count = {}
        stack = []
        for x in range(size):
            other = end_of.get(x)
            if other is not None and x != cur:
                if other > x:
                    stack.append(x)
                    continue
                stack.pop()
                continue
            region = stack[-1] if stack else -1
            count[region] = count.get(region, 0) + 1
        return all(v % 2 == 0 for v in count.values())

    def rec(cur, left):
        if left == 0:
            if not any(crosses(cur, 0, c, d) for c, d in chords):
                yield tuple(path)
            return
        for i in range(1, m + 1):
            if used[i]:
                continue
            for upper in (True, False):
                v = pos(i, upper)
                if any(crosses(cur, v, c, d) for c, d in chords):
                    continue
                used[i] = True
                chords.append((cur, v))
                end_of[cur], end_of[v] = v, cur
                path.append((i, upper))
                nxt = pos(i, not upper)
                if balanced(nxt):
                    yield from rec(nxt, left - 1)
                path.pop()
                del end_of[cur], end_of[v]
                chords.pop()
                used[i] = False

    yield from rec(right, m)


def _path_key(path, m):
    flip = tuple((i, not up) for i, up in path)
    rev = tuple((m + 1 - i, not up) for i, up in reversed(path))
    rflip = tuple((i, not up) for i, up in rev)
    return min(path, flip, rev, rflip)


def ogc_diagram_from_path(path):
    """Alternating diagram whose code is the axis 1..m followed by the path."""
    m = len(path)
    axis = tuple(range(1, m + 1))
    curve = tuple(i for i, _ in path)
    signed = alternate([axis + curve])[0]
    if signed[0] < 0:
        signed = tuple(-x for x in signed)
    # crossing from above to below runs left to right across the axis
    turns = tuple((i, -1 if up else 1) for i, up in path)
    return Diagram(GaussCode((signed,)), turns, check=False)


@lru_cache(maxsize=None)
def _ogc_path_list(m):
    seen = set()
    out = []
    for path in _ogc_paths(m):
        key = _path_key(path, m)
        if key not in seen:
            seen.add(key)
            out.append(key)
    return tuple(sorted(out))


def ogc_shadows(m):
    """Alternating diagrams of the ordered-code shadows with m crossings,
    one per axis reflection class."""
    return [ogc_diagram_from_path(p) for p in _ogc_path_list(m)]


def shadow_key(d):
    """Canonical DT code of the alternating diagram on d's shadow."""
    signed = alternate([tuple(abs(x) for x in c) for c in d.gauss.components])
    return str(to_dt_code(Diagram(GaussCode(signed), d.turns, check=False)))


@lru_cache(maxsize=None)
def _meander_shadow_keys(m):
    return frozenset(shadow_key(d) for d in meander_shadows(m))


def is_meander_shadow(d):
    return shadow_key(d) in _meander_shadow_keys(d.n_crossings)


# ------------------------------------------------------------------ search

_PRIME = (1 << 31) - 1
_POINTS = (48271, 16807)


def _eval(poly, a):
    return sum(c * pow(a, e, _PRIME) for e, c in poly.terms()) % _PRIME


class _TargetTable:
    """Values of each target's bracket class (and its mirror) at the two
    evaluation points."""

    def __init__(self, targets):
        self.targets = dict(targets)
        self.index = {}
        for key, fp in self.targets.items():
            f = fp.chirality_class
            for g in (f, f.invert()):
                vals = tuple(_eval(g, a) for a in _POINTS)
                self.index.setdefault(vals, set()).add(key)
        self.first = np.array(sorted({v[0] for v in self.index}), dtype=np.int64)

    def remove(self, keys):
        for k in keys:
            self.targets.pop(k, None)
        self.index = {v: ks - set(keys) for v, ks in self.index.items()}
        self.index = {v: ks for v, ks in self.index.items() if ks}
        self.first = np.array(sorted({v[0] for v in self.index}), dtype=np.int64)


def _modpow_table(base, lo, hi):
    return {e: pow(base, e, _PRIME) for e in range(lo, hi + 1)}


def _writhes(d, emb):
    """Writhe of every assignment for each relative orientation of the
    components: flipping crossing c changes its sign."""
    m = emb.m
    k = d.n_components
    signs = [d.crossing_signs[lab] for lab in emb.labels]
    comps = [d.crossing_components(lab) for lab in emb.labels]
    out = []
    for mask in range(0, 1 << k, 2):
        eps = [(-s if ((mask >> a) ^ (mask >> b)) & 1 else s) for s, (a, b) in zip(signs, comps)]
        acc = np.zeros(1 << m, np.int64)
        for c, e in enumerate(eps):
            acc[1 << c:2 << c] = acc[:1 << c] + e
        out.append(sum(eps) - 2 * acc)
    return out


def _bracket_values(loops, m, a):
    """All 2^m brackets evaluated at A = a modulo the prime."""
    p = _PRIME
    ainv = pow(a, -1, p)
    delta = (-a * a - ainv * ainv) % p
    dpow = np.array([pow(delta, k - 1, p) if k >= 1 else 0 for k in range(m + 3)], np.int64)
    f = dpow[loops]
    kernels.wht_mod(f, p)
    b = ainv * ainv % p
    am = pow(a, m, p)
    khat = np.array([am * pow(1 + b, m - j, p) * pow(1 - b, j, p) % p for j in range(m + 1)],
                    np.int64)
    f = f * khat[kernels.popcounts(m)] % p
    kernels.wht_mod(f, p)
    return f * pow(1 << m, -1, p) % p


def _flipped(d, emb, x):
    labels = {emb.labels[c] for c in range(emb.m) if (x >> c) & 1}
    comps = tuple(tuple(-y if abs(y) in labels else y for y in comp) for comp in d.gauss.components)
    return Diagram(GaussCode(comps), d.turns, meander=d.meander, check=False)


def _scan_shadow(d, table):
    """Assignments of the shadow of d whose values match a target; yields
    (x, candidate keys)."""
    emb = d.embedding
    m = emb.m
    joins = np.array(emb.smoothing_joins(), dtype=np.int64)
    loops = kernels.state_loop_counts(joins, emb.n_edges).astype(np.int64)
    half = 1 << (m - 1)
    writhes = _writhes(d, emb)
    vals = []
    for a in _POINTS:
        br = _bracket_values(loops, m, a)[:half]
        unit = _modpow_table((-pow(a, 3, _PRIME)) % _PRIME, -m, m)
        per = []
        for w in writhes:
            u = np.array([unit[-int(v)] for v in range(-m, m + 1)], np.int64)
            per.append(br * u[w[:half] + m] % _PRIME)
        vals.append(per)
    for o in range(len(writhes)):
        first = vals[0][o]
        hits = np.nonzero(np.isin(first, table.first))[0]
        for x in hits:
            keys = table.index.get((int(first[x]), int(vals[1][o][x])))
            if keys:
                yield int(x), keys


def _dt_order(text):
    from .diagram import _int_groups
    return tuple(tuple(g) for g in _int_groups(text))


def _target_checks(targets):
    """Fingerprints plus, for targets given as diagrams, the Alexander
    class used to reject bracket coincidences."""
    fps, alex = {}, {}
    for key, t in targets.items():
        if isinstance(t, Diagram):
            fps[key] = fingerprint(t)
            alex[key] = alexander_class(t)
        else:
            fps[key] = t
    return fps, alex


def search_many(targets, max_n, shadows="meander", min_n=1):
    """Smallest diagrams of each target over the chosen shadow family.
    ``targets`` maps keys to fingerprints or to diagrams of the wanted
    type; returns key -> (Diagram, n) for the targets found with at most
    max_n crossings.  Ties at the minimal n go to the lexicographically
    least DT code."""
    if shadows == "meander" and max_n > 16:
        raise DomainError("meander searches are bounded by 16 crossings")
    if shadows == "ogc" and max_n > 14:
        raise DomainError("ordered-code searches are bounded by 14 crossings")
    family = meander_shadows if shadows == "meander" else ogc_shadows
    targets, alex = _target_checks(targets)
    found = {}
    pending = dict(targets)
    for m in range(max(1, min_n), max_n + 1):
        want = {k: fp for k, fp in pending.items()
                if (fp.n_components == 1 and m % 2 == 1) or
                (shadows == "meander" and fp.n_components == 2 and m % 2 == 0)}
        if shadows == "ogc":
            want = {k: fp for k, fp in pending.items() if fp.n_components == 1}
        if not want:
            continue
        table = _TargetTable(want)
        best = {}
        for d in family(m):
            for x, keys in _scan_shadow(d, table):
                cand = _flipped(d, d.embedding, x)
                fp = None
                for key in keys:
                    if fp is None:
                        fp = fingerprint(cand)
                    if fp != want[key]:
                        continue
                    if key in alex and alexander_class(cand) != alex[key]:
                        continue
                    code = _dt_order(str(to_dt_code(cand)))
                    if key not in best or code < best[key][0]:
                        best[key] = (code, cand)
        for key, (_, cand) in best.items():
            found[key] = (cand, m)
            del pending[key]
        if not pending:
            break
    return found


def search_meander_diagram(target, max_n):
    if max_n > 16:
        raise DomainError("meander searches are bounded by 16 crossings")
    return search_many({0: target}, max_n, "meander").get(0)


def search_ogc_diagram(target, max_n):
    if max_n > 14:
        raise DomainError("ordered-code searches are bounded by 14 crossings")
    return search_many({0: target}, max_n, "ogc").get(0)


# ------------------------------------------------- minimal alternating diagrams


@lru_cache(maxsize=None)
def alternating_knot_diagrams(n):
    """Every reduced prime alternating knot diagram with n crossings, one
    per DT code up to re-rooting and reversal, each with its fingerprint."""
    rows = np.array(list(permutations(range(2, 2 * n + 1, 2))), dtype=np.int64).reshape(-1, n)
    rows = rows[kernels.canonical_dt_mask(rows)]
    out = []
    for row in rows:
        code = "{" + ",".join(str(int(x)) for x in row) + "}"
        try:
            d = from_dt_code(code)
        except MeanderKnotsError:
            continue
        flags = analyze(d)
        if flags.reduced and flags.prime:
            out.append((d, fingerprint(d)))
    return tuple(out)


def minimal_diagrams(target, n):
    """Reduced alternating n-crossing knot diagrams of the target type."""
    return [d for d, fp in alternating_knot_diagrams(n) if fp == target]


def has_ordered_minimal_diagram(target, n):
    """Whether some minimal alternating diagram of the target admits an
    ordered Gauss code; None when no diagram of the target was found."""
    ds = minimal_diagrams(target, n)
    if not ds:
        return None
    return any(find_ordered_form(d) is not None for d in ds)
