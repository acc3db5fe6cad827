"""Censuses of meander knots and links, grouped into types by fingerprint.

Knots and 2-component links come from closing open meanders.  Links with
three or more components are built by drawing extra simple closed curves
into the faces of smaller arrangements, since the loops of a meandric
system never cross one another.
"""
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import product

from . import catalog
from .diagram import (Diagram, GaussCode, analyze, close_open_meander, remove_nugatory,
                      to_dt_code)
from .errors import DomainError, MeanderKnotsError
from .invariants import alexander_class, fingerprint
from .meander import OpenMeander, open_meander_array

KNOT, LINK, MULTI = "knot", "2-link", "multi-link"
# below this size the 2^n state sum beats the frontier sweep
STATE_SUM_LIMIT = 12


def _method(n):
    return "states" if n <= STATE_SUM_LIMIT else "sweep"


@dataclass(frozen=True)
class Representative:
    dt: str
    gauss: str
    name: str = None
    members: int = 1
    bracket: tuple = ()

    def to_json(self):
        return {"name": self.name, "dt": self.dt, "gauss": self.gauss,
                "members": self.members, "bracket": [list(t) for t in self.bracket]}

    @classmethod
    def from_json(cls, obj):
        return cls(obj["dt"], obj["gauss"], obj["name"], obj["members"],
                   tuple(tuple(t) for t in obj["bracket"]))


@dataclass(frozen=True)
class Collision:
    """A fingerprint class whose diagrams a secondary check tells apart:
    different catalog names or different Alexander polynomials."""
    bracket: tuple
    names: tuple
    alexander: tuple
    dts: tuple

    @property
    def extra_types(self):
        return max(len(self.names), len(self.alexander)) - 1

    def to_json(self):
        return {"bracket": [list(t) for t in self.bracket], "names": list(self.names),
                "alexander": list(self.alexander), "dts": list(self.dts)}

    @classmethod
    def from_json(cls, obj):
        return cls(tuple(tuple(t) for t in obj["bracket"]), tuple(obj["names"]),
                   tuple(obj["alexander"]), tuple(obj["dts"]))


@dataclass(frozen=True)
class CensusRow:
    n: int
    kind: str
    c: int
    type_count: int
    representatives: tuple = field(default=(), compare=False)
    collisions: tuple = field(default=(), compare=False)

    @property
    def resolved_count(self):
        """type_count plus the extra types split off by collisions."""
        return self.type_count + sum(x.extra_types for x in self.collisions)

    def csv_line(self):
        return f"{self.n},{self.kind},{self.c},{self.type_count}"

    def to_json(self):
        return {"n": self.n, "kind": self.kind, "c": self.c, "count": self.type_count,
                "resolved_count": self.resolved_count,
                "representatives": [r.to_json() for r in self.representatives],
                "collisions": [x.to_json() for x in self.collisions]}

    @classmethod
    def from_json(cls, obj):
        return cls(obj["n"], obj["kind"], obj["c"], obj["count"],
                   tuple(Representative.from_json(r) for r in obj.get("representatives", ())),
                   tuple(Collision.from_json(x) for x in obj.get("collisions", ())))


# ------------------------------------------------------------ closures


def _mirror_partner(p):
    """Reflect left-right and reverse: the closure is the mirror image of
    the closure of p, so the census needs only one of the two."""
    n = len(p)
    return tuple(n + 1 - x for x in reversed(p))


def census_meanders(n, reduce_symmetry=True):
    """Open meanders of order n whose closures the census must visit."""
    rows = [tuple(int(x) for x in r) for r in open_meander_array(n)]
    if reduce_symmetry:
        rows = [p for p in rows if p <= _mirror_partner(p)]
    return rows


def _closure_records(n, perms):
    """Close, filter and fingerprint a batch of meanders.  Picklable so it
    can run in worker processes."""
    method = _method(n)
    out = []
    for p in perms:
        d = close_open_meander(OpenMeander(n, p))
        flags = analyze(d)
        if not (flags.reduced and flags.prime):
            continue
        if n % 2 == 0 and not flags.components_simple:
            continue
        out.append((fingerprint(d, method), p))
    return out


def _map_batches(func, n, items, jobs):
    jobs = jobs or 1
    if jobs == 1 or len(items) < 64:
        return func(n, items)
    size = -(-len(items) // (4 * jobs))
    batches = [items[i:i + size] for i in range(0, len(items), size)]
    out = []
    with ProcessPoolExecutor(max_workers=jobs) as ex:
        for part in ex.map(func, [n] * len(batches), batches):
            out.extend(part)
    return out


def _group(records):
    classes = {}
    for fp, item in records:
        classes.setdefault(fp, []).append(item)
    return classes


def _summarize(n, kind, c, classes, to_diagram):
    reps, collisions = [], []
    for fp, items in classes.items():
        dts = {}
        for item in items:
            d = to_diagram(item)
            dts.setdefault(str(to_dt_code(d)), d)
        best = min(dts, key=_dt_sort_key)
        names = names_for_class(fp, dts)
        alex = sorted({alexander_class(d).to_string("t") for d in dts.values()}) if len(dts) > 1 else []
        if len(names) > 1 or len(alex) > 1:
            collisions.append(Collision(fp.chirality_class.terms(), tuple(names), tuple(alex),
                                        tuple(sorted(dts, key=_dt_sort_key))))
        if names:
            name = names[0] if len(names) == 1 else None
        else:
            cands = catalog.names_for_fingerprint(fp)
            name = cands[0] if len(cands) == 1 else None
        reps.append(Representative(best, str(dts[best].gauss), name, len(items),
                                   fp.chirality_class.terms()))
    reps.sort(key=lambda r: _dt_sort_key(r.dt))
    collisions.sort(key=lambda x: (x.names, x.alexander))
    return CensusRow(n, kind, c, len(classes), tuple(reps), tuple(collisions))


def _dt_sort_key(text):
    from .diagram import _int_groups
    groups = _int_groups(text)
    return tuple(tuple(g) for g in groups)


def names_for_class(fp, dts):
    """Distinct catalog names reached by the canonical DT codes of a class;
    more than one name means the fingerprint failed to separate types."""
    names = []
    for code in sorted(dts, key=_dt_sort_key):
        name = catalog.name_for_dt(code)
        if name is not None and name not in names:
            names.append(name)
    return names


def _closure_census(n, kind, jobs, reduce_symmetry):
    perms = census_meanders(n, reduce_symmetry)
    records = _map_batches(_closure_records, n, perms, jobs)
    if n == 1:
        # the lone one-crossing closure is counted as the unknot
        d = close_open_meander(OpenMeander(1, (1,)))
        records = [(fingerprint(remove_nugatory(d)), (1,))]
    classes = _group(records)
    return _summarize(n, kind, 1 if kind == KNOT else 2, classes,
                      lambda p: close_open_meander(OpenMeander(n, p)))


def census_meander_knots(n, jobs=1, reduce_symmetry=True):
    if n < 1 or n % 2 == 0:
        raise DomainError("knot censuses need an odd order")
    return _closure_census(n, KNOT, jobs, reduce_symmetry)


def census_meander_links(n, jobs=1, reduce_symmetry=True):
    if n < 2 or n % 2:
        raise DomainError("2-component link censuses need an even order")
    return _closure_census(n, LINK, jobs, reduce_symmetry)


@lru_cache(maxsize=None)
def _link_fingerprints(n):
    if n < 2 or n % 2:
        return frozenset()
    records = _closure_records(n, census_meanders(n))
    return frozenset(fp for fp, _ in records)


def lookup_name(d):
    """Catalog name of the diagram's type, preferring an exact diagram
    match over a fingerprint match."""
    try:
        name = catalog.name_for_dt(to_dt_code(d))
    except MeanderKnotsError:
        name = None
    if name is not None:
        return name
    names = catalog.names_for_fingerprint(fingerprint(d))
    return names[0] if names else None


# ------------------------------------------------- multi-component links


def _noncrossing_matchings(seq):
    if not seq:
        yield ()
        return
    first = seq[0]
    for j in range(1, len(seq), 2):
        for inner in _noncrossing_matchings(seq[1:j]):
            for outer in _noncrossing_matchings(seq[j + 1:]):
                yield ((first, seq[j]),) + inner + outer


def _compositions(total, slots):
    if slots == 1:
        yield (total,)
        return
    for k in range(total + 1):
        for rest in _compositions(total - k, slots - 1):
            yield (k,) + rest


def insert_closed_curve(d, k):
    """Every way to add a simple closed curve crossing the shadow of d in
    exactly k points and meeting every existing component.  Yields
    (components, turns): old components with the new labels spliced in
    (signs unset, all positive) and the new component last."""
    emb = d.embedding
    faces = emb.face_cycles()
    face_of = {x: f for f, cyc in enumerate(faces) for x in cyc}
    n_edges = emb.n_edges
    n_comp = d.n_components
    old = d.gauss.components
    # the face left of edge e holds arrival end 2e+1, the right face 2e
    edge_faces = [(face_of[2 * e + 1], face_of[2 * e]) for e in range(n_edges)]
    for mult in _compositions(k, n_edges):
        hits = [0] * n_comp
        parity = [0] * len(faces)
        for e, m in enumerate(mult):
            hits[emb.vis_comp[e]] += m
            for f in edge_faces[e]:
                parity[f] ^= m & 1
        if min(hits) == 0 or any(parity):
            continue
        # boundary of each face as point sides in counter-clockwise order
        sides = []
        for cyc in faces:
            seq = []
            for x in cyc:
                e, m = x >> 1, mult[x >> 1]
                if x & 1:
                    seq.extend((e, j, 0) for j in range(m))
                else:
                    seq.extend((e, j, 1) for j in reversed(range(m)))
            sides.append(tuple(seq))
        options = [list(_noncrossing_matchings(s)) for s in sides if s]
        for choice in product(*options):
            partner = {}
            for matching in choice:
                for a, b in matching:
                    partner[a] = b
                    partner[b] = a
            curve = _trace_curve(partner, k)
            if curve is not None:
                yield _splice(d, old, mult, curve)


def _trace_curve(partner, k):
    # walk from the first point: cross to the other side, follow the chord
    start = min(partner)
    e, j, s = start
    seq = []
    pos = (e, j, s)
    while True:
        e, j, s = pos
        seq.append((e, j, s))
        pos = partner[(e, j, 1 - s)]
        if pos[:2] == start[:2]:
            break
        if len(seq) > k:
            return None
    return seq if len(seq) == k else None


def _splice(d, old, mult, curve):
    n0 = d.n_crossings
    emb = d.embedding
    label = {}
    for idx, (e, j, _) in enumerate(curve):
        label[(e, j)] = n0 + idx + 1
    comps, v = [], 0
    for comp in old:
        seq = []
        for x in comp:
            seq.append(abs(x))
            seq.extend(label[(v, j)] for j in range(mult[v]))
            v += 1
        comps.append(seq)
    new = [label[(e, j)] for e, j, _ in curve]
    turns = dict(d.turns)
    for e, j, s in curve:
        # arriving from the right side (s=1) means crossing right to left
        turns[label[(e, j)]] = 1 if s == 1 else -1
    del emb
    return comps + [new], turns


def alternate(comps):
    """Signs making every component alternate, or None if impossible.
    Each component gets a phase; crossings force opposite signs."""
    where = {}
    for ci, comp in enumerate(comps):
        for i, lab in enumerate(comp):
            where.setdefault(lab, []).append((ci, i % 2))
    phase = {0: 0}
    adj = {}
    for (a, pa), (b, pb) in where.values():
        # sign of visit (c, i) is (-1)^(phase_c + i); opposite signs needed
        rel = (pa + pb + 1) % 2
        adj.setdefault(a, []).append((b, rel))
        adj.setdefault(b, []).append((a, rel))
    stack = [0]
    while stack:
        a = stack.pop()
        for b, rel in adj.get(a, ()):
            want = phase[a] ^ rel
            if b not in phase:
                phase[b] = want
                stack.append(b)
            elif phase[b] != want:
                return None
    for ci in range(len(comps)):
        phase.setdefault(ci, 0)
    return tuple(tuple(lab if (phase[ci] + i) % 2 else -lab for i, lab in enumerate(comp))
                 for ci, comp in enumerate(comps))


def _alternating_diagram(comps, turns):
    signed = alternate(comps)
    if signed is None:
        return None
    return Diagram(GaussCode(signed), tuple(turns.items()))


def _canonical_shadow(d):
    return str(to_dt_code(d))


@lru_cache(maxsize=None)
def arrangements(n, c):
    """Alternating diagrams of c pairwise-crossing simple closed curves with
    n crossings in total, one per shadow (up to reflection)."""
    if c == 2:
        out = {}
        for p in census_meanders(n, reduce_symmetry=False) if n >= 2 and n % 2 == 0 else ():
            d = close_open_meander(OpenMeander(n, p))
            out.setdefault(_canonical_shadow(d), d)
        return tuple(out[k] for k in sorted(out))
    out = {}
    for n0 in range(2 * (c - 1) * (c - 2) // 2, n - 2 * (c - 1) + 1, 2):
        for base in arrangements(n0, c - 1):
            for comps, turns in insert_closed_curve(base, n - n0):
                d = _alternating_diagram(comps, turns)
                if d is None:
                    continue
                key = _canonical_shadow(d)
                out.setdefault(key, d)
    return tuple(out[k] for k in sorted(out))


def pair_subdiagram(d, i, j):
    """Components i and j alone, keeping only the crossings between them."""
    comps = d.gauss.components
    keep = set()
    for x in comps[i]:
        if any(abs(y) == abs(x) for y in comps[j]):
            keep.add(abs(x))
    sub = tuple(tuple(x for x in comps[t] if abs(x) in keep) for t in (i, j))
    turns = tuple((lab, t) for lab, t in d.turns if lab in keep)
    return Diagram(GaussCode(sub), turns)


def _multi_candidates(n, c):
    """Alternating c-component diagrams from inserting one curve into
    every (c-1)-component arrangement."""
    lo = (c - 1) * (c - 2)
    for n0 in range(max(lo, 2), n - 2 * (c - 1) + 1, 2):
        for base in arrangements(n0, c - 1):
            for comps, turns in insert_closed_curve(base, n - n0):
                d = _alternating_diagram(comps, turns)
                if d is not None:
                    yield d


def _pairs_are_meander_links(d):
    k = d.n_components
    for i in range(k):
        for j in range(i + 1, k):
            sub = pair_subdiagram(d, i, j)
            if sub.n_crossings == 0:
                return False
            if fingerprint(sub) not in _link_fingerprints(sub.n_crossings):
                return False
    return True


def census_multicomponent(n, c, jobs=1):
    """Prime alternating c-component meander links with n crossings: no
    disjoint components, no split pair, every pair a 2-component meander
    link at its own crossing count.  ``jobs`` is accepted for interface
    symmetry; the generator runs in-process."""
    if c < 3:
        raise DomainError("multi-component censuses need c >= 3")
    if n % 2:
        return CensusRow(n, MULTI, c, 0)
    method = _method(n)
    verdict = {}
    classes = {}
    for d in _multi_candidates(n, c):
        flags = analyze(d)
        if not (flags.reduced and flags.prime) or flags.split:
            continue
        fp = fingerprint(d, method)
        ok = verdict.get(fp)
        if ok is None:
            ok = verdict[fp] = _pairs_are_meander_links(d)
        if ok:
            classes.setdefault(fp, []).append(d)
    return _summarize(n, MULTI, c, classes, lambda d: d)


def default_jobs():
    return os.cpu_count() or 1
