"""Random Reidemeister moves on diagrams, used to test invariance.

Moves edit the Gauss code and derive the new turns from the face the move
happens in.  A visit crossing another from its left to its right while
being the first visit gives turn +1; swapping roles or reversing a strand
flips it.
"""
import random

from .diagram import Diagram, GaussCode


def _rebuild(d, inserts):
    """Components with new visits inserted after the given visits."""
    comps = d.gauss.components
    out, v = [], 0
    for comp in comps:
        seq = []
        for x in comp:
            seq.append(x)
            seq.extend(inserts.get(v, ()))
            v += 1
        out.append(seq)
    return out


def _first_visit(comps, label):
    for ci, comp in enumerate(comps):
        for i, x in enumerate(comp):
            if abs(x) == label:
                return ci, i


def r1(d, rng):
    """Add a kink on a random edge."""
    emb = d.embedding
    e = rng.randrange(emb.n_edges)
    lab = max(d.gauss.labels(), default=0) + 1
    over_first = rng.random() < 0.5
    inserts = {e: (lab if over_first else -lab, -lab if over_first else lab)}
    comps = _rebuild(d, inserts)
    turns = dict(d.turns)
    turns[lab] = rng.choice((1, -1))
    return Diagram(GaussCode(tuple(map(tuple, comps))), tuple(turns.items()))


def r2(d, rng):
    """Push one edge over another across a shared face; None if no face
    has two distinct edges."""
    emb = d.embedding
    faces = [f for f in emb.face_cycles() if len({x >> 1 for x in f}) >= 2]
    if not faces:
        return None
    face = rng.choice(faces)
    x1, x2 = rng.sample(face, 2)
    e1, e2 = x1 >> 1, x2 >> 1
    if e1 == e2:
        return None
    # a dart arriving at an odd end runs along its edge
    f1, f2 = bool(x1 & 1), bool(x2 & 1)
    base = max(d.gauss.labels(), default=0)
    a, b = base + 1, base + 2
    over = rng.random() < 0.5
    s1 = 1 if over else -1
    # along dart 1 the new crossings come as a, b; along dart 2 as b, a
    on1 = (a, b) if f1 else (b, a)
    on2 = (b, a) if f2 else (a, b)
    inserts = {e1: tuple(s1 * y for y in on1), e2: tuple(-s1 * y for y in on2)}
    comps = _rebuild(d, inserts)
    turns = dict(d.turns)
    for lab, left_to_right in ((a, True), (b, False)):
        # strand 1 crosses strand 2 left to right at a, right to left at b,
        # measured along the darts
        ci, i = _first_visit(comps, lab)
        # strand 1 carries the sign s1 at both new crossings
        strand1_first = (comps[ci][i] > 0) == (s1 > 0)
        t = 1 if left_to_right == strand1_first else -1
        if not f1:
            t = -t
        if not f2:
            t = -t
        turns[lab] = t
    return Diagram(GaussCode(tuple(map(tuple, comps))), tuple(turns.items()))


def r3(d, rng):
    """Slide a strand across a crossing bounding a triangular face; None
    if no triangle allows it."""
    emb = d.embedding
    options = []
    for f in emb.face_cycles():
        if len(f) != 3:
            continue
        edges = [x >> 1 for x in f]
        crossings = {emb.vis_label[e] for e in edges}
        if len(crossings) != 3 or len(set(edges)) != 3:
            continue
        for e in edges:
            v, w = e, emb.next[e]
            if emb.vis_over[v] == emb.vis_over[w]:
                options.append(edges)
                break
    if not options:
        return None
    edges = rng.choice(options)
    comps = [list(c) for c in d.gauss.components]
    where = []
    for ci, comp in enumerate(comps):
        where.extend((ci, i) for i in range(len(comp)))
    moved = list(range(emb.n_edges))
    for e in edges:
        w = emb.next[e]
        (ca, ia), (cb, ib) = where[e], where[w]
        comps[ca][ia], comps[cb][ib] = comps[cb][ib], comps[ca][ia]
        moved[e], moved[w] = w, e
    # each strand keeps its direction, so a turn only flips when a swap
    # across the end of a component changes which visit comes first
    turns = dict(d.turns)
    for c, (v1, v2) in enumerate(emb.visits):
        if moved[v1] > moved[v2]:
            lab = emb.labels[c]
            turns[lab] = -turns[lab]
    return Diagram(GaussCode(tuple(map(tuple, comps))), tuple(turns.items()))


MOVES = (r1, r2, r3)


def random_moves(d, count, rng=None):
    """Apply ``count`` random moves, skipping moves with no valid site."""
    rng = rng or random.Random(0)
    done = 0
    while done < count:
        move = rng.choice(MOVES)
        out = move(d, rng)
        if out is not None:
            d = out
            done += 1
    return d
