"""Open meanders and meandric systems.

Conventions.  Feet are numbered 1..n from left to right.  An open meander
is stored by its permutation: the feet in the order the curve meets them.
The curve starts on a loose end below the axis and its first arc lies
above.  For odd n the two ends leave on opposite sides; for even n both
leave below and the curve starts from the leftmost one.
"""
from dataclasses import dataclass
from functools import cached_property, lru_cache

import numpy as np

from . import kernels
from .arch import ArchConfiguration, DecoratedDyckWord, dyck_decode, dyck_encode, dyck_words
from .errors import MalformedInputError, NotAMeanderError


def _side_arcs(p):
    upper = [tuple(sorted(p[k:k + 2])) for k in range(0, len(p) - 1, 2)]
    lower = [tuple(sorted(p[k:k + 2])) for k in range(1, len(p) - 1, 2)]
    return upper, lower


@dataclass(frozen=True)
class OpenMeander:
    order: int
    permutation: tuple

    @cached_property
    def _sides(self):
        return _side_arcs(self.permutation)

    @property
    def upper(self):
        arcs, _ = self._sides
        loose = (self.permutation[-1],) if self.order % 2 else ()
        return ArchConfiguration(self.order, tuple(arcs), loose)

    @property
    def lower(self):
        _, arcs = self._sides
        p = self.permutation
        loose = (p[0],) if self.order % 2 else (p[0], p[-1])
        return ArchConfiguration(self.order, tuple(arcs), loose)

    @property
    def is_knot(self):
        return self.order % 2 == 1

    def words(self):
        return words_from_meander(self)

    def __str__(self):
        return "(" + ",".join(map(str, self.permutation)) + ")"


def parse_permutation(text):
    body = text.strip().strip("()[]")
    try:
        return tuple(int(x) for x in body.replace(" ", "").split(",") if x)
    except ValueError:
        raise MalformedInputError(f"not a permutation: {text!r}") from None


def validate_meander_permutation(p):
    p = tuple(p)
    n = len(p)
    if n == 0 or sorted(p) != list(range(1, n + 1)):
        return False
    if any((a - b) % 2 == 0 for a, b in zip(p, p[1:])):
        return False
    upper, lower = _side_arcs(p)
    for arcs in (upper, lower):
        for i, j in arcs:
            for k, l in arcs:
                if i < k < j < l:
                    return False
    # the two ends must reach infinity without crossing an arc
    start_side = lower
    end_side = upper if n % 2 else lower
    for x, arcs in ((p[0], start_side), (p[-1], end_side)):
        if any(a < x < b for a, b in arcs):
            return False
    return True


def open_meander(p):
    p = tuple(p)
    if not validate_meander_permutation(p):
        raise NotAMeanderError(f"{p} is not a meander permutation")
    return OpenMeander(len(p), p)


def _shape(n):
    """(n_arcs, loose) for the upper and the lower word of order n."""
    if n % 2:
        return ((n - 1) // 2, 1), ((n - 1) // 2, 1)
    return (n // 2, 0), (n // 2 - 1, 2)


@lru_cache(maxsize=None)
def _word_tables(n):
    (ua, ul), (la, ll) = _shape(n)
    up_words = list(dyck_words(ua, ul, exposed=True))
    lo_words = list(dyck_words(la, ll, exposed=True))
    up = np.array([dyck_decode(w).partners() for w in up_words], dtype=np.int64).reshape(-1, n)
    lo = np.array([dyck_decode(w).partners() for w in lo_words], dtype=np.int64).reshape(-1, n)
    start = np.array([w.index("1") for w in lo_words], dtype=np.int64)
    return up_words, lo_words, up, lo, start


def open_meander_array(n):
    """All open meanders of order n as a (count, n) array of 1-based
    permutations, ordered by (upper word, lower word)."""
    if n < 1:
        raise ValueError("order must be >= 1")
    if n == 1:
        return np.ones((1, 1), dtype=np.int8)
    _, _, up, lo, start = _word_tables(n)
    _, perms = kernels.trace_meander_pairs(up, lo, start)
    return perms + 1


def enumerate_open_meanders(n):
    for row in open_meander_array(n):
        yield OpenMeander(n, tuple(int(x) for x in row))


def count_open_meanders(n):
    return len(open_meander_array(n))


def words_from_meander(m):
    return dyck_encode(m.upper), dyck_encode(m.lower)


def meander_from_words(upper, lower):
    up = dyck_decode(DecoratedDyckWord(upper))
    lo = dyck_decode(DecoratedDyckWord(lower))
    n = up.n_points
    if lo.n_points != n:
        raise MalformedInputError("upper and lower words differ in length")
    (_, ul), (_, ll) = _shape(n)
    if len(up.loose_ends) != ul or len(lo.loose_ends) != ll:
        raise NotAMeanderError(
            f"order {n} needs {ul} upper and {ll} lower loose ends, got "
            f"{len(up.loose_ends)} and {len(lo.loose_ends)}")
    for conf in (up, lo):
        if any(not conf.exposed(x) for x in conf.loose_ends):
            raise NotAMeanderError("a loose end is enclosed by an arc")
    pu, pl = up.partners(), lo.partners()
    pos = lo.loose_ends[0] - 1
    perm = [pos + 1]
    for step in range(n - 1):
        nxt = (pu if step % 2 == 0 else pl)[pos]
        if nxt < 0:
            raise NotAMeanderError("the words do not trace a single open curve")
        pos = nxt
        perm.append(pos + 1)
    return OpenMeander(n, tuple(perm))


# ------------------------------------------------------- meandric systems


@dataclass(frozen=True)
class MeandricSystem:
    order: int
    upper: ArchConfiguration
    lower: ArchConfiguration
    loops: tuple

    def __str__(self):
        return f"{dyck_encode(self.upper)} / {dyck_encode(self.lower)}"


def trace_loops(upper, lower, start_order=None):
    """Loops of a superposition of two closed configurations.  Each loop
    starts at its leftmost foot and leaves along the upper arc."""
    pu, pl = upper.partners(), lower.partners()
    n = upper.n_points
    seen = [False] * n
    loops = []
    for first in (range(n) if start_order is None else start_order):
        if seen[first]:
            continue
        loop, pos, up = [], first, True
        while True:
            seen[pos] = True
            loop.append(pos + 1)
            pos = (pu if up else pl)[pos]
            up = not up
            if pos == first:
                break
        loops.append(loop)
    # normalise: leftmost foot first, upper arc first
    norm = []
    for loop in loops:
        k = loop.index(min(loop))
        rot = loop[k:] + loop[:k]
        if upper.partner(rot[0]) != rot[1]:
            rot = [rot[0]] + rot[1:][::-1]
        norm.append(tuple(rot))
    return tuple(sorted(norm))


def meandric_system(upper, lower):
    if isinstance(upper, str):
        upper = dyck_decode(upper)
    if isinstance(lower, str):
        lower = dyck_decode(lower)
    if not (upper.closed and lower.closed) or upper.n_points != lower.n_points:
        raise MalformedInputError("a meandric system needs two closed configurations of equal order")
    return MeandricSystem(upper.n_points, upper, lower, trace_loops(upper, lower))


def enumerate_meandric_systems(n, k):
    if n % 2 or n < 2 or k < 1:
        raise ValueError("need even n >= 2 and k >= 1")
    confs = [dyck_decode(w) for w in dyck_words(n // 2, 0)]
    for u in confs:
        for l in confs:
            loops = trace_loops(u, l)
            if len(loops) == k:
                yield MeandricSystem(n, u, l, loops)
