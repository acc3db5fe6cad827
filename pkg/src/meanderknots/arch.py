"""Arch configurations (noncrossing matchings on axis feet) and their
decorated Dyck words.

Words use '(' for the left foot of an arc, ')' for the right foot and
'1' for a loose end.
"""
from dataclasses import dataclass

from .errors import MalformedInputError

OPEN, CLOSE, LOOSE = "(", ")", "1"
_RANK = {LOOSE: 0, OPEN: 1, CLOSE: 2}


class DecoratedDyckWord(str):
    """A string over '(' ')' '1' whose parentheses are balanced."""

    def __new__(cls, symbols):
        if not isinstance(symbols, str):
            symbols = "".join(symbols)
        depth = 0
        for ch in symbols:
            if ch == OPEN:
                depth += 1
            elif ch == CLOSE:
                depth -= 1
                if depth < 0:
                    raise MalformedInputError(f"unbalanced Dyck word {symbols!r}")
            elif ch != LOOSE:
                raise MalformedInputError(f"bad symbol {ch!r} in Dyck word")
        if depth:
            raise MalformedInputError(f"unbalanced Dyck word {symbols!r}")
        if symbols.count(LOOSE) > 2:
            raise MalformedInputError("at most two loose ends")
        return super().__new__(cls, symbols)

    @property
    def symbols(self):
        return tuple(self)

    def sort_key(self):
        return tuple(_RANK[c] for c in self)


@dataclass(frozen=True)
class ArchConfiguration:
    n_points: int
    arcs: tuple
    loose_ends: tuple = ()

    def __post_init__(self):
        arcs = tuple(sorted(tuple(sorted(a)) for a in self.arcs))
        object.__setattr__(self, "arcs", arcs)
        object.__setattr__(self, "loose_ends", tuple(sorted(self.loose_ends)))
        feet = [f for a in arcs for f in a] + list(self.loose_ends)
        if sorted(feet) != list(range(1, self.n_points + 1)):
            raise MalformedInputError("every foot must be on exactly one arc or loose")
        if len(self.loose_ends) > 2:
            raise MalformedInputError("at most two loose ends")
        for i, j in arcs:
            for k, l in arcs:
                if i < k < j < l:
                    raise MalformedInputError(f"arcs {(i, j)} and {(k, l)} cross")

    @property
    def closed(self):
        return not self.loose_ends

    def partner(self, foot):
        for i, j in self.arcs:
            if foot == i:
                return j
            if foot == j:
                return i
        return None

    def partners(self):
        """0-based partner array, -1 at loose ends."""
        out = [-1] * self.n_points
        for i, j in self.arcs:
            out[i - 1] = j - 1
            out[j - 1] = i - 1
        return out

    def depth(self, foot):
        """Number of arcs strictly enclosing a foot."""
        return sum(1 for i, j in self.arcs if i < foot < j)

    def exposed(self, foot):
        return self.depth(foot) == 0

    def max_depth(self):
        return max((self.depth(i) + 1 for i, _ in self.arcs), default=0)

    def __str__(self):
        return dyck_encode(self)


def dyck_encode(a):
    word = [LOOSE] * a.n_points
    for i, j in a.arcs:
        word[i - 1] = OPEN
        word[j - 1] = CLOSE
    return DecoratedDyckWord("".join(word))


def dyck_decode(w):
    w = DecoratedDyckWord(w)
    stack, arcs, loose = [], [], []
    for pos, ch in enumerate(w, start=1):
        if ch == OPEN:
            stack.append(pos)
        elif ch == CLOSE:
            arcs.append((stack.pop(), pos))
        else:
            loose.append(pos)
    return ArchConfiguration(len(w), tuple(arcs), tuple(loose))


def dyck_words(n_arcs, loose=0, exposed=False):
    """Decorated Dyck words in canonical order (loose < open < close).

    With ``exposed`` the loose ends are kept at nesting depth 0, which is
    what an open meander needs for its ends to run off to infinity.
    """
    if n_arcs < 0 or loose not in (0, 1, 2):
        raise ValueError("need n_arcs >= 0 and loose in {0,1,2}")
    length = 2 * n_arcs + loose
    buf = []

    def rec(opened, closed, used):
        if len(buf) == length:
            yield "".join(buf)
            return
        depth = opened - closed
        if used < loose and (depth == 0 or not exposed):
            buf.append(LOOSE)
            yield from rec(opened, closed, used + 1)
            buf.pop()
        if opened < n_arcs:
            buf.append(OPEN)
            yield from rec(opened + 1, closed, used)
            buf.pop()
        if closed < opened:
            buf.append(CLOSE)
            yield from rec(opened, closed + 1, used)
            buf.pop()

    yield from rec(0, 0, 0)


def enumerate_arch_configurations(n_arcs, loose=0, exposed=False):
    for w in dyck_words(n_arcs, loose, exposed):
        yield dyck_decode(w)
