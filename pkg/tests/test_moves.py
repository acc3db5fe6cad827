import random

import pytest

from meanderknots.classify import census_meanders
from meanderknots.diagram import Diagram, close_open_meander
from meanderknots.invariants import normalized_bracket
from meanderknots.meander import OpenMeander
from meanderknots.moves import r1, r2, r3, random_moves

CLOSURES = [close_open_meander(OpenMeander(n, p)) for n in (3, 4, 5, 6, 7) for p in census_meanders(n)]
# alternating closures have no R3 site, so start from a few moves away
STARTS = CLOSURES + [random_moves(d, 4, random.Random(i)) for i, d in enumerate(CLOSURES)]


@pytest.mark.parametrize("move,delta", [(r1, 1), (r2, 2), (r3, 0)])
def test_move_preserves_bracket_and_planarity(move, delta):
    rng = random.Random(7)
    done = 0
    for _ in range(300):
        d = rng.choice(STARTS)
        out = move(d, rng)
        if out is None:
            continue
        done += 1
        # rebuilding with the planarity check must succeed
        Diagram(out.gauss, out.turns)
        assert out.n_crossings == d.n_crossings + delta
        assert normalized_bracket(out) == normalized_bracket(d)
    assert done > 50


def test_long_random_walk():
    rng = random.Random(3)
    d = close_open_meander(OpenMeander(5, (1, 2, 3, 4, 5)))
    e = random_moves(d, 60, rng)
    assert normalized_bracket(e) == normalized_bracket(d)


def test_r3_needs_a_triangle():
    hopf = close_open_meander(OpenMeander(2, (1, 2)))
    assert r3(hopf, random.Random(0)) is None
