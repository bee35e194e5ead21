import math
import random

import pytest
from hypothesis import settings, strategies as st

from vwriggle import Component, TangleDiagram, random_tangle
from vwriggle.tangle import Passage, Role

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

seeds = st.integers(min_value=0, max_value=2 ** 64 - 1)


@st.composite
def diagrams(draw, max_closed=2, max_long=2, max_crossings=8):
    closed = draw(st.integers(0 if max_long else 1, max_closed))
    long = draw(st.integers(0 if closed else 1, max_long))
    n = draw(st.integers(0, max_crossings))
    return random_tangle(closed, long, n, draw(seeds))


VT = "O1+ O2+ U1+ U2+"          # virtualized trefoil
ASYM = "O1+ O2+ U1+ U3+ U2+ O3+"
CLASSICAL_TREFOIL = "O1+ U2+ O3+ U1+ O2+ U3+"


@pytest.fixture
def rng():
    return random.Random(20261015)


# -- geometric model of a Reidemeister III triangle ----------------------------
#
# Three straight oriented lines at heights top > middle > bottom.  Their
# pairwise intersections are x = top/middle, y = top/bottom, z = middle/bottom.
# Sliding the top line across z realizes the move, and reverses the order of
# the two crossings along every line while keeping all signs.

def _cross(u, v):
    return u[0] * v[1] - u[1] * v[0]


def _meet(p, u, q, v):
    """Parameters (s, t) with p + s u = q + t v."""
    det = _cross(u, v)
    d = (q[0] - p[0], q[1] - p[1])
    return _cross(d, v) / det, _cross(d, u) / det


def random_triangle(rng):
    """Random generic line triple.

    Returns (signs, orders): ``signs`` for (x, y, z) and ``orders`` telling
    whether x comes before y on top, x before z on middle, y before z on
    bottom.
    """
    while True:
        lines = []
        for _ in range(3):
            a = rng.uniform(0, 2 * math.pi)
            lines.append(((rng.uniform(-1, 1), rng.uniform(-1, 1)), (math.cos(a), math.sin(a))))
        try:
            (top_x, mid_x) = _meet(*lines[0], *lines[1])
            (top_y, bot_y) = _meet(*lines[0], *lines[2])
            (mid_z, bot_z) = _meet(*lines[1], *lines[2])
        except ZeroDivisionError:
            continue
        gaps = [abs(top_x - top_y), abs(mid_x - mid_z), abs(bot_y - bot_z)]
        if min(gaps) < 1e-3:
            continue
        (_, ut), (_, um), (_, ub) = lines

        def sign(over, under):
            return 1 if _cross(over, under) > 0 else -1

        signs = (sign(ut, um), sign(ut, ub), sign(um, ub))
        orders = (top_x < top_y, mid_x < mid_z, bot_y < bot_z)
        return signs, orders


def triangle_words(signs, orders, ids=(1, 2, 3)):
    """The three two-passage words (top, middle, bottom) of a triangle."""
    x, y, z = ids
    top = [Passage(x, Role.OVER), Passage(y, Role.OVER)]
    mid = [Passage(x, Role.UNDER), Passage(z, Role.OVER)]
    bot = [Passage(y, Role.UNDER), Passage(z, Role.UNDER)]
    for word, first in zip((top, mid, bot), orders):
        if not first:
            word.reverse()
    return top, mid, bot, dict(zip(ids, signs))


def triangle_diagram(signs, orders):
    top, mid, bot, sg = triangle_words(signs, orders)
    comps = tuple(Component.long(w, ("T", i), ("B", i)) for i, w in enumerate((top, mid, bot), 1))
    return TangleDiagram(comps, sg)


def plant_triangle(d, signs, orders, rng):
    """Insert a triangle's three words at random gaps of ``d``."""
    base = d.max_id
    top, mid, bot, sg = triangle_words(signs, orders, (base + 1, base + 2, base + 3))
    at = {}
    for word in (top, mid, bot):
        ci = rng.randrange(len(d.components))
        k = rng.randint(0, len(d.components[ci]))
        at.setdefault((ci, k), []).extend(word)
    comps = []
    for ci, c in enumerate(d.components):
        out = []
        for k in range(len(c) + 1):
            out.extend(at.get((ci, k), ()))
            if k < len(c):
                out.append(c.passages[k])
        comps.append(c.with_passages(out))
    comps = tuple(comps)
    return TangleDiagram(comps, {**d.signs, **sg}), (base + 1, base + 2, base + 3)
