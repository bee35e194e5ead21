"""Reidemeister moves on Gauss codes, a seeded scrambler and random diagrams.

Virtual and mixed moves do not change a Gauss code, so only the classical
moves R1, R2 and R3 are modelled.  Positions wrap around on closed
components and never on long ones.

Randomness comes from :class:`random.Random` (MT19937) seeded with the
given 64-bit seed; only ``random()``, ``randrange()``, ``choice()`` and
``shuffle()`` are used, whose output streams are stable across platforms
and CPython versions.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from enum import Enum
from typing import NamedTuple

from .errors import MoveNotApplicable
from .tangle import (
    Component, End, Kind, Location, Passage, Role, TangleDiagram, relabel_canonical,
    require_valid,
)

__all__ = [
    "MoveKind", "Gap", "MoveDescriptor", "enumerate_moves", "insertion_gaps",
    "apply_move", "scramble", "random_tangle", "random_string_link",
    "random_through_tangle",
]

SEED_MAX = 2 ** 64 - 1
INSERT_PROBABILITY = 0.6


class MoveKind(str, Enum):
    R1_INSERT = "R1Insert"
    R1_DELETE = "R1Delete"
    R2_INSERT = "R2Insert"
    R2_DELETE = "R2Delete"
    R3 = "R3"


class Gap(NamedTuple):
    """Insertion point just before ``index`` on ``component``."""

    component: int
    index: int


@dataclass(frozen=True)
class MoveDescriptor:
    """One move instance.

    ``crossings`` names the crossings a deletion removes, or the R3 triple
    ``(x, y, z)`` where ``x`` is top-over-middle, ``y`` top-over-bottom and
    ``z`` middle-over-bottom.  Insertions use ``gaps`` (R2: over strand
    first, then under strand), ``sign`` (R2: sign of the first new crossing)
    and ``order``: ``"OU"``/``"UO"`` for R1, ``"parallel"``/``"antiparallel"``
    for R2.
    """

    kind: MoveKind
    crossings: tuple[int, ...] = ()
    gaps: tuple[Gap, ...] = ()
    sign: int | None = None
    order: str | None = None

    @classmethod
    def r1_insert(cls, gap, sign=1, order="OU"):
        return cls(MoveKind.R1_INSERT, gaps=(Gap(*gap),), sign=sign, order=order)

    @classmethod
    def r2_insert(cls, over_gap, under_gap, sign=1, order="parallel"):
        return cls(MoveKind.R2_INSERT, gaps=(Gap(*over_gap), Gap(*under_gap)),
                   sign=sign, order=order)


def _next(diagram: TangleDiagram, loc: Location) -> Location | None:
    p = diagram.components[loc.component].next_position(loc.position)
    return None if p is None else Location(loc.component, p)


def _orders(diagram: TangleDiagram, first: Location, second: Location) -> set[bool]:
    """Which of ``first -> second`` (True) / ``second -> first`` (False) are adjacent."""
    out = set()
    if first.component == second.component and first != second:
        if _next(diagram, first) == second:
            out.add(True)
        if _next(diagram, second) == first:
            out.add(False)
    return out


def _r3_signs_fit(t_xy: bool, m_xz: bool, b_yz: bool, sx: int, sy: int, sz: int) -> bool:
    # Three straight oriented lines bounding a triangle: once the order of
    # the two crossings along each strand is fixed, the signs are fixed up
    # to a global mirror.
    return (sx * sy == 1) == (m_xz == b_yz) and (sx * sz == 1) == (t_xy == b_yz)


def _r3_fits(diagram: TangleDiagram, x: int, y: int, z: int) -> bool:
    cr = diagram.crossings
    if len({x, y, z}) != 3 or not all(i in cr for i in (x, y, z)):
        return False
    cx, cy, cz = cr[x], cr[y], cr[z]
    t_opts = _orders(diagram, cx.over, cy.over)
    m_opts = _orders(diagram, cx.under, cz.over)
    b_opts = _orders(diagram, cy.under, cz.under)
    return any(
        _r3_signs_fit(t, m, b, cx.sign, cy.sign, cz.sign)
        for t in t_opts for m in m_opts for b in b_opts)


def enumerate_moves(diagram: TangleDiagram) -> list[MoveDescriptor]:
    """All R1/R2 deletion sites and R3 sites, in a deterministic order.

    Insertion points are listed separately by :func:`insertion_gaps`.
    """
    require_valid(diagram)
    cr = diagram.crossings
    moves = []
    seen = set()

    def add(m):
        key = (m.kind, m.crossings)
        if key not in seen:
            seen.add(key)
            moves.append(m)

    pairs = []
    for ci, comp in enumerate(diagram.components):
        for p, q in comp.adjacent_pairs():
            pairs.append((Location(ci, p), Location(ci, q)))

    for a, b in pairs:
        pa, pb = diagram.passage_at(a), diagram.passage_at(b)
        if pa.id == pb.id and pa.id in cr:
            add(MoveDescriptor(MoveKind.R1_DELETE, (pa.id,)))

    for a, b in pairs:
        pa, pb = diagram.passage_at(a), diagram.passage_at(b)
        if pa.role is not Role.OVER or pb.role is not Role.OVER or pa.id == pb.id:
            continue
        d1, d2 = cr[pa.id], cr[pb.id]
        if d1.sign != -d2.sign:
            continue
        unders = _orders(diagram, d1.under, d2.under)
        if unders:
            order = "parallel" if True in unders else "antiparallel"
            add(MoveDescriptor(MoveKind.R2_DELETE, tuple(sorted((d1.id, d2.id))), order=order))

    for a, b in pairs:
        pa, pb = diagram.passage_at(a), diagram.passage_at(b)
        if pa.role is not Role.OVER or pb.role is not Role.OVER or pa.id == pb.id:
            continue
        for x, y in ((pa.id, pb.id), (pb.id, pa.id)):
            ux = cr[x].under
            comp = diagram.components[ux.component]
            neighbours = {_next(diagram, ux)}
            for p, q in comp.adjacent_pairs():
                if q == ux.position:
                    neighbours.add(Location(ux.component, p))
            for nb in neighbours:
                if nb is None:
                    continue
                pz = diagram.passage_at(nb)
                if pz.role is Role.OVER and pz.id not in (x, y) and _r3_fits(diagram, x, y, pz.id):
                    add(MoveDescriptor(MoveKind.R3, (x, y, pz.id)))
    return moves


def insertion_gaps(diagram: TangleDiagram) -> list[Gap]:
    return [Gap(ci, k) for ci, comp in enumerate(diagram.components) for k in comp.gaps()]


def _rebuild(diagram, inserts=None, removed=(), swaps=(), signs=None) -> TangleDiagram:
    """Apply insertions (gap -> passages), removals (ids) and position swaps."""
    inserts = inserts or {}
    words = [list(c.passages) for c in diagram.components]
    for a, b in swaps:
        words[a.component][a.position], words[b.component][b.position] = (
            words[b.component][b.position], words[a.component][a.position])
    comps = []
    for ci, comp in enumerate(diagram.components):
        out = []
        for k in range(len(words[ci]) + 1):
            out.extend(inserts.get((ci, k), ()))
            if k < len(words[ci]) and words[ci][k].id not in removed:
                out.append(words[ci][k])
        comps.append(comp.with_passages(out))
    signs = dict(diagram.signs if signs is None else signs)
    for cid in removed:
        signs.pop(cid, None)
    return TangleDiagram(tuple(comps), signs)


def _check_gap(diagram: TangleDiagram, gap: Gap) -> None:
    ci, k = gap
    if not 0 <= ci < len(diagram.components):
        raise MoveNotApplicable(f"no component {ci}")
    if not 0 <= k <= len(diagram.components[ci]):
        raise MoveNotApplicable(f"gap {k} outside component {ci}")


def apply_move(diagram: TangleDiagram, move: MoveDescriptor) -> TangleDiagram:
    require_valid(diagram)
    kind = MoveKind(move.kind)
    if kind in (MoveKind.R1_DELETE, MoveKind.R2_DELETE, MoveKind.R3):
        present = {(m.kind, m.crossings) for m in enumerate_moves(diagram)}
        if (kind, tuple(move.crossings)) not in present:
            raise MoveNotApplicable(f"{kind.value} {move.crossings} does not apply")
        if kind is MoveKind.R3:
            x, y, z = move.crossings
            cr = diagram.crossings
            swaps = [(cr[x].over, cr[y].over), (cr[x].under, cr[z].over),
                     (cr[y].under, cr[z].under)]
            return _rebuild(diagram, swaps=swaps)
        return _rebuild(diagram, removed=set(move.crossings))

    if move.sign not in (1, -1):
        raise MoveNotApplicable(f"sign must be +1 or -1, got {move.sign}")
    new = diagram.max_id + 1
    signs = dict(diagram.signs)
    if kind is MoveKind.R1_INSERT:
        if len(move.gaps) != 1 or move.order not in ("OU", "UO"):
            raise MoveNotApplicable("R1Insert needs one gap and order OU or UO")
        gap = Gap(*move.gaps[0])
        _check_gap(diagram, gap)
        first, second = (Role.OVER, Role.UNDER) if move.order == "OU" else (Role.UNDER, Role.OVER)
        signs[new] = move.sign
        inserts = {tuple(gap): [Passage(new, first), Passage(new, second)]}
        return _rebuild(diagram, inserts=inserts, signs=signs)

    if len(move.gaps) != 2 or move.order not in ("parallel", "antiparallel"):
        raise MoveNotApplicable("R2Insert needs two gaps and order parallel or antiparallel")
    g_over, g_under = (Gap(*g) for g in move.gaps)
    _check_gap(diagram, g_over)
    _check_gap(diagram, g_under)
    a, b = new, new + 1
    signs[a], signs[b] = move.sign, -move.sign
    over = [Passage(a, Role.OVER), Passage(b, Role.OVER)]
    under = [Passage(a, Role.UNDER), Passage(b, Role.UNDER)]
    if move.order == "antiparallel":
        under.reverse()
    if g_over == g_under:
        inserts = {tuple(g_over): over + under}
    else:
        inserts = {tuple(g_over): over, tuple(g_under): under}
    return _rebuild(diagram, inserts=inserts, signs=signs)


def _rng(seed: int) -> random.Random:
    if not 0 <= seed <= SEED_MAX:
        raise ValueError(f"seed must be an unsigned 64-bit integer, got {seed}")
    return random.Random(seed)


def _random_move(diagram: TangleDiagram, rng: random.Random) -> MoveDescriptor | None:
    found = enumerate_moves(diagram)
    gaps = insertion_gaps(diagram)
    if found and (not gaps or rng.random() >= INSERT_PROBABILITY):
        return rng.choice(found)
    if not gaps:
        return None
    sign = rng.choice((1, -1))
    if rng.random() < 0.5:
        return MoveDescriptor.r1_insert(rng.choice(gaps), sign, rng.choice(("OU", "UO")))
    return MoveDescriptor.r2_insert(rng.choice(gaps), rng.choice(gaps), sign,
                                    rng.choice(("parallel", "antiparallel")))


def scramble(diagram: TangleDiagram, n: int, seed: int,
             trace: list | None = None) -> TangleDiagram:
    """Apply ``n`` random Reidemeister moves, reproducibly for a given seed.

    Applied moves are appended to ``trace`` when one is given.
    """
    require_valid(diagram)
    rng = _rng(seed)
    for _ in range(n):
        move = _random_move(diagram, rng)
        if move is None:
            break
        diagram = apply_move(diagram, move)
        if trace is not None:
            trace.append(move)
    return diagram


def _fill(rng: random.Random, shells: list[Component], crossings: int) -> TangleDiagram:
    """Scatter ``crossings`` random chords over empty components."""
    if crossings < 0:
        raise ValueError("crossing count must be non-negative")
    if crossings and not shells:
        raise ValueError("cannot place crossings on a diagram without components")
    slots = 2 * crossings
    owner = []
    closed = [i for i, c in enumerate(shells) if c.is_closed]
    if slots >= len(closed):
        owner.extend(closed)
    while len(owner) < slots:
        owner.append(rng.randrange(len(shells)))
    rng.shuffle(owner)
    order = list(range(slots))
    rng.shuffle(order)
    roles: list[Passage | None] = [None] * slots
    signs = {}
    for k in range(crossings):
        s1, s2 = order[2 * k], order[2 * k + 1]
        if rng.random() < 0.5:
            s1, s2 = s2, s1
        roles[s1] = Passage(k + 1, Role.OVER)
        roles[s2] = Passage(k + 1, Role.UNDER)
        signs[k + 1] = rng.choice((1, -1))
    words = [[] for _ in shells]
    for slot, ci in enumerate(owner):
        words[ci].append(roles[slot])
    comps = tuple(c.with_passages(w) for c, w in zip(shells, words))
    return relabel_canonical(TangleDiagram(comps, signs))


def random_tangle(closed: int, long: int, crossings: int, seed: int) -> TangleDiagram:
    """Random valid diagram; long ends are scattered over both boundary sides."""
    if closed < 0 or long < 0:
        raise ValueError("component counts must be non-negative")
    rng = _rng(seed)
    sides = [rng.choice("TB") for _ in range(2 * long)]
    counters = {"T": 0, "B": 0}
    ends = []
    for side in sides:
        counters[side] += 1
        ends.append([side, counters[side]])
    for side in "TB":
        picks = [e for e in ends if e[0] == side]
        perm = list(range(1, len(picks) + 1))
        rng.shuffle(perm)
        for e, p in zip(picks, perm):
            e[1] = p
    shells = [Component.closed() for _ in range(closed)]
    shells += [Component(Kind.LONG, (), End(*ends[2 * j]), End(*ends[2 * j + 1]))
               for j in range(long)]
    return _fill(rng, shells, crossings)


def random_string_link(strands: int, crossings: int, seed: int) -> TangleDiagram:
    """Random virtual string link: strand ``i`` runs from top ``i`` to bottom ``i``."""
    rng = _rng(seed)
    shells = [Component.long((), ("T", i), ("B", i)) for i in range(1, strands + 1)]
    return _fill(rng, shells, crossings)


def random_through_tangle(strands: int, crossings: int, seed: int, closed: int = 0,
                          top: list[str] | None = None) -> TangleDiagram:
    """Random tangle whose long strands each join the top to the bottom.

    Strand ``i`` meets the top at position ``i + 1`` and the bottom at a
    random position.  ``top`` fixes the direction (``"in"``/``"out"``) of
    each top position; otherwise directions are random.
    """
    rng = _rng(seed)
    if top is None:
        top = [rng.choice(("in", "out")) for _ in range(strands)]
    if len(top) != strands:
        raise ValueError("need one direction per strand")
    perm = list(range(1, strands + 1))
    rng.shuffle(perm)
    shells = [Component.closed() for _ in range(closed)]
    for i, (direction, b) in enumerate(zip(top, perm), start=1):
        if direction == "in":
            shells.append(Component.long((), ("T", i), ("B", b)))
        else:
            shells.append(Component.long((), ("B", b), ("T", i)))
    return _fill(rng, shells, crossings)
