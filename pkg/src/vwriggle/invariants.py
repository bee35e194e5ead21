"""Writhe, virtual linking numbers, wriggle numbers and the self-crossing
wriggle polynomial.

The wriggle number of a smoothed self-crossing is computed two ways that
share only the split into two arcs: by building the smoothed two-component
diagram and reading its linking numbers, and by counting the chords that
straddle the two arcs.  :func:`wriggle_contribution` insists
that both agree.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import NotASelfCrossing, OracleMismatch, SingularDiagramError
from .laurent import LaurentPolynomial
from .tangle import Component, Kind, Location, TangleDiagram, require_valid

__all__ = [
    "writhe", "vlk", "wriggle_number", "SmoothingBipartition",
    "smooth_self_crossing", "wriggle_contribution", "self_crossing_wriggle",
]


def _classical(diagram: TangleDiagram) -> TangleDiagram:
    require_valid(diagram)
    if diagram.double_points:
        raise SingularDiagramError("resolve double points first")
    return diagram


def _check_component(diagram: TangleDiagram, i: int) -> None:
    if not 0 <= i < len(diagram.components):
        raise IndexError(f"component {i} out of range")


def writhe(diagram: TangleDiagram) -> int:
    return sum(c.sign for c in _classical(diagram).crossings.values())


def vlk(diagram: TangleDiagram, a: int, b: int) -> int:
    """Sum of signs of the crossings where component ``a`` passes over ``b``."""
    _classical(diagram)
    _check_component(diagram, a)
    _check_component(diagram, b)
    if a == b:
        raise ValueError("vlk needs two distinct components")
    return sum(
        c.sign for c in diagram.crossings.values()
        if c.over.component == a and c.under.component == b)


def wriggle_number(diagram: TangleDiagram, a: int, b: int) -> int:
    return vlk(diagram, a, b) - vlk(diagram, b, a)


@dataclass(frozen=True)
class SmoothingBipartition:
    """The two arcs left after smoothing a self-crossing.

    ``piece1`` is the arc that arrives at the under passage (it inherits the
    dot).  Both pieces list passage locations of the original diagram in the
    order they are traversed after smoothing.
    """

    crossing: int
    component: int
    piece1: tuple[Location, ...]
    piece2: tuple[Location, ...]
    kind1: Kind
    kind2: Kind


def smooth_self_crossing(diagram: TangleDiagram, c: int) -> SmoothingBipartition:
    _classical(diagram)
    crossing = diagram.crossings.get(c)
    if crossing is None or not crossing.is_self:
        raise NotASelfCrossing(f"crossing {c} is not a self-crossing")
    ci = crossing.over.component
    comp = diagram.components[ci]
    n = len(comp)
    o, u = crossing.over.position, crossing.under.position
    loc = lambda p: Location(ci, p)  # noqa: E731

    if comp.is_closed:
        # walking forward from the over passage reaches the under passage
        # along the arc that carries the dot
        piece1 = tuple(loc((o + k) % n) for k in range(1, (u - o) % n))
        piece2 = tuple(loc((u + k) % n) for k in range(1, (o - u) % n))
        return SmoothingBipartition(c, ci, piece1, piece2, Kind.CLOSED, Kind.CLOSED)

    first, second = min(o, u), max(o, u)
    middle = tuple(loc(p) for p in range(first + 1, second))
    outer = tuple(loc(p) for p in range(first)) + tuple(loc(p) for p in range(second + 1, n))
    if u == second:
        return SmoothingBipartition(c, ci, middle, outer, Kind.CLOSED, Kind.LONG)
    return SmoothingBipartition(c, ci, outer, middle, Kind.LONG, Kind.CLOSED)


def _smoothed_link(diagram: TangleDiagram, part: SmoothingBipartition) -> TangleDiagram:
    """The two-component diagram L_c, other components and their crossings dropped."""
    keep_ids = [diagram.passage_at(l).id for l in part.piece1 + part.piece2]
    counts = {}
    for cid in keep_ids:
        counts[cid] = counts.get(cid, 0) + 1
    kept = {cid for cid, k in counts.items() if k == 2}

    def build(piece, kind):
        passages = [diagram.passage_at(l) for l in piece]
        passages = [p for p in passages if p.id in kept]
        if kind is Kind.CLOSED:
            return Component.closed(passages)
        return Component.long(passages, ("T", 1), ("B", 1))

    comps = (build(part.piece1, part.kind1), build(part.piece2, part.kind2))
    signs = {cid: diagram.signs[cid] for cid in kept}
    return TangleDiagram(comps, signs)


def _constructive_wriggle(diagram: TangleDiagram, part: SmoothingBipartition) -> int:
    return wriggle_number(_smoothed_link(diagram, part), 0, 1)


def _chord_count_wriggle(diagram: TangleDiagram, part: SmoothingBipartition) -> int:
    inside = set(part.piece1)
    total = 0
    for d in diagram.crossings.values():
        if d.id == part.crossing or not d.is_self or d.over.component != part.component:
            continue
        over_in, under_in = d.over in inside, d.under in inside
        if over_in != under_in:
            total += d.sign if over_in else -d.sign
    return total


def wriggle_contribution(diagram: TangleDiagram, c: int) -> int:
    """Wriggle number of the link obtained by smoothing self-crossing ``c``."""
    part = smooth_self_crossing(diagram, c)
    built = _constructive_wriggle(diagram, part)
    counted = _chord_count_wriggle(diagram, part)
    if built != counted:
        raise OracleMismatch(
            f"crossing {c}: smoothed link gives {built}, chord count gives {counted}")
    return built


def chord_wriggles(word, signs) -> list[tuple[int, int]]:
    """(sign, wriggle) for every chord of one word of ``(id, "O" | "U")`` tokens.

    Chords whose mate is missing from the word are ignored; long words give
    the same numbers as their closure.
    """
    n = len(word)
    over, under = {}, {}
    for pos, (cid, role) in enumerate(word):
        (over if role == "O" else under)[cid] = pos
    chords = [(cid, o, under[cid], signs[cid]) for cid, o in over.items() if cid in under]
    out = []
    for cid, o, u, s in chords:
        span = (u - o) % n
        w = 0
        for did, do, du, ds in chords:
            if did == cid:
                continue
            # inside = strictly after the over passage, before the under one
            oi = 0 < (do - o) % n < span
            ui = 0 < (du - o) % n < span
            if oi != ui:
                w += ds if oi else -ds
        out.append((s, w))
    return out


def self_crossing_wriggle(diagram: TangleDiagram, verify: bool = True) -> LaurentPolynomial:
    """Sum over self-crossings c of component i of sgn(c) (t_i^W(L_c) - 1).

    With ``verify`` every wriggle number goes through
    :func:`wriggle_contribution` and its cross-check; without it a direct
    chord count is used, which is what the exhaustive searches rely on.
    """
    _classical(diagram)
    terms = []
    if verify:
        for cid, cr in sorted(diagram.crossings.items()):
            if not cr.is_self:
                continue
            w = wriggle_contribution(diagram, cid)
            var = cr.over.component + 1
            terms.append((((var, w),), cr.sign))
            terms.append(((), -cr.sign))
        return LaurentPolynomial(terms)
    acc: dict = {}
    for ci, comp in enumerate(diagram.components):
        word = [(cid, role.value) for cid, role in comp.passages]
        for sign, w in chord_wriggles(word, diagram.signs):
            if w:
                mono = ((ci + 1, w),)
                acc[mono] = acc.get(mono, 0) + sign
                acc[()] = acc.get((), 0) - sign
    return LaurentPolynomial._from_clean(acc)
