"""Gauss-code model of oriented virtual tangles.

A diagram is an ordered tuple of components.  Each component is the
sequence of crossing passages met while walking along it in orientation
order; virtual crossings leave no trace.  Classical crossings carry a sign,
stored once per crossing id.  Double points (singular crossings) use the
roles ``P``/``Q`` and carry no sign: ``P`` is the passage that goes over in
the positive resolution.

Component ``i`` of a diagram is paired with the polynomial variable
``t{i+1}``.  Long components record where their two ends sit on the top
(``"T"``) or bottom (``"B"``) side of the tangle box, numbered from 1 left
to right.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from enum import Enum
from functools import cached_property
from typing import Iterable, Iterator, Mapping, NamedTuple

from .errors import BoundaryMismatch, CupCapForbidden, InvalidDiagram, UnsupportedClosure

__all__ = [
    "Role", "Kind", "Passage", "Location", "End", "Component", "Crossing",
    "DoublePoint", "BoundaryEntry", "TangleDiagram", "Violation",
    "ValidationReport", "SelfCrossing", "Mixed", "ConnectedSumPlan",
    "validate", "require_valid", "classify_crossings", "reverse_orientation",
    "closure", "connected_sum", "relabel_canonical", "from_braid",
]


class Role(str, Enum):
    OVER = "O"
    UNDER = "U"
    P = "P"
    Q = "Q"

    @property
    def singular(self) -> bool:
        return self in (Role.P, Role.Q)

    def mate(self) -> Role:
        return _MATES[self]


_MATES = {Role.OVER: Role.UNDER, Role.UNDER: Role.OVER, Role.P: Role.Q, Role.Q: Role.P}


class Kind(str, Enum):
    CLOSED = "closed"
    LONG = "long"


class Passage(NamedTuple):
    id: int
    role: Role


class Location(NamedTuple):
    component: int
    position: int


class End(NamedTuple):
    side: str  # "T" or "B"
    position: int


class BoundaryEntry(NamedTuple):
    component: int
    end: str  # "start" or "end"
    direction: str  # "in" or "out"


@dataclass(frozen=True)
class Component:
    kind: Kind
    passages: tuple[Passage, ...] = ()
    start: End | None = None
    end: End | None = None

    def __post_init__(self):
        object.__setattr__(self, "kind", Kind(self.kind))
        passages = tuple(Passage(int(i), Role(r)) for i, r in self.passages)
        for p in passages:
            if p.id < 1:
                raise ValueError(f"crossing ids must be positive, got {p.id}")
        object.__setattr__(self, "passages", passages)
        if self.kind is Kind.CLOSED:
            if self.start is not None or self.end is not None:
                raise ValueError("closed components have no ends")
        else:
            if self.start is None or self.end is None:
                raise ValueError("long components need both ends")
            for e in (self.start, self.end):
                if e[0] not in ("T", "B") or int(e[1]) < 1:
                    raise ValueError(f"bad boundary end {e!r}")
            object.__setattr__(self, "start", End(self.start[0], int(self.start[1])))
            object.__setattr__(self, "end", End(self.end[0], int(self.end[1])))

    @classmethod
    def closed(cls, passages: Iterable = ()) -> Component:
        return cls(Kind.CLOSED, tuple(passages))

    @classmethod
    def long(cls, passages: Iterable = (), start=("T", 1), end=("B", 1)) -> Component:
        return cls(Kind.LONG, tuple(passages), start, end)

    @property
    def is_closed(self) -> bool:
        return self.kind is Kind.CLOSED

    def __len__(self) -> int:
        return len(self.passages)

    def next_position(self, p: int) -> int | None:
        n = len(self.passages)
        if self.is_closed:
            return (p + 1) % n
        return p + 1 if p + 1 < n else None

    def adjacent_pairs(self) -> Iterator[tuple[int, int]]:
        """Consecutive position pairs, wrapping around for closed components."""
        n = len(self.passages)
        if self.is_closed:
            if n >= 2:
                for p in range(n):
                    yield p, (p + 1) % n
        else:
            for p in range(n - 1):
                yield p, p + 1

    def gaps(self) -> range:
        """Insertion points; gap ``k`` sits just before position ``k``."""
        n = len(self.passages)
        if self.is_closed:
            return range(max(n, 1))
        return range(n + 1)

    def with_passages(self, passages: Iterable) -> Component:
        return Component(self.kind, tuple(passages), self.start, self.end)

    def _with_clean(self, passages: tuple[Passage, ...]) -> Component:
        # hot-path constructor; caller guarantees Passage/Role tuples
        new = object.__new__(Component)
        object.__setattr__(new, "kind", self.kind)
        object.__setattr__(new, "passages", passages)
        object.__setattr__(new, "start", self.start)
        object.__setattr__(new, "end", self.end)
        return new


@dataclass(frozen=True)
class Crossing:
    id: int
    sign: int
    over: Location
    under: Location

    @property
    def is_self(self) -> bool:
        return self.over.component == self.under.component


@dataclass(frozen=True)
class DoublePoint:
    id: int
    p: Location
    q: Location


class SelfCrossing(NamedTuple):
    component: int


class Mixed(NamedTuple):
    a: int
    b: int


# violation categories
MISSING_MATE = "MissingMate"
DUPLICATE_ROLE = "DuplicateRole"
SIGN_INCONSISTENCY = "SignInconsistency"
BOUNDARY_MISMATCH = "BoundaryMismatch"


class Violation(NamedTuple):
    category: str
    message: str
    crossing: int | None = None
    component: int | None = None

    def __str__(self):
        where = []
        if self.crossing is not None:
            where.append(f"crossing={self.crossing}")
        if self.component is not None:
            where.append(f"component={self.component}")
        tag = " ".join([self.category] + where)
        return f"{tag}: {self.message}"


@dataclass(frozen=True)
class ValidationReport:
    violations: tuple[Violation, ...] = ()

    @property
    def ok(self) -> bool:
        return not self.violations

    def categories(self) -> list[str]:
        return [v.category for v in self.violations]


@dataclass(frozen=True)
class TangleDiagram:
    """An oriented virtual tangle, possibly with double points.

    Construction does not validate; call :func:`validate` to get a report or
    :func:`require_valid` to raise on the first problem.
    """

    components: tuple[Component, ...] = ()
    signs: Mapping[int, int] = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "components", tuple(self.components))
        object.__setattr__(self, "signs", {int(k): int(v) for k, v in dict(self.signs).items()})

    def __hash__(self):
        return hash((self.components, tuple(sorted(self.signs.items()))))

    @cached_property
    def _occurrences(self) -> dict[int, list[tuple[Location, Role]]]:
        occ = defaultdict(list)
        for ci, comp in enumerate(self.components):
            for pos, (cid, role) in enumerate(comp.passages):
                occ[cid].append((Location(ci, pos), role))
        return dict(occ)

    @cached_property
    def report(self) -> ValidationReport:
        return validate(self)

    @property
    def ids(self) -> list[int]:
        return sorted(self._occurrences)

    @property
    def max_id(self) -> int:
        return max(self._occurrences, default=0)

    @cached_property
    def crossings(self) -> dict[int, Crossing]:
        require_valid(self)
        out = {}
        for cid, occ in self._occurrences.items():
            roles = {role: loc for loc, role in occ}
            if Role.OVER in roles:
                out[cid] = Crossing(cid, self.signs[cid], roles[Role.OVER], roles[Role.UNDER])
        return out

    @cached_property
    def double_points(self) -> dict[int, DoublePoint]:
        require_valid(self)
        out = {}
        for cid, occ in self._occurrences.items():
            roles = {role: loc for loc, role in occ}
            if Role.P in roles:
                out[cid] = DoublePoint(cid, roles[Role.P], roles[Role.Q])
        return out

    @property
    def is_singular(self) -> bool:
        return any(r.singular for c in self.components for _, r in c.passages)

    def passage_at(self, loc: Location) -> Passage:
        return self.components[loc.component].passages[loc.position]

    def _boundary(self, side: str) -> tuple[BoundaryEntry, ...]:
        slots = []
        for ci, comp in enumerate(self.components):
            if comp.is_closed:
                continue
            if comp.start.side == side:
                slots.append((comp.start.position, BoundaryEntry(ci, "start", "in")))
            if comp.end.side == side:
                slots.append((comp.end.position, BoundaryEntry(ci, "end", "out")))
        return tuple(entry for _, entry in sorted(slots))

    @property
    def top(self) -> tuple[BoundaryEntry, ...]:
        return self._boundary("T")

    @property
    def bottom(self) -> tuple[BoundaryEntry, ...]:
        return self._boundary("B")


def validate(diagram: TangleDiagram) -> ValidationReport:
    """Check pairing, roles, signs and boundary bookkeeping of a diagram."""
    violations = []
    classical = set()
    for cid, occ in sorted(diagram._occurrences.items()):
        roles = sorted(r.value for _, r in occ)
        comp = occ[0][0].component
        if len(occ) == 1:
            violations.append(Violation(MISSING_MATE, f"{roles[0]}{cid} has no mate", cid, comp))
            if roles[0] in "OU":
                classical.add(cid)
        elif len(occ) > 2:
            violations.append(Violation(
                DUPLICATE_ROLE, f"id {cid} appears {len(occ)} times", cid, comp))
        elif roles not in (["O", "U"], ["P", "Q"]):
            violations.append(Violation(
                DUPLICATE_ROLE, f"id {cid} has roles {'/'.join(roles)}", cid, comp))
        elif roles == ["O", "U"]:
            classical.add(cid)
        if len(occ) >= 2 and set(roles) <= {"O", "U"}:
            classical.add(cid)

    for cid in sorted(classical):
        s = diagram.signs.get(cid)
        if s is None:
            violations.append(Violation(SIGN_INCONSISTENCY, "no sign recorded", cid))
        elif s not in (1, -1):
            violations.append(Violation(SIGN_INCONSISTENCY, f"sign {s} is not +1 or -1", cid))
    for cid in sorted(set(diagram.signs) - classical):
        what = "double point" if cid in diagram._occurrences else "absent crossing"
        violations.append(Violation(SIGN_INCONSISTENCY, f"sign recorded for {what}", cid))

    for side in ("T", "B"):
        seen = defaultdict(list)
        for ci, comp in enumerate(diagram.components):
            if comp.is_closed:
                continue
            for e in (comp.start, comp.end):
                if e.side == side:
                    seen[e.position].append(ci)
        for pos, comps in sorted(seen.items()):
            if len(comps) > 1:
                violations.append(Violation(
                    BOUNDARY_MISMATCH, f"{side}.{pos} used {len(comps)} times", None, comps[0]))
        if seen and sorted(seen) != list(range(1, len(seen) + 1)):
            violations.append(Violation(
                BOUNDARY_MISMATCH,
                f"{side} positions {sorted(seen)} are not 1..{len(seen)}"))
    return ValidationReport(tuple(violations))


def _trusted(diagram: TangleDiagram) -> TangleDiagram:
    """Mark a diagram built from valid parts by a validity-preserving step."""
    diagram.__dict__["report"] = ValidationReport()
    return diagram


def require_valid(diagram: TangleDiagram) -> TangleDiagram:
    report = diagram.report
    if not report.ok:
        raise InvalidDiagram(report)
    return diagram


def classify_crossings(diagram: TangleDiagram) -> dict[int, SelfCrossing | Mixed]:
    require_valid(diagram)
    out = {}
    for cid, occ in sorted(diagram._occurrences.items()):
        a, b = occ[0][0].component, occ[1][0].component
        out[cid] = SelfCrossing(a) if a == b else Mixed(min(a, b), max(a, b))
    return out


def _canonical_mapping(diagram: TangleDiagram) -> dict[int, int]:
    mapping = {}
    for comp in diagram.components:
        for cid, _ in comp.passages:
            if cid not in mapping:
                mapping[cid] = len(mapping) + 1
    return mapping


def _renumber(diagram: TangleDiagram, mapping: Mapping[int, int]) -> TangleDiagram:
    comps = tuple(
        c.with_passages((mapping[i], r) for i, r in c.passages) for c in diagram.components)
    signs = {mapping[i]: s for i, s in diagram.signs.items() if i in mapping}
    return TangleDiagram(comps, signs)


def relabel_canonical(diagram: TangleDiagram) -> TangleDiagram:
    """Renumber crossings 1..k in order of first appearance."""
    mapping = _canonical_mapping(diagram)
    if all(k == v for k, v in mapping.items()):
        return diagram
    return _renumber(diagram, mapping)


def reverse_orientation(diagram: TangleDiagram, i: int) -> TangleDiagram:
    """Reverse the orientation of component ``i``.

    Self-crossings of ``i`` keep their sign; mixed crossings touching ``i``
    change sign, and mixed double points touching ``i`` swap ``P``/``Q`` so
    that ``P`` still marks the over strand of the positive resolution.
    """
    require_valid(diagram)
    if not 0 <= i < len(diagram.components):
        raise IndexError(f"component {i} out of range")
    kinds = classify_crossings(diagram)
    flipped = {cid for cid, k in kinds.items() if isinstance(k, Mixed) and i in k}

    comps = []
    for ci, comp in enumerate(diagram.components):
        passages = comp.passages[::-1] if ci == i else comp.passages
        passages = [
            (cid, role.mate()) if role.singular and cid in flipped else (cid, role)
            for cid, role in passages
        ]
        if ci == i:
            comps.append(Component(comp.kind, tuple(passages), comp.end, comp.start))
        else:
            comps.append(comp.with_passages(passages))
    signs = {cid: -s if cid in flipped else s for cid, s in diagram.signs.items()}
    return relabel_canonical(TangleDiagram(tuple(comps), signs))


def closure(diagram: TangleDiagram) -> TangleDiagram:
    """Close up a one-component long diagram."""
    require_valid(diagram)
    if len(diagram.components) != 1 or diagram.components[0].is_closed:
        raise UnsupportedClosure("closure needs exactly one long component")
    comp = diagram.components[0]
    return TangleDiagram((Component.closed(comp.passages),), diagram.signs)


@dataclass(frozen=True)
class ConnectedSumPlan:
    """How the components of ``T`` and ``U`` end up in ``T # U``.

    ``sigma`` maps each glued component of ``T`` to the component of ``U`` it
    joins.  ``t_components``/``u_components`` send every component index of
    the summands to its index in the result, so that variables identified by
    the gluing land on the same result component.  ``provenance`` tells, for
    each crossing of the result, which summand it came from.
    """

    sigma: Mapping[int, int]
    t_components: Mapping[int, int]
    u_components: Mapping[int, int]
    provenance: Mapping[int, str]

    def t_variables(self) -> dict[int, int]:
        return {i + 1: j + 1 for i, j in self.t_components.items()}

    def u_variables(self) -> dict[int, int]:
        return {i + 1: j + 1 for i, j in self.u_components.items()}


def connected_sum(T: TangleDiagram, U: TangleDiagram) -> tuple[TangleDiagram, ConnectedSumPlan]:
    """Stack ``T`` above ``U``, gluing the bottom of ``T`` to the top of ``U``."""
    require_valid(T)
    require_valid(U)
    for name, d, side in (("T", T, "B"), ("U", U, "T")):
        for ci, comp in enumerate(d.components):
            if not comp.is_closed and comp.start.side == side == comp.end.side:
                raise CupCapForbidden(
                    f"component {ci} of {name} has both ends on the glued boundary")
    lower, upper = T.bottom, U.top
    if len(lower) != len(upper):
        raise BoundaryMismatch(f"{len(lower)} bottom ends cannot meet {len(upper)} top ends")
    sigma = {}
    for k, (te, ue) in enumerate(zip(lower, upper), start=1):
        if te.direction == ue.direction:
            raise BoundaryMismatch(f"position {k}: both strands point {te.direction}")
        sigma[te.component] = ue.component

    offset = T.max_id
    U = _renumber(U, {cid: cid + offset for cid in U._occurrences})
    glued_u = set(sigma.values())

    comps, t_map, u_map = [], {}, {}
    for ci, tc in enumerate(T.components):
        t_map[ci] = len(comps)
        if ci not in sigma:
            comps.append(tc)
            continue
        uc = U.components[sigma[ci]]
        u_map[sigma[ci]] = len(comps)
        if tc.end.side == "B":
            comps.append(Component(Kind.LONG, tc.passages + uc.passages, tc.start, uc.end))
        else:
            comps.append(Component(Kind.LONG, uc.passages + tc.passages, uc.start, tc.end))
    for cj, uc in enumerate(U.components):
        if cj not in glued_u:
            u_map[cj] = len(comps)
            comps.append(uc)

    merged = TangleDiagram(tuple(comps), {**T.signs, **U.signs})
    mapping = _canonical_mapping(merged)
    provenance = {new: ("T" if old <= offset else "U") for old, new in mapping.items()}
    plan = ConnectedSumPlan(sigma, t_map, u_map, provenance)
    return _renumber(merged, mapping), plan


def from_braid(word: Iterable[int], strands: int) -> TangleDiagram:
    """Closure of a braid word as a classical link diagram.

    Letter ``k`` (or ``-k``) crosses the strands in positions ``k`` and
    ``k + 1``; for ``k > 0`` the strand moving right goes over and the
    crossing is positive.
    """
    word = list(word)
    at = list(range(strands))  # position -> strand
    seen = [[] for _ in range(strands)]
    signs = {}
    for cid, letter in enumerate(word, start=1):
        k = abs(letter)
        if not 1 <= k < strands:
            raise ValueError(f"generator {letter} needs more than {strands} strands")
        a, b = at[k - 1], at[k]
        over, under = (a, b) if letter > 0 else (b, a)
        seen[over].append((cid, Role.OVER))
        seen[under].append((cid, Role.UNDER))
        signs[cid] = 1 if letter > 0 else -1
        at[k - 1], at[k] = b, a
    final = {s: p for p, s in enumerate(at)}
    comps, done = [], set()
    for s in range(strands):
        if s in done:
            continue
        passages = []
        while s not in done:
            done.add(s)
            passages.extend(seen[s])
            s = final[s]
        comps.append(Component.closed(passages))
    return relabel_canonical(TangleDiagram(tuple(comps), signs))
