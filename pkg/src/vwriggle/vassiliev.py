"""Double points, their resolutions and the finite-type extension of the
self-crossing wriggle polynomial.

A singular tangle is an ordinary :class:`TangleDiagram` whose words may
contain ``P``/``Q`` passages.  Resolving a double point positively makes
``P`` the over strand of a positive crossing; resolving it negatively
switches the crossing (``Q`` over, sign -1).  The extension is the
alternating sum over all resolutions.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from typing import Iterator, Mapping

from .errors import PartialAssignment
from .invariants import chord_wriggles, self_crossing_wriggle
from .laurent import LaurentPolynomial
from .tangle import (
    Component, Passage, Role, TangleDiagram, _trusted, relabel_canonical, require_valid,
)

__all__ = [
    "SingularTangle", "resolve", "resolve_partial", "extension",
    "enumerate_singular_tangles", "random_singular_tangle", "Witness",
    "order_witness_search", "rotation_canonical",
]

SingularTangle = TangleDiagram


def resolve_partial(s: SingularTangle, assignment: Mapping[int, int]) -> SingularTangle:
    """Resolve the double points named in ``assignment``; others are kept."""
    require_valid(s)
    dps = s.double_points
    for cid, eps in assignment.items():
        if cid not in dps:
            raise PartialAssignment(f"{cid} is not a double point")
        if eps not in (1, -1):
            raise PartialAssignment(f"resolution of {cid} must be +1 or -1, got {eps}")
    swap = {Role.P: Role.OVER, Role.Q: Role.UNDER}
    switch = {Role.P: Role.UNDER, Role.Q: Role.OVER}
    comps = []
    for comp in s.components:
        passages = []
        for cid, role in comp.passages:
            eps = assignment.get(cid)
            if eps is not None:
                role = (swap if eps > 0 else switch)[role]
            passages.append(Passage(cid, role))
        comps.append(comp._with_clean(tuple(passages)))
    signs = dict(s.signs)
    signs.update(assignment)
    return _trusted(TangleDiagram(tuple(comps), signs))


def resolve(s: SingularTangle, assignment: Mapping[int, int]) -> TangleDiagram:
    missing = set(s.double_points) - set(assignment)
    if missing:
        raise PartialAssignment(f"no resolution given for double points {sorted(missing)}")
    return resolve_partial(s, assignment)


_RESOLVED = {(1, "P"): "O", (1, "Q"): "U", (-1, "P"): "U", (-1, "Q"): "O"}


def _direct_extension(s: SingularTangle) -> LaurentPolynomial:
    words = [[(cid, role.value) for cid, role in c.passages] for c in s.components]
    ids = sorted({cid for w in words for cid, r in w if r == "P"})
    acc: dict = {}
    for eps in itertools.product((1, -1), repeat=len(ids)):
        weight = 1
        for e in eps:
            weight *= e
        choice = dict(zip(ids, eps))
        signs = {**s.signs, **choice}
        for ci, word in enumerate(words):
            resolved = [(cid, _RESOLVED[choice[cid], r]) if cid in choice else (cid, r)
                        for cid, r in word]
            for sign, w in chord_wriggles(resolved, signs):
                if w:
                    mono = ((ci + 1, w),)
                    acc[mono] = acc.get(mono, 0) + weight * sign
                    acc[()] = acc.get((), 0) - weight * sign
    return LaurentPolynomial._from_clean(acc)


def extension(s: SingularTangle, verify: bool = True) -> LaurentPolynomial:
    """Sum over all resolutions e of prod(e) * W_sc(resolve(s, e)).

    With ``verify`` each resolution is built as a diagram and evaluated with
    the cross-checked wriggle numbers; without it the chord counts are run
    directly on the resolved words, which is what exhaustive sweeps use.
    """
    ids = sorted(require_valid(s).double_points)
    if not verify:
        return _direct_extension(s)
    total = LaurentPolynomial()
    for eps in itertools.product((1, -1), repeat=len(ids)):
        sign = 1
        for e in eps:
            sign *= e
        w = self_crossing_wriggle(resolve(s, dict(zip(ids, eps))), verify=verify)
        total = total + w if sign > 0 else total - w
    return total


def _matchings(slots: list[int]) -> Iterator[list[tuple[int, int]]]:
    if not slots:
        yield []
        return
    first, rest = slots[0], slots[1:]
    for k, mate in enumerate(rest):
        for tail in _matchings(rest[:k] + rest[k + 1:]):
            yield [(first, mate)] + tail


def _compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    if parts == 1:
        yield (total,)
        return
    for head in range(total + 1):
        for tail in _compositions(total - head, parts - 1):
            yield (head,) + tail


def enumerate_singular_tangles(classical: int, singular: int,
                               components: int = 1) -> Iterator[SingularTangle]:
    """Every closed-component diagram with the given numbers of crossings.

    Chords are numbered by their first slot, so outputs are canonically
    labelled; rotations of a closed word are not identified.
    """
    k = classical + singular
    slots = list(range(2 * k))
    shell = Component.closed()
    for sizes in _compositions(2 * k, components):
        owner, pos = [], []
        for ci, size in enumerate(sizes):
            owner.extend([ci] * size)
            pos.extend(range(size))
        for matching in _matchings(slots):
            for sing in itertools.combinations(range(k), singular):
                sing = set(sing)
                choices = [((Role.P, Role.Q), (Role.Q, Role.P)) if c in sing else
                           tuple(itertools.product(
                               ((Role.OVER, Role.UNDER), (Role.UNDER, Role.OVER)), (1, -1)))
                           for c in range(k)]
                for pick in itertools.product(*choices):
                    words = [[None] * size for size in sizes]
                    signs = {}
                    for c, ((a, b), choice) in enumerate(zip(matching, pick)):
                        if c in sing:
                            ra, rb = choice
                        else:
                            (ra, rb), signs[c + 1] = choice
                        words[owner[a]][pos[a]] = Passage(c + 1, ra)
                        words[owner[b]][pos[b]] = Passage(c + 1, rb)
                    comps = tuple(shell._with_clean(tuple(w)) for w in words)
                    yield _trusted(TangleDiagram(comps, signs))


def random_singular_tangle(components: int, classical: int, singular: int,
                           seed: int) -> SingularTangle:
    """Random closed-component diagram with the given crossing counts."""
    rng = random.Random(seed)
    k = classical + singular
    owner = [rng.randrange(components) for _ in range(2 * k)]
    order = list(range(2 * k))
    rng.shuffle(order)
    chords = list(range(k))
    rng.shuffle(chords)
    sing = set(chords[:singular])
    tokens: list = [None] * (2 * k)
    signs = {}
    for c in range(k):
        a, b = order[2 * c], order[2 * c + 1]
        if c in sing:
            tokens[a], tokens[b] = Passage(c + 1, Role.P), Passage(c + 1, Role.Q)
        else:
            tokens[a], tokens[b] = Passage(c + 1, Role.OVER), Passage(c + 1, Role.UNDER)
            signs[c + 1] = rng.choice((1, -1))
    words = [[] for _ in range(components)]
    for slot, ci in enumerate(owner):
        words[ci].append(tokens[slot])
    comps = tuple(Component.closed(w) for w in words)
    return relabel_canonical(TangleDiagram(comps, signs))


def rotation_canonical(diagram: TangleDiagram) -> TangleDiagram:
    """Representative of a diagram up to rotating its closed words.

    Among all rotations, picks the one whose canonically relabelled token
    sequence is smallest.
    """
    options = []
    for comp in diagram.components:
        n = len(comp)
        shifts = range(n) if comp.is_closed and n else range(1)
        options.append([comp.passages[r:] + comp.passages[:r] for r in shifts])
    signs = diagram.signs
    best_key, best_words = None, None
    for words in itertools.product(*options):
        mapping: dict[int, int] = {}
        key = []
        for word in words:
            for cid, role in word:
                new = mapping.setdefault(cid, len(mapping) + 1)
                key.append((new, role.value, signs.get(cid, 0)))
            key.append((0, "", 0))
        key = tuple(key)
        if best_key is None or key < best_key:
            best_key, best_words = key, words
    comps = tuple(c.with_passages(w) for c, w in zip(diagram.components, best_words))
    return relabel_canonical(TangleDiagram(comps, signs))


@dataclass(frozen=True)
class Witness:
    tangle: SingularTangle
    extension: LaurentPolynomial


def order_witness_search(max_classical: int, max_components: int = 1,
                         seed: int | None = None, samples: int = 2000) -> list[Witness]:
    """Tangles with one double point whose extension is nonzero.

    Exhaustive up to ``max_classical`` classical crossings when ``seed`` is
    None, otherwise ``samples`` seeded random candidates.  Results are
    deduplicated up to rotation and sorted by crossing count, then text.
    """
    from .codec import serialize_tangle

    if max_classical < 0 or max_components < 1:
        raise ValueError("bounds must be non-negative with at least one component")

    def candidates():
        if seed is None:
            for comps in range(1, max_components + 1):
                for n in range(max_classical + 1):
                    yield from enumerate_singular_tangles(n, 1, comps)
        else:
            rng = random.Random(seed)
            for _ in range(samples):
                yield random_singular_tangle(rng.randint(1, max_components),
                                             rng.randint(0, max_classical), 1,
                                             rng.getrandbits(64))

    found = {}
    for cand in candidates():
        ext = extension(cand, verify=False)
        if ext.is_zero():
            continue
        rep = rotation_canonical(cand)
        text = serialize_tangle(rep)
        if text not in found:
            found[text] = Witness(rep, ext)
    return [found[t] for t in sorted(found, key=lambda t: (len(found[t].tangle.ids), t))]
