"""Acceptance criteria, one test each.

Every test prints a ``PASS``/``FAIL`` line (visible with ``pytest -s`` or in
``-v`` runs through the terminal reporter) and then asserts.  Running this
file directly prints the same lines without pytest.
"""

import random
import sys
import time

import pytest

from vwriggle import (
    closed_knot, closure, connected_sum, enumerate_singular_tangles, extension, from_braid,
    long_knot, order_witness_search, parse_polynomial, parse_tangle, polynomial_to_text,
    random_singular_tangle, random_string_link, random_tangle, random_through_tangle,
    reverse_orientation, scramble, self_crossing_wriggle, serialize_tangle, smooth_self_crossing,
    wriggle_contribution, wriggle_number,
)
from vwriggle.invariants import _chord_count_wriggle, _constructive_wriggle

VT = "O1+ O2+ U1+ U2+"


def seeds(label, n):
    rng = random.Random(label)
    return [rng.getrandbits(64) for _ in range(n)]


def random_small(seed, max_crossings=8, max_components=3):
    rng = random.Random(seed)
    total = rng.randint(1, max_components)
    closed = rng.randint(0, total)
    return random_tangle(closed, total - closed, rng.randint(0, max_crossings), seed)


def c1():
    d = closed_knot(VT)
    best = min(_timed(lambda: self_crossing_wriggle(d)) for _ in range(5))
    ok = self_crossing_wriggle(d) == parse_polynomial("t1 + t1^-1 - 2") and best < 1e-3
    return ok, f"{polynomial_to_text(self_crossing_wriggle(d))} in {best * 1e3:.3f} ms"


def _timed(f):
    t = time.perf_counter()
    f()
    return time.perf_counter() - t


def c2():
    d = closed_knot(VT)
    got = sorted(wriggle_contribution(d, c) for c in (1, 2))
    return got == [-1, 1], f"contributions {got}"


def c3():
    start = time.perf_counter()
    failures = 0
    for seed in seeds("invariance", 500):
        d = random_small(seed)
        if self_crossing_wriggle(scramble(d, 20, seed)) != self_crossing_wriggle(d):
            failures += 1
    elapsed = time.perf_counter() - start
    return failures == 0 and elapsed < 30, f"{failures} changed of 500, {elapsed:.1f} s"


def c4():
    checked = mismatches = 0
    for seed in seeds("oracle", 1000):
        d = random_small(seed, max_crossings=10)
        for cid, cr in d.crossings.items():
            if cr.is_self:
                part = smooth_self_crossing(d, cid)
                checked += 1
                if _constructive_wriggle(d, part) != _chord_count_wriggle(d, part):
                    mismatches += 1
    return mismatches == 0, f"{checked} self-crossings, {mismatches} mismatches"


def c5():
    exhaustive = nonzero = 0
    for comps in (1, 2):
        for classical in range(3):
            for s in enumerate_singular_tangles(classical, 2, comps):
                exhaustive += 1
                if not extension(s, verify=False).is_zero():
                    nonzero += 1
    for seed in seeds("order", 500):
        rng = random.Random(seed)
        s = random_singular_tangle(rng.randint(1, 3), rng.randint(0, 6), 2, seed)
        if not extension(s).is_zero():
            nonzero += 1
    return nonzero == 0, f"{exhaustive} exhaustive + 500 random, {nonzero} nonzero"


def c6():
    witnesses = order_witness_search(3, 1)
    target = parse_polynomial("t1^2 - 1")
    attained = any(w.extension == target for w in witnesses)
    values = sorted({polynomial_to_text(w.extension) for w in witnesses})
    detail = (f"{len(witnesses)} witnesses, values {values}; "
              f"t1^2 - 1 {'attained' if attained else 'not attained'} at bound 3")
    return len(witnesses) >= 1, detail


def c7():
    bad = 0
    for seed in seeds("reverse", 200):
        d = random_small(seed)
        w = self_crossing_wriggle(d)
        for i in range(len(d.components)):
            if self_crossing_wriggle(reverse_orientation(d, i)) != w.invert_variable(i + 1):
                bad += 1
    return bad == 0, f"{bad} failures"


def is_string_link(d):
    return all(not c.is_closed and c.start.side == "T" and c.end.side == "B"
               and c.start.position == c.end.position for c in d.components)


def c8():
    bad = 0
    pair_seeds = seeds("additivity", 400)
    for s1, s2 in zip(pair_seeds[::2], pair_seeds[1::2]):
        n = random.Random(s1).randint(1, 3)
        T, U = random_string_link(n, s1 % 7, s1), random_string_link(n, s2 % 7, s2)
        total = self_crossing_wriggle(T) + self_crossing_wriggle(U)
        if not (self_crossing_wriggle(connected_sum(T, U)[0]) == total
                == self_crossing_wriggle(connected_sum(U, T)[0])):
            bad += 1
    rng = random.Random("additivity-general")
    general = 0
    while general < 50:
        s1, s2 = rng.getrandbits(64), rng.getrandbits(64)
        n = rng.randint(1, 3)
        T = random_through_tangle(n, rng.randint(0, 8), s1, closed=rng.randint(0, 1))
        if is_string_link(T):
            continue
        top = ["in" if e.direction == "out" else "out" for e in T.bottom]
        U = random_through_tangle(n, rng.randint(0, 8), s2, closed=rng.randint(0, 1), top=top)
        general += 1
        d, plan = connected_sum(T, U)
        expected = (self_crossing_wriggle(T).rename(plan.t_variables())
                    + self_crossing_wriggle(U).rename(plan.u_variables()))
        if self_crossing_wriggle(d) != expected:
            bad += 1
    return bad == 0, f"200 string-link pairs + 50 general pairs, {bad} failures"


def c9():
    bad = 0
    for seed in seeds("closure", 200):
        d = random_tangle(0, 1, seed % 9, seed)
        if self_crossing_wriggle(closure(d)) != self_crossing_wriggle(d):
            bad += 1
    return bad == 0, f"{bad} failures"


def c10():
    named = [closed_knot("O1+ U2+ O3+ U1+ O2+ U3+"), from_braid([1, -2, 1, -2], 3)]
    bad = sum(1 for d in named if not self_crossing_wriggle(d).is_zero())
    unknot = long_knot("")
    pair_seeds = seeds("classical", 200)
    for s1, s2 in zip(pair_seeds[::2], pair_seeds[1::2]):
        T, U = scramble(unknot, 15, s1), scramble(unknot, 15, s2)
        if not self_crossing_wriggle(connected_sum(T, U)[0]).is_zero():
            bad += 1
    return bad == 0, f"trefoil, figure-eight and 100 sums, {bad} nonzero"


def c11():
    bad = 0
    for seed in seeds("antisymmetry", 500):
        rng = random.Random(seed)
        closed = rng.randint(0, 2)
        d = random_tangle(closed, 2 - closed, rng.randint(0, 8), seed)
        if wriggle_number(d, 0, 1) != -wriggle_number(d, 1, 0):
            bad += 1
    return bad == 0, f"{bad} failures"


def c12():
    count = bad = 0
    for seed in seeds("normalization", 500):
        d = random_small(seed)
        for e in (d, scramble(d, 10, seed)):
            count += 1
            if self_crossing_wriggle(e).eval_ones() != 0:
                bad += 1
    for seed in seeds("normalization-links", 200):
        T = random_string_link(2, seed % 6, seed)
        count += 1
        if self_crossing_wriggle(connected_sum(T, T)[0]).eval_ones() != 0:
            bad += 1
    return bad == 0, f"{count} diagrams, {bad} failures"


def c13():
    bad = 0
    for seed in seeds("codec", 1000):
        d = random_small(seed, max_crossings=12)
        text = serialize_tangle(d)
        back = parse_tangle(text)
        if serialize_tangle(back) != text or back != d:
            bad += 1
    return bad == 0, f"{bad} mismatches"


CRITERIA = [
    (1, "golden polynomial of the virtualized trefoil", c1),
    (2, "per-crossing wriggle numbers", c2),
    (3, "invariance under 20-move scrambles", c3),
    (4, "smoothing and chord-count oracles agree", c4),
    (5, "extension vanishes on two double points", c5),
    (6, "nonzero one-double-point witness", c6),
    (7, "orientation reversal inverts the variable", c7),
    (8, "additivity under connected sum", c8),
    (9, "long knot equals its closure", c9),
    (10, "classical diagrams give zero", c10),
    (11, "wriggle number antisymmetry", c11),
    (12, "value at all ones is zero", c12),
    (13, "codec round trip", c13),
]


def report(number, title, check):
    ok, detail = check()
    line = f"{'PASS' if ok else 'FAIL'} criterion {number:2d}: {title} ({detail})"
    return ok, line


@pytest.mark.parametrize("number, title, check", CRITERIA, ids=[f"c{n}" for n, _, _ in CRITERIA])
def test_criterion(number, title, check, capsys):
    ok, line = report(number, title, check)
    with capsys.disabled():
        print("\n" + line)
    assert ok, line


if __name__ == "__main__":
    results = [report(*c) for c in CRITERIA]
    for _, line in results:
        print(line)
    sys.exit(0 if all(ok for ok, _ in results) else 1)
