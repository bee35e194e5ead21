"""
Scrambling a diagram with Reidemeister moves
============================================

"""

from vwriggle import (
    MoveKind, closed_knot, enumerate_moves, polynomial_to_text, relabel_canonical, scramble,
    self_crossing_wriggle, serialize_tangle,
)

trefoil = closed_knot("O1+ O2+ U1+ U2+")

# Thirty random moves, reproducible from the seed.  The trace records
# which moves were applied.
trace = []
big = relabel_canonical(scramble(trefoil, 30, seed=2026, trace=trace))
counts = {kind.value: sum(m.kind is kind for m in trace) for kind in MoveKind}
print("moves used:", counts)
print(serialize_tangle(big), end="")

print("before:", polynomial_to_text(self_crossing_wriggle(trefoil)))
print("after: ", polynomial_to_text(self_crossing_wriggle(big)))

# Deletions and R3 sites can be listed directly
for move in enumerate_moves(big)[:5]:
    print(move.kind.value, move.crossings)
