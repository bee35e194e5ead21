"""
The self-crossing wriggle polynomial
====================================

"""

from vwriggle import (
    closed_knot, polynomial_to_text, self_crossing_wriggle, smooth_self_crossing,
    wriggle_contribution, writhe,
)

# A virtual knot is just a Gauss code: each crossing id appears once as an
# over passage (O) and once as an under passage (U), with its sign.
trefoil = closed_knot("O1+ O2+ U1+ U2+")
print("writhe:", writhe(trefoil))

# Smoothing a crossing splits the knot into two arcs.  The arc that arrives
# at the under passage is the first component of the smoothed link.
for c in (1, 2):
    part = smooth_self_crossing(trefoil, c)
    print(f"crossing {c}: piece1={list(part.piece1)} piece2={list(part.piece2)}"
          f" W={wriggle_contribution(trefoil, c)}")

# Each crossing contributes sign * (t^W - 1).
print("W(t) =", polynomial_to_text(self_crossing_wriggle(trefoil)))

# The classical trefoil has the same writhe but every W vanishes.
classical = closed_knot("O1+ U2+ O3+ U1+ O2+ U3+")
print("classical trefoil:", polynomial_to_text(self_crossing_wriggle(classical)))

# An asymmetric example: this one can tell the knot from its reverse.
asym = closed_knot("O1+ O2+ U1+ U3+ U2+ O3+")
print("asymmetric knot:", polynomial_to_text(self_crossing_wriggle(asym)))
