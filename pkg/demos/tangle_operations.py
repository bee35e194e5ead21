"""
Reversal, closure and connected sums
====================================

"""

from vwriggle import (
    closed_knot, closure, connected_sum, long_knot, polynomial_to_text, random_string_link,
    reverse_orientation, self_crossing_wriggle, serialize_tangle,
)

show = lambda d: polynomial_to_text(self_crossing_wriggle(d))  # noqa: E731

# Reversing a component inverts its variable.
asym = closed_knot("O1+ O2+ U1+ U3+ U2+ O3+")
print("K       :", show(asym))
print("reversed:", show(reverse_orientation(asym, 0)))

# A long knot and its closure agree.
long_trefoil = long_knot("O1+ O2+ U1+ U2+")
print("long    :", show(long_trefoil))
print("closed  :", show(closure(long_trefoil)))

# Stacking two long knots adds their polynomials.
doubled, plan = connected_sum(long_trefoil, long_trefoil)
print(serialize_tangle(doubled), end="")
print("sum     :", show(doubled), " sigma:", dict(plan.sigma))

# For string links the order of stacking does not matter.
T, U = random_string_link(2, 6, seed=3), random_string_link(2, 6, seed=4)
print("T # U   :", show(connected_sum(T, U)[0]))
print("U # T   :", show(connected_sum(U, T)[0]))
print("W(T)+W(U):", polynomial_to_text(self_crossing_wriggle(T) + self_crossing_wriggle(U)))
