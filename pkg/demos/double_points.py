"""
Double points and the order of the invariant
============================================

"""

from collections import Counter

from vwriggle import (
    enumerate_singular_tangles, extension, order_witness_search, parse_tangle,
    polynomial_to_text, resolve, serialize_tangle,
)

# P/Q mark a double point; P is the over strand of the positive resolution.
singular = parse_tangle("tangle\nclosed : O1+ P2* U1+ Q2*\n")
for eps in (1, -1):
    print(f"resolve {eps:+d}:", serialize_tangle(resolve(singular, {2: eps})).splitlines()[1])
print("extension:", polynomial_to_text(extension(singular)))

# With two double points the alternating sum always cancels.
total = nonzero = 0
for s in enumerate_singular_tangles(1, 2, components=2):
    total += 1
    nonzero += not extension(s, verify=False).is_zero()
print(f"{total} diagrams with two double points, {nonzero} nonzero")

# With one double point it does not.  The values found are all of the form
# t^w + t^-w - 2.
witnesses = order_witness_search(2)
print(len(witnesses), "witnesses up to two classical crossings")
print(Counter(polynomial_to_text(w.extension) for w in witnesses))
