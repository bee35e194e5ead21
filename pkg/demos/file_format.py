"""
Tangle files and polynomial output
==================================

"""

from vwriggle import (
    GaussSyntaxError, SemanticError, parse_tangle, polynomial_to_json, polynomial_to_text,
    self_crossing_wriggle, serialize_tangle,
)

text = """tangle
# two strands, ids need not be canonical
long start=T.1 end=B.1 : O7+ O9+   U7+ U9+ O4-
long start=T.2 end=B.2 : U4-
"""
d = parse_tangle(text)
print(serialize_tangle(d), end="")

w = self_crossing_wriggle(d)
print(polynomial_to_text(w))
print(polynomial_to_json(w))

# Malformed text reports where it went wrong
try:
    parse_tangle("tangle\nclosed : O1+ U1\n")
except GaussSyntaxError as err:
    print("syntax:", err)

# Well formed but inconsistent text reports what is wrong
try:
    parse_tangle("tangle\nclosed : O1+ U1- O2+\n")
except SemanticError as err:
    for v in err.report.violations:
        print("semantic:", v)
