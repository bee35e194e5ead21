"""Virtual tangles as Gauss codes and their self-crossing wriggle polynomial.

Typical use::

    from vwriggle import closed_knot, self_crossing_wriggle, polynomial_to_text

    trefoil = closed_knot("O1+ O2+ U1+ U2+")
    polynomial_to_text(self_crossing_wriggle(trefoil))   # 't1 + t1^-1 - 2'
"""

from .codec import (
    GaussSyntaxError, SemanticError, closed_knot, long_knot, parse_polynomial, parse_tangle,
    polynomial_from_json, polynomial_to_json, polynomial_to_text, serialize_tangle,
)
from .errors import (
    BoundaryMismatch, CoefficientOverflow, CupCapForbidden, InvalidDiagram, MoveNotApplicable,
    NotASelfCrossing, OracleMismatch, PartialAssignment, SingularDiagramError, TangleError,
    UnsupportedClosure,
)
from .invariants import (
    SmoothingBipartition, self_crossing_wriggle, smooth_self_crossing, vlk, wriggle_contribution,
    wriggle_number, writhe,
)
from .laurent import LaurentPolynomial
from .moves import (
    Gap, MoveDescriptor, MoveKind, apply_move, enumerate_moves, insertion_gaps, random_string_link,
    random_tangle, random_through_tangle, scramble,
)
from .tangle import (
    Component, ConnectedSumPlan, Crossing, End, Kind, Location, Mixed, Passage, Role, SelfCrossing,
    TangleDiagram, ValidationReport, Violation, classify_crossings, closure, connected_sum,
    from_braid, relabel_canonical, reverse_orientation, validate,
)
from .vassiliev import (
    SingularTangle, Witness, enumerate_singular_tangles, extension, order_witness_search,
    random_singular_tangle, resolve, resolve_partial, rotation_canonical,
)

__version__ = "0.1.0"
