"""Exception hierarchy shared by all modules."""


class TangleError(ValueError):
    """Base class for domain errors raised by vwriggle."""


class InvalidDiagram(TangleError):
    """A diagram failed validation where a valid one was required."""

    def __init__(self, report):
        self.report = report
        lines = "; ".join(str(v) for v in report.violations)
        super().__init__(f"invalid diagram: {lines}")


class UnsupportedClosure(TangleError):
    pass


class BoundaryMismatch(TangleError):
    pass


class CupCapForbidden(TangleError):
    pass


class NotASelfCrossing(TangleError):
    pass


class MoveNotApplicable(TangleError):
    pass


class PartialAssignment(TangleError):
    pass


class SingularDiagramError(TangleError):
    """A classical diagram was required but double points are present."""


class CoefficientOverflow(OverflowError):
    """A coefficient or exponent left the signed 64-bit range."""


class OracleMismatch(AssertionError):
    """The two independent computations of a wriggle number disagree.

    This always indicates a bug.
    """
