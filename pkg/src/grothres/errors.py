"""Exception hierarchy.

Errors deriving from :class:`InvariantViolation` signal a broken internal
guarantee (a bug or an unsupported input shape) and map to CLI exit code 3.
"""


class GrothresError(Exception):
    pass


class InvariantViolation(GrothresError):
    pass


class RecursionBudgetExceeded(InvariantViolation):
    """A rewriting loop ran past its configured step budget."""


class ExpansionBudgetExceeded(InvariantViolation):
    pass


class NegativeDPower(InvariantViolation):
    """Kernel expansion left a factor (1 - t_u) with a negative exponent."""


class DecompositionError(InvariantViolation):
    pass


class SegmentIntegrityError(InvariantViolation):
    pass


class HypothesisViolation(InvariantViolation):
    pass


class DimensionError(GrothresError, ValueError):
    pass


class ZeroPolynomial(GrothresError, ValueError):
    pass


class NotSymmetric(GrothresError, ValueError):
    pass


class NotInSpan(GrothresError, ValueError):
    pass
