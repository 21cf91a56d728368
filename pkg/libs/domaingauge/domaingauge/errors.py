"""Exception hierarchy for domaingauge.

Input problems derive from ``RepresentationError`` (also a ``ValueError``) so
callers can map them to a single "bad input" outcome. A failed internal
certificate check raises ``InvariantViolationError`` instead; it signals a bug,
never a property of the input.
"""


class DomainGaugeError(Exception):
    """Base class for all domaingauge errors."""


class RepresentationError(DomainGaugeError, ValueError):
    """Input is malformed or outside the supported representation class."""


class UnsupportedTailError(RepresentationError):
    """A tail form has no closed form under the requested operation."""


class UnsupportedSpectrumError(RepresentationError):
    """A spectrum has no representable eigenvalue enumeration."""


class UnsupportedInfPatternError(RepresentationError):
    """Infinitely many INF entries that do not form a Const(INF) tail."""


class NotInX0Error(RepresentationError):
    """A dimension sequence has a finite total sum."""


class IndexSchemeMismatchError(RepresentationError):
    """Two diagonal operators are declared over different index schemes."""

    def __init__(self, left: str, right: str) -> None:
        """Record both scheme identifiers."""
        super().__init__(f"Index schemes differ: {left!r} vs {right!r}")
        self.left = left
        self.right = right


class DimensionMismatchError(RepresentationError):
    """Matrices or truncated operators have incompatible shapes."""


class InvariantViolationError(DomainGaugeError, RuntimeError):
    """A derived certificate failed its own verification."""
