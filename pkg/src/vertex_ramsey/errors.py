"""Exception hierarchy for the vertex-ramsey toolkit."""

from typing import Any, Optional


class VertexRamseyError(Exception):
    """Root of every error raised by this package."""


class MalformedInput(VertexRamseyError, ValueError):
    """Text input (graph6, edge list, CLI graph argument) could not be parsed."""


class InvalidVertex(VertexRamseyError, ValueError):
    """A vertex id is outside 0..n-1."""


class ParamOutOfRange(VertexRamseyError, ValueError):
    """A numeric parameter violates its documented range."""


class UnsupportedPattern(VertexRamseyError, ValueError):
    """The pattern graph is outside what an operation supports."""


class SubsetSpaceTooLarge(VertexRamseyError, ValueError):
    """Exhaustive subset enumeration would exceed the configured cap."""


class TooLarge(VertexRamseyError, ValueError):
    """Input exceeds the exhaustive regime of an operation."""


class NotDegenerate(VertexRamseyError, ValueError):
    """The forest graph is not A-degenerate."""


class IsDegenerate(VertexRamseyError, ValueError):
    """The graph is A-degenerate where a non-degenerate one was required."""


class NotApplicable(VertexRamseyError, ValueError):
    """The hypothesis of the construction fails for the given family."""


class EnumerationTruncated(VertexRamseyError):
    """A copy enumeration hit its limit before the answer was decided."""

    def __init__(self, message: str, limit: Optional[int] = None):
        super().__init__(message)
        self.limit = limit


class SearchBudgetExceeded(VertexRamseyError):
    """A search ran out of nodes; `partial` holds the best result found, if any."""

    def __init__(self, message: str, budget: Optional[int] = None, partial: Any = None):
        super().__init__(message)
        self.budget = budget
        self.partial = partial


class CertificateError(VertexRamseyError):
    """A produced certificate failed its own verifier."""
