"""Exception hierarchy.

Domain errors (bad input, unmet preconditions) derive from ``DomainError``.
Defect errors derive from ``DefectError``: they mean a guaranteed structural
property failed to hold, so either the implementation or the underlying
mathematics is wrong.  The CLI maps the two families to different exit codes.
"""

from __future__ import annotations


class WntdomError(Exception):
    """Base class for every error raised by this package."""


class DomainError(WntdomError):
    pass


class DefectError(WntdomError):
    pass


# -- plane graph construction and editing ---------------------------------


class GraphFormatError(DomainError):
    """Malformed serialized graph."""


class AsymmetricRotation(DomainError):
    pass


class EulerViolation(DomainError):
    pass


class OuterDartMissing(DomainError):
    pass


class MultiEdgeOrLoop(DomainError):
    pass


class VertexNotPresent(DomainError):
    pass


class EmbeddingAmbiguity(DomainError):
    """A component has no (or more than one) unbounded face after an edit."""


class NotABlock(DomainError):
    pass


# -- predicates and lemma operations --------------------------------------


class NotWnt(DomainError):
    pass


class NotTriangulation(DomainError):
    pass


class NotNearTriangulation(DomainError):
    pass


class PreconditionViolated(DomainError):
    pass


class StaleStep(DomainError):
    pass


class NoCenterFound(DomainError):
    pass


class UnknownFixture(DomainError):
    pass


class BudgetExceeded(DomainError):
    pass


# -- defects ---------------------------------------------------------------


class LemmaViolation(DefectError):
    """A proof-guaranteed conclusion failed verification.

    ``graph`` holds the offending graph (when available) and ``trace`` the
    role bindings collected up to the failure.
    """

    def __init__(self, message: str, graph=None, trace: dict | None = None):
        super().__init__(message)
        self.graph = graph
        self.trace = dict(trace or {})


class ColoringFailed(DefectError):
    pass


class BoundViolation(DefectError):
    pass


class NoDominatorFound(DefectError):
    pass
