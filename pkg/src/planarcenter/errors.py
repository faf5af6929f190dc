"""Exception hierarchy shared by every module."""


class PlanarCenterError(Exception):
    """Base class for all errors raised by this package."""


# graph core
class OutOfRange(PlanarCenterError, IndexError):
    pass


class SelfLoop(PlanarCenterError, ValueError):
    pass


class DuplicateEdge(PlanarCenterError, ValueError):
    pass


class Disconnected(PlanarCenterError):
    pass


class EmptySet(PlanarCenterError, ValueError):
    pass


class NotASubgraphMap(PlanarCenterError, ValueError):
    pass


# embeddings
class BadRotation(PlanarCenterError, ValueError):
    pass


class NonPlanarGenus(PlanarCenterError):
    pass


class NotMaximalPlanar(PlanarCenterError):
    pass


class NotACycle(PlanarCenterError, ValueError):
    pass


# quasi-eccentricity
class NotTriangle(PlanarCenterError, ValueError):
    pass


class InternalInvariantViolation(PlanarCenterError, AssertionError):
    """A proven structural lemma failed on concrete data: this is a bug."""


class UnclassifiableConfiguration(InternalInvariantViolation):
    pass


# criteria / synthesis
class AlphaTooSmall(PlanarCenterError, ValueError):
    pass


class TooLarge(PlanarCenterError):
    pass


class CriterionFails(PlanarCenterError):
    def __init__(self, message: str, failing_vertex: int | None = None):
        super().__init__(message)
        self.failing_vertex = failing_vertex


class CaseDispatchFailure(InternalInvariantViolation):
    pass


class HypothesisViolated(PlanarCenterError):
    pass


class PreconditionFailed(PlanarCenterError):
    pass


# gadgets
class InvalidSpec(PlanarCenterError, ValueError):
    pass


class FaceMismatch(PlanarCenterError, ValueError):
    pass


# enumeration
class TooSmall(PlanarCenterError, ValueError):
    pass


class NoSuchEdge(PlanarCenterError, KeyError):
    pass


class BudgetExceeded(PlanarCenterError):
    pass


# fixtures
class UnknownFixture(PlanarCenterError, KeyError):
    pass


class FixtureFactFailed(PlanarCenterError):
    pass
