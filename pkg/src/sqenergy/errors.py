"""Exception taxonomy shared across the package."""


class SqEnergyError(Exception):
    """Base class for all errors raised by this package."""


# --- input parsing ---

class MalformedLine(SqEnergyError):
    pass


class SelfLoop(SqEnergyError):
    pass


class DuplicateEdge(SqEnergyError):
    pass


class LabelOutOfRange(SqEnergyError):
    pass


class BadHeader(SqEnergyError):
    pass


class TruncatedPayload(SqEnergyError):
    pass


# --- graph structure ---

class NotUnicyclic(SqEnergyError):
    pass


class NotConnected(NotUnicyclic):
    pass


class WrongEdgeCount(NotUnicyclic):
    pass


class VertexOutOfRange(SqEnergyError):
    pass


class BadParameters(SqEnergyError):
    pass


class TooLarge(SqEnergyError):
    pass


# --- numerics ---

class NoConvergence(SqEnergyError):
    def __init__(self, message, error_estimate=None):
        super().__init__(message)
        self.error_estimate = error_estimate


class NonpositiveT(SqEnergyError):
    pass


class OddK(SqEnergyError):
    pass
