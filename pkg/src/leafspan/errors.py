"""Exception types shared across the package."""


class LeafspanError(Exception):
    """Base class for all errors raised by this package."""


class MalformedInput(LeafspanError):
    """Vertex ids out of range, duplicate arcs, self-loops, or bad shapes."""


class CycleDetected(LeafspanError):
    """The input digraph contains a directed cycle."""


class NotRooted(LeafspanError):
    """Some vertex is unreachable from the designated root."""


class IllegalExpansion(LeafspanError):
    """An expansion violates one of its preconditions."""


class NotTBranching(LeafspanError):
    """A branching does not meet the minimum internal out-degree."""


class PreconditionViolated(LeafspanError):
    """A solver phase was fed a branching it cannot legally extend."""


class TooLarge(LeafspanError):
    """Instance exceeds the guard of an exhaustive/exact routine."""


class NotReducedInstance(LeafspanError):
    """The digraph does not have the shape produced by the reduction."""


class ParseError(LeafspanError):
    """An instance or solution file failed to parse or validate."""
