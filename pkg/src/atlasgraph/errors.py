"""Exception hierarchy shared by all atlasgraph modules."""


class AtlasGraphError(ValueError):
    """Base class for every validation or precondition failure."""


class EdgeError(AtlasGraphError):
    """A malformed edge passed to the graph constructor.

    ``index`` is the position of the edge in the input list and ``edge`` the
    offending ``(u, v, label)`` triple.
    """

    reason = "invalid edge"

    def __init__(self, index, edge, detail=""):
        self.index = index
        self.edge = tuple(edge)
        msg = f"edge #{index} {self.edge}: {self.reason}"
        if detail:
            msg += f" ({detail})"
        super().__init__(msg)


class DuplicateEdge(EdgeError):
    reason = "duplicate unordered vertex pair"


class SelfLoop(EdgeError):
    reason = "self-loop"


class BadEndpoint(EdgeError):
    reason = "endpoint out of range"


class NonPositiveLabel(EdgeError):
    reason = "label must be a positive integer"


class InvalidDimension(AtlasGraphError):
    pass


class Disconnected(AtlasGraphError):
    pass


class BadBasepoint(AtlasGraphError):
    pass


class TooLarge(AtlasGraphError):
    pass


class ParseError(AtlasGraphError):
    """Syntax or schema error in a graph document, with 1-based position."""

    def __init__(self, message, line, column):
        self.line = line
        self.column = column
        super().__init__(f"line {line}, column {column}: {message}")
