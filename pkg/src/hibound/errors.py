"""Exception hierarchy shared by every hibound module."""


class HiboundError(Exception):
    """Base class for all library errors."""


class InvalidHypergraph(HiboundError, ValueError):
    pass


class EdgeWrongSize(InvalidHypergraph):
    pass


class VertexOutOfRange(InvalidHypergraph):
    pass


class DuplicateEdge(InvalidHypergraph):
    pass


class InvalidParams(HiboundError, ValueError):
    pass


class InfeasibleParams(InvalidParams):
    """No hypergraph with the requested degree data can exist."""


class AttemptsExhausted(HiboundError, RuntimeError):
    """A randomized construction gave up after its retry budget."""


class DomainError(HiboundError, ValueError):
    pass


class OutOfRange(HiboundError, ValueError):
    """A bound was requested outside the parameter range where it is defined."""


class WrongUniformity(HiboundError, ValueError):
    pass


class ParseError(HiboundError, ValueError):
    """Base for hypergraph file errors; ``line`` is 1-based (0 when unknown)."""

    def __init__(self, message: str, line: int = 0):
        self.line = line
        super().__init__(f"line {line}: {message}" if line else message)


class MalformedHeader(ParseError):
    pass


class EdgeArity(ParseError):
    pass


class IndexOutOfRange(ParseError):
    pass


class DuplicateEdgeLine(ParseError):
    pass
