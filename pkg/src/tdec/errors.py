"""Exception hierarchy shared by every tdec module."""


class TdecError(Exception):
    """Base class for all errors raised by tdec."""


class GraphError(TdecError, ValueError):
    pass


class LoopEdge(GraphError):
    pass


class DuplicateEdge(GraphError):
    pass


class VertexOutOfRange(GraphError, IndexError):
    pass


class EdgeOutOfRange(GraphError, IndexError):
    pass


class ParameterTooSmall(TdecError, ValueError):
    pass


class InvalidK(ParameterTooSmall):
    pass


class PathTooShort(ParameterTooSmall):
    pass


class CycleTooShort(ParameterTooSmall):
    pass


class EmptyGraph(TdecError, ValueError):
    pass


class SizeCapExceeded(TdecError):
    pass


class LengthMismatch(TdecError, ValueError):
    pass


class InfeasibleGraph(TdecError, ValueError):
    """The graph has a K2 component, so no TDE-coloring exists."""


class UnknownSuite(TdecError, KeyError):
    pass


class ParseError(TdecError, ValueError):
    """Malformed input text. ``position`` is a 1-based line or 0-based byte offset."""

    def __init__(self, message, line=None, byte=None):
        where = []
        if line is not None:
            where.append(f"line {line}")
        if byte is not None:
            where.append(f"byte {byte}")
        super().__init__(f"{message} ({', '.join(where)})" if where else message)
        self.line = line
        self.byte = byte
