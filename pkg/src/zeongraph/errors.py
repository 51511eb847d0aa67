from __future__ import annotations


class ZeonGraphError(Exception):
    """Base class for all errors raised by zeongraph. The
    :attr:`exit_code` is used by the command line interface when the
    error escapes a command.
    """

    #: Process exit status used by the CLI.
    exit_code = 2


class DimensionError(ZeonGraphError, ValueError):
    """Raised when algebra elements or blades of different ambient
    dimensions are combined, or a dimension is out of the supported
    range.
    """


class GradeError(ZeonGraphError, ValueError):
    """Raised when a grade-preserving matrix element is requested for
    multi-indices of different cardinality.
    """


class ShapeError(ZeonGraphError, ValueError):
    """Raised for non-square or ragged matrices."""


class GraphFormatError(ZeonGraphError, ValueError):
    """Raised when an edge list describes something that is not a
    simple graph. ``lineno`` is the 1-based line the problem was found
    on, or ``None`` if it is not tied to a line.
    """

    def __init__(self, message: str, lineno: int | None = None) -> None:
        if lineno is not None:
            message = f"line {lineno}: {message}"

        super().__init__(message)
        self.lineno = lineno


class EdgeListParseError(GraphFormatError):
    """Raised when a line of an edge list can't be tokenized."""


class VertexRangeError(ZeonGraphError, IndexError):
    """Raised when a vertex, anchor or matrix index is out of range."""


class UnknownMethodError(ZeonGraphError, LookupError):
    """Raised when a quantity or counting method is not registered."""


class UnknownGraphError(ZeonGraphError, LookupError):
    """Raised when a built-in graph name is not known."""


class SizeLimitError(ZeonGraphError):
    """Raised when an input is too large for the requested computation,
    either because of the subset-lattice size guard or an oracle cap.
    """

    exit_code = 3


class ConsistencyError(ZeonGraphError, ArithmeticError):
    """Raised when an exact identity that must hold does not, such as a
    sum that must be divisible by ``2n``. This always indicates a bug.
    """

    exit_code = 4
