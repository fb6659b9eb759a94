"""Exception hierarchy shared by every stage of the toolkit."""

from __future__ import annotations


class LSBoundsError(Exception):
    """Base class for all errors raised by lsbounds."""


class InvalidParameter(LSBoundsError, ValueError):
    pass


class PresentationError(LSBoundsError):
    """A ring presentation is malformed.

    ``line`` and ``column`` are 1-based positions in the source document
    when the error came from the parser, otherwise ``None``.
    """

    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        self.message = message
        self.line = line
        self.column = column
        super().__init__(self._format())

    def _format(self) -> str:
        if self.line is None:
            return self.message
        if self.column is None:
            return f"line {self.line}: {self.message}"
        return f"line {self.line}, column {self.column}: {self.message}"


class PresentationSyntaxError(PresentationError):
    pass


class DuplicateGenerator(PresentationError):
    pass


class OddDegree(PresentationError):
    pass


class InhomogeneousRelation(PresentationError):
    def __init__(self, relation: str, degree_a: int, degree_b: int,
                 line: int | None = None, column: int | None = None):
        self.relation = relation
        self.degrees = (degree_a, degree_b)
        super().__init__(
            f"relation {relation!r} is not homogeneous: terms of degree {degree_a} and {degree_b}",
            line, column,
        )


class UnknownGenerator(PresentationError):
    pass


class UnboundedAlgebra(LSBoundsError):
    """No finite degree cap could be established for a presentation."""


class Truncated(LSBoundsError):
    """A query reached past a user-supplied (unsound) degree cap."""


class InconsistentSpace(LSBoundsError, ValueError):
    """Space data contradicts its cohomology (e.g. CW dimension below top degree)."""
