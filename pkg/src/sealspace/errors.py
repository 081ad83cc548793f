"""Exception types shared across the package.

Every error is a ``ValueError`` so that callers validating user input can
catch one family.
"""


class SealspaceError(ValueError):
    """Base class for all package errors."""


class NonSquare(SealspaceError):
    pass


class IndexOutOfRange(SealspaceError):
    pass


class SizeMismatch(SealspaceError):
    pass


class SizeTooLarge(SealspaceError):
    pass


class PositionOutOfRange(SealspaceError):
    pass


class NonZeroDiagonal(SealspaceError):
    def __init__(self, index: int):
        super().__init__(f"diagonal entry {index + 1} is nonzero")
        self.index = index


class BadDiagonalBlock(SealspaceError):
    pass


class DegenerateMinor(SealspaceError):
    pass


class InconsistentFunction(SealspaceError):
    pass


class NotAPartition(SealspaceError):
    pass


class IncompatibleFunction(SealspaceError):
    pass


class InvalidStructure(SealspaceError):
    """A tuple failed one of the regularity conditions."""

    def __init__(self, report):
        super().__init__(f"tuple is not a regular structure: {report.summary()}")
        self.report = report


class ParseError(SealspaceError):
    """Malformed text input; ``line`` is 1-based, or None if not line specific."""

    def __init__(self, message: str, line: int | None = None):
        prefix = f"line {line}: " if line is not None else ""
        super().__init__(prefix + message)
        self.line = line
