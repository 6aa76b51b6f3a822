"""Exception types shared across the package."""


class GeobyteError(Exception):
    """Base class for all errors raised by this package."""


class DomainError(GeobyteError):
    """An argument is outside the mathematical domain of the operation
    (non-unit axis, wrong grade, mismatched spinor ideals, ...)."""


class SpanError(DomainError):
    """A multivector was decomposed against a basis family whose span
    does not contain it.  Carries the norm of the out-of-span remainder."""

    def __init__(self, message: str, residual: float):
        super().__init__(message)
        self.residual = residual


class ParseError(GeobyteError):
    """Syntax error in the expression language.

    ``offset`` is the byte offset of the failure, ``expected`` the set of
    token descriptions that would have been accepted there.
    """

    def __init__(self, message: str, offset: int, expected: frozenset[str]):
        super().__init__(f"{message} at offset {offset}")
        self.offset = offset
        self.expected = frozenset(expected)
