"""Exception classes shared by every ordkit module."""


class OrdinalError(Exception):
    """Base class for domain errors (CLI exit code 1)."""


class MalformedCNF(OrdinalError, ValueError):
    pass


class Underflow(OrdinalError, ArithmeticError):
    pass


class DivisionByZero(OrdinalError, ZeroDivisionError):
    pass


class ZeroOrdinal(OrdinalError, ValueError):
    pass


class OutOfRange(OrdinalError, ValueError):
    pass


class BadBase(OrdinalError, ValueError):
    pass


class DomainMismatch(OrdinalError, ValueError):
    pass


class ZeroNotFixed(OrdinalError, ValueError):
    pass


class CastUnequal(OrdinalError, ArithmeticError):
    """A cast was requested between two ordinals that are not equal.

    This always indicates a bug in the arithmetic, never bad user input.
    """


class PointOutOfDomain(OrdinalError, ValueError):
    pass


class TooSmall(OrdinalError, ValueError):
    pass


class BoundMismatch(OrdinalError, ValueError):
    pass


class SequenceTooLong(OrdinalError, ValueError):
    pass


class EmptyPool(OrdinalError, ValueError):
    pass


class SchemaError(OrdinalError, ValueError):
    pass


class OrdinalSyntaxError(ValueError):
    """Malformed ordinal expression (CLI exit code 2)."""

    def __init__(self, text: str, offset: int, expected, found: str = ""):
        self.text = text
        self.offset = offset
        self.expected = tuple(sorted(expected))
        found = repr(found) if found else "end of input"
        super().__init__(
            f"at byte {offset}: expected one of {', '.join(self.expected)}; found {found}"
        )
