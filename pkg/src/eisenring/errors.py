"""Exception types shared across the package."""


class EisenringError(Exception):
    """Base class for every error raised by this package."""


class UnknownSemiringError(EisenringError):
    """Requested built-in semiring name is not registered."""


class SemiringMismatchError(EisenringError):
    """Elements of different semirings were combined."""


class UndecidableDivisibilityError(EisenringError):
    """No divisibility decision procedure is available on this carrier."""


class BoundRequiredError(EisenringError):
    """An operation over an infinite carrier needs a positive search bound."""


class OrderTooLargeError(EisenringError):
    """A finite-structure operation was asked for an unsupported order."""


class DegreeTooLargeError(EisenringError):
    """A polynomial scan was asked for an unsupported degree."""


class DegreeTooSmallError(EisenringError):
    """The operation needs a non-constant polynomial."""


class BudgetExceededError(EisenringError):
    """An enumeration ran out of its node budget; results so far are partial."""


class NotPrimeElementError(EisenringError):
    """The supplied element cannot play the prime-element role."""


class HypothesisNotEstablishedError(EisenringError):
    """The ideal-theoretic hypotheses required by the operation do not hold."""


class AxiomCheckFailedError(EisenringError):
    """A finite operation table violates the semiring axioms."""

    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report


class TableFormatError(EisenringError):
    """Base class for semiring table file problems; carries a line number."""

    def __init__(self, message, line=None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class TableSyntaxError(TableFormatError):
    """Malformed token or directive in a table file."""


class TableShapeError(TableFormatError):
    """Table rows or entries do not match the declared order."""


class MissingSectionError(TableFormatError):
    """A required table file section is absent."""


class PolySyntaxError(EisenringError):
    """Polynomial expression text is malformed; carries a position."""

    def __init__(self, message, position=None):
        if position is not None:
            message = f"position {position}: {message}"
        super().__init__(message)
        self.position = position


class LiteralError(PolySyntaxError):
    """A coefficient literal is not valid for the active semiring."""
