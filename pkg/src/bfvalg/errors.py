"""Exception types shared across the package."""


class BfvError(Exception):
    """Base class for all package errors."""


class RosterMismatchError(BfvError):
    """Operands belong to different generator rosters."""


class InvalidSubstitutionError(BfvError):
    """A substitution image violates degree or parity of its generator."""


class NotAFunctionError(BfvError):
    """An operand contains daggered generators where a function was required."""


class DegreeError(BfvError):
    """An operand has the wrong (or no uniform) total degree."""


class TerminationGuardError(BfvError):
    """A series declared finite failed to terminate within its bound."""


class MorphismDefectError(BfvError):
    """A pushed Maurer-Cartan element failed re-certification in the target."""


class InvariantViolationError(BfvError):
    """An internal certification failed; indicates an implementation bug."""


class NilpotencyPreconditionError(BfvError):
    """Flow generator is not filtration-raising, so Picard iteration may not stop."""


class InvalidAutomorphismError(BfvError):
    """Requested automorphism data is not invertible over polynomials."""


class OutOfSliceError(BfvError):
    """Input leaves the polynomial-realizable slice handled by this artifact."""


class ParseError(BfvError):
    """Malformed polynomial text or instance file."""

    def __init__(self, message, line=None, column=None):
        if line is not None:
            message = f"{message} (line {line}, column {column})"
        super().__init__(message)
        self.line = line
        self.column = column


class SerializationError(BfvError):
    """Version mismatch or digest failure while reading serialized data."""
