"""Exception hierarchy for f5gb."""

from __future__ import annotations


class F5Error(Exception):
    """Base class for all errors raised by this package."""


class DimensionError(F5Error, ValueError):
    """Power products of different lengths were combined."""


class DivisibilityError(F5Error, ArithmeticError):
    """A power product division was attempted with a non-divisor."""


class LeadingTermError(F5Error, ValueError):
    """The leading term of the zero polynomial was requested."""


class RingError(F5Error, ValueError):
    """Invalid ring description, or operands from different rings."""


class FieldError(F5Error, ValueError):
    """Invalid coefficient field (e.g. non-prime modulus) or bad coefficient."""


class ConfigurationError(F5Error, ValueError):
    """Inconsistent engine or module-order configuration."""


class ZeroScalarError(F5Error, ValueError):
    """A labeled polynomial was multiplied by a zero coefficient."""


class ZeroOperandError(F5Error, ValueError):
    """A critical pair was requested for a zero polynomial."""


class EmptyPairSetError(F5Error, LookupError):
    """Selection was requested from an empty critical-pair set."""


class InputError(F5Error, ValueError):
    """Invalid engine input (e.g. a zero generator)."""


class LoopLimitExceeded(F5Error, RuntimeError):
    """The main loop exceeded the configured number of selections."""

    def __init__(self, limit: int, pending: int):
        super().__init__(
            f"aborted after {limit} pair selections with {pending} pairs still pending"
        )
        self.limit = limit
        self.pending = pending


class ParseError(F5Error, ValueError):
    """Syntax or semantic error in a system file, with 1-based position."""

    kind = "parse error"

    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"{line}:{column}: {self.kind}: {message}")
        self.message = message
        self.line = line
        self.column = column


class UnknownIdentifierError(ParseError):
    kind = "unknown identifier"


class MalformedExponentError(ParseError):
    kind = "malformed exponent"


class ZeroPolynomialLineError(ParseError):
    kind = "zero polynomial"


class NonPrimeModulusError(ParseError):
    kind = "non-prime modulus"
