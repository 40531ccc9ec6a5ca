"""Shared error hierarchy.

Every error carries a stable ``code`` string so callers (and the CLI) can
dispatch on the failure kind without parsing messages.
"""

from __future__ import annotations


class EulabError(Exception):
    """Base class for all package errors."""

    code = "ERROR"

    def __init__(self, message: str):
        super().__init__(message)
        self.message = message


class InvalidPermutationError(EulabError):
    code = "INVALID_PERMUTATION"


class ValueOutOfRangeError(EulabError):
    code = "VALUE_OUT_OF_RANGE"


class NotPrefixDecreasingError(EulabError):
    """Raised when an operation defined only on words whose prefix before
    the value 1 is strictly decreasing receives some other word."""

    code = "NOT_PRW"


class CapExceededError(EulabError):
    """Raised when an enumeration would exceed the configured size cap."""

    code = "CAP_EXCEEDED"


class NegativePowerOfNonMonomialError(EulabError):
    code = "NEGATIVE_POWER_OF_NONMONOMIAL"


class ZeroAtNegativePowerError(EulabError):
    code = "ZERO_AT_NEGATIVE_POWER"


class UnboundVariableError(EulabError):
    code = "UNBOUND_VARIABLE"


class PolySyntaxError(EulabError):
    code = "SYNTAX_ERROR"

    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"{message} (line {line}, column {column})")
        self.line = line
        self.column = column


class DuplicateRuleHeadError(EulabError):
    code = "DUPLICATE_RULE_HEAD"


class UnknownNameError(EulabError):
    code = "UNKNOWN_NAME"


class UnknownCheckError(EulabError):
    code = "UNKNOWN_CHECK"


class NotHomogeneousError(EulabError):
    code = "NOT_HOMOGENEOUS"


class NotSymmetricError(EulabError):
    code = "NOT_SYMMETRIC"


class NonzeroResidualError(EulabError):
    code = "NONZERO_RESIDUAL"


class RepresentativeError(EulabError):
    """Raised when an orbit does not contain exactly one member free of
    double descents."""

    code = "ORBIT_REPRESENTATIVE_NOT_UNIQUE"
