"""
Error hierarchy shared by every package
"""


class EhlcpError(Exception):
    """Base class for all toolkit errors"""


class DimensionError(EhlcpError, ValueError):
    """Shapes of matrices, vectors or tuples do not agree"""


class SingularMatrixError(EhlcpError):
    """A linear system has no unique solution"""


class InvalidInstanceError(EhlcpError, ValueError):
    """An instance violates the standing assumptions (e.g. d not positive)"""


class InvalidPermutationError(EhlcpError, ValueError):
    """The argument is not a permutation of range(n)"""


class InvalidDiagonalError(EhlcpError, ValueError):
    """Diagonal tuple is not nonnegative diagonal or its diagonal sum has a zero"""


class ContractError(EhlcpError):
    """A documented precondition of an operation was violated"""


class InvariantViolation(EhlcpError, AssertionError):
    """An internally asserted equivalence did not hold"""


class DegreeUndefinedError(EhlcpError):
    """The EHLCP-degree is only defined for tuples with the R0-W property"""

    def __init__(self, reason: str = "not_r0_w", message: str = ""):
        self.reason = reason
        super().__init__(message or f"EHLCP-degree undefined: {reason}")


class GenericityExhaustedError(EhlcpError):
    """Every drawn target hit a branch boundary or a singular branch"""


class ResampleBudgetExceeded(EhlcpError):
    """A generator could not certify the requested kind within its budget"""


class UnknownSuiteError(EhlcpError, KeyError):
    """No theorem suite is registered under the given id"""

    def __str__(self):
        return Exception.__str__(self)


class InputFormatError(EhlcpError, ValueError):
    """Malformed JSON or a document that does not follow the instance schema"""


class ConfigurationError(EhlcpError):
    """Configuration file missing or malformed"""
