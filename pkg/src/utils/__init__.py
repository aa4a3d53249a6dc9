# Utility functions and helpers

from .errors import (
    EhlcpError, DimensionError, SingularMatrixError, InvalidInstanceError,
    InvalidPermutationError, InvalidDiagonalError, ContractError, InvariantViolation,
    DegreeUndefinedError, GenericityExhaustedError, ResampleBudgetExceeded,
    UnknownSuiteError, InputFormatError, ConfigurationError
)
from .logging_setup import configure_logging
from .parallel import ordered_map, set_thread_cap
from .rng import make_rng

__all__ = [
    'EhlcpError', 'DimensionError', 'SingularMatrixError', 'InvalidInstanceError',
    'InvalidPermutationError', 'InvalidDiagonalError', 'ContractError', 'InvariantViolation',
    'DegreeUndefinedError', 'GenericityExhaustedError', 'ResampleBudgetExceeded',
    'UnknownSuiteError', 'InputFormatError', 'ConfigurationError',
    'configure_logging', 'ordered_map', 'set_thread_cap', 'make_rng'
]
