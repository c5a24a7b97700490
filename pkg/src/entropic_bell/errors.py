class EntropicBellError(Exception):
    """Base error for entropic_bell."""


class InvalidInputError(EntropicBellError):
    """Matrix or argument is malformed (non-finite entries, bad JSON)."""


class InvalidStateError(EntropicBellError):
    """Ket or density matrix violates its invariants."""


class NotAStateError(InvalidStateError):
    """Matrix has a significantly negative eigenvalue."""


class NotInvertibleError(EntropicBellError):
    """Matrix is singular; no logarithm exists."""


class NumericalFailureError(EntropicBellError):
    """Numerical routine did not converge or left an unacceptable residue."""


class DomainError(EntropicBellError):
    """Argument lies outside the function's domain."""


class InvalidDistributionError(EntropicBellError):
    """Probability vector or joint table is not a distribution."""


class NotComparableError(EntropicBellError):
    """Entrywise order is undefined for matrices with complex entries."""


class ConfigError(EntropicBellError):
    """Scan configuration is invalid."""


class EmitError(EntropicBellError):
    """Scan output could not be written."""
