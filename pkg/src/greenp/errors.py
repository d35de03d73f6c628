"""Error types shared across the package.

DomainError covers invalid mathematical input (bad prime, index out of
range, malformed expression).  ResourceGuardError covers requests that
are well formed but outside the configured size limits of the matrix
oracle.  The CLI maps them to distinct exit codes.
"""


class DomainError(ValueError):
    """Input outside the mathematical domain of an operation."""


class ResourceGuardError(RuntimeError):
    """Request exceeds a configured resource cap of the oracle."""
