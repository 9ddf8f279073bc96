"""Exception types shared across the package."""


class FusedHeckeError(ValueError):
    """Base class for all parameter, domain and resource errors."""


class ParameterError(FusedHeckeError):
    """A scalar parameter violates a precondition (e.g. q = 0)."""


class PoleError(ParameterError):
    """A spectral parameter hits a pole of a baxterised factor."""


class DomainError(FusedHeckeError):
    """Structurally invalid input (index out of range, size mismatch)."""


class ResourceError(FusedHeckeError):
    """A requested computation exceeds the configured size bounds."""


class InternalConsistencyError(RuntimeError):
    """An internal invariant failed (e.g. a symmetrised image left its span).

    This indicates a bug or an inadmissible parameter slipping past the
    checks, never a routine user error.
    """
