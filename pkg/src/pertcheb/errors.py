"""Exception hierarchy shared across the package."""


class PertChebError(Exception):
    """Base class for all package-specific errors."""


class AffineOverflow(PertChebError):
    """Product of two scalars that both carry the formal parameter.

    The exact layer is closed under products only when at most one factor
    has a nonzero linear part; hitting this means a second perturbation
    parameter sneaked into a computation that supports a single one.
    """


class NonRegular(PertChebError):
    """A recurrence coefficient gamma vanished where regularity is required."""


class InvalidOrder(PertChebError):
    """Perturbation order outside the range the operation supports."""


class NonPositiveGamma(PertChebError):
    """Jacobi matrix construction needs strictly positive gamma coefficients."""


class PrecisionExhausted(PertChebError):
    """An adaptive interval computation hit its precision cap undecided."""


class MixedRadicand(PertChebError):
    """Arithmetic between quadratic extensions over different radicands."""
