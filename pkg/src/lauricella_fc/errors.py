"""Exception hierarchy shared across the package."""


class FCError(Exception):
    """Base class for all errors raised by this package."""


class MalformedParameterError(FCError):
    """Parameter container is structurally invalid (m < 1 or len(c) != m)."""


class DegenerateParameterError(FCError):
    """Parameters hit a pole or zero denominator of a closed-form expression."""


class GammaPoleError(DegenerateParameterError):
    """log_gamma evaluated at a nonpositive integer."""


class DomainError(FCError):
    """Evaluation point lies outside the convergence domain sum_k sqrt|x_k| < 1."""


class PrefactorSingularityError(FCError):
    """A power prefactor x_i^(1-c_i) was requested at x_i = 0."""


class ConvergenceConditionError(FCError):
    """Integral representation preconditions violated, or quadrature failed to settle."""
