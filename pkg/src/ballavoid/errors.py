"""Exception types shared across the package."""


class DomainError(ValueError):
    """An argument lies outside the mathematical domain of an operation."""


class GeometryError(DomainError):
    """A geometric configuration is degenerate (e.g. spheres do not intersect)."""


class NumericError(RuntimeError):
    """A numerical scheme failed to reach its target accuracy.

    Carries diagnostics so callers can report the best available estimate.
    """

    def __init__(self, message, best_estimate=None, achieved_error=None):
        super().__init__(message)
        self.best_estimate = best_estimate
        self.achieved_error = achieved_error


class CertificateError(ValueError):
    """A concentration certificate cannot be issued for the given inputs.

    For width violations, `n_required` names the smallest dimension that
    would satisfy the slab-width condition for the requested constant.
    """

    def __init__(self, message, n_required=None):
        super().__init__(message)
        self.n_required = n_required
