"""Exception types shared across the package.

Every error a caller can trigger with bad *data* (as opposed to bad usage of
the command line) derives from :class:`DomainError`; the CLI maps that family
to exit status 2.
"""


class DomainError(ValueError):
    """Input is well formed but mathematically unusable."""


class NonSplittingError(DomainError):
    """A polynomial does not split into linear factors over the rationals."""

    def __init__(self, residual):
        self.residual = list(residual)
        coeffs = ", ".join(str(c) for c in self.residual)
        super().__init__(f"polynomial does not split over Q; residual factor coefficients [{coeffs}]")


class NotASolutionError(DomainError):
    """A pair of polynomials fails p1(u)p2(u) = p1(u+a2)p2(u+a1)."""


class InvalidPathError(DomainError):
    """A word or lattice path violates the required shape."""


class BoundExceededError(DomainError):
    """An enumeration request is larger than the configured size bound."""
