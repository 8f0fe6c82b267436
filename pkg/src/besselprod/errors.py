"""Exception types shared across the package."""


class BesselProdError(Exception):
    """Base class for all package-specific errors."""


class ValidationError(BesselProdError):
    """Parameter set rejected for a family."""


class ExcludedOrder(ValidationError):
    """The order makes a recurrence denominator (n+1)(2nu+n+1) vanish.

    Attributes carry the offending order and the first index n >= 0 at
    which 2nu+n+1 = 0.
    """

    def __init__(self, nu, n):
        self.nu = nu
        self.n = n
        super().__init__(
            f"order nu={nu} is excluded: denominator factor 2*nu+n+1 "
            f"vanishes at n={n}"
        )


class HalfIntegerOrder(ValidationError):
    """nu = +-1/2 rejected for families whose weights divide by 4nu^2-1."""

    def __init__(self, nu, family):
        self.nu = nu
        self.family = family
        super().__init__(
            f"order nu={nu} makes 4*nu^2-1 vanish, which divides the "
            f"recurrence weights of family {family}"
        )


class MissingParam(ValidationError):
    """A parameter required by the family was not supplied."""


class ExactModeError(ValidationError):
    """Exact mode requested with inputs that are not Gaussian rationals."""


class IndexTooSmall(BesselProdError):
    """Recurrence weights requested below the first valid index."""

    def __init__(self, n, min_n):
        self.n = n
        self.min_n = min_n
        super().__init__(f"weights undefined for n={n}; first valid index is {min_n}")


class CalibrationFailed(BesselProdError):
    """No unique subsequence offset reproduces the oracle."""


class NonzeroConstantTerm(BesselProdError):
    """series_exp requires a series with zero constant term."""


class LengthMismatch(BesselProdError):
    """Series operands shorter than the requested truncation order."""


class PiArithmeticError(BesselProdError):
    """Operation would leave the rational + rational*pi scalar domain."""


class EvaluationError(BesselProdError):
    """Numeric evaluation of a truncated expansion failed."""


class BranchCut(EvaluationError):
    """z lies on the principal branch cut (or branch point) of z**nu."""


class OutsideDisc(EvaluationError):
    """z lies outside the convergence disc of the binomial factor."""
