"""Validation errors raised by entroreduce.

Every error the library raises on bad input derives from ValidationError, so
callers (and the CLI) can distinguish "your input is wrong" (exit code 1) from
genuine internal failures (exit code 2). The class name is the diagnostic code.
"""


class ValidationError(ValueError):
    """Base class for all input-validation failures."""


class Empty(ValidationError):
    """The probability vector has no components."""


class NegativeMass(ValidationError):
    """A probability is negative beyond tolerance."""


class NotNormalized(ValidationError):
    """The probabilities do not sum to 1 within tolerance."""


class BadM(ValidationError):
    """The target support size m is out of range for this operation."""


class BadPartition(ValidationError):
    """Blocks are not a partition of {0, ..., n-1} into m nonempty sets."""


class TooLarge(ValidationError):
    """The instance exceeds the exhaustive solver's size cap."""


class BadRho(ValidationError):
    """The ratio parameter rho is below 1."""


class ZeroMinimum(ValidationError):
    """The smallest probability is zero, so a max/min ratio is undefined."""


class RatioViolated(ValidationError):
    """p_max / p_min exceeds the stated ratio bound."""


class MarginalMismatch(ValidationError):
    """A coupling matrix does not reproduce the required marginals."""


class Unreachable(ValidationError):
    """Operation called in a regime its precondition excludes."""
