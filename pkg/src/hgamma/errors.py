"""Exception types shared across the package.

Mathematical failures (a configuration the theory rejects, or a formula
that is undefined there) all derive from HGammaError so callers can map
them to a single exit code / HTTP status.
"""


class HGammaError(Exception):
    """Base class for mathematical / model errors."""

    code = "HGammaError"

    def __init__(self, message, violations=None):
        super().__init__(message)
        self.violations = list(violations) if violations else []


class DegenerateConfiguration(HGammaError):
    """A guard denominator d(a-jh, b-ih) is numerically zero."""

    code = "DegenerateConfiguration"


class DependentBasis(HGammaError):
    """The shifted basis functions are linearly dependent for this (family, n, h)."""

    code = "DependentBasis"


class SingularMatrix(HGammaError):
    """det C(h) is numerically zero; the family is not invertibly translatable."""

    code = "SingularMatrix"


class ArityMismatch(HGammaError):
    """Blossom argument count does not match the curve degree."""

    code = "ArityMismatch"


class OddArity(HGammaError):
    """Perfect matchings require an even number of indices."""

    code = "OddArity"


class UnityUndefined(HGammaError):
    """The pairing-sum normalizer vanishes for this h."""

    code = "UnityUndefined"


class UnsupportedFamily(HGammaError):
    """The requested operation has no formula for this family."""

    code = "UnsupportedFamily"


class UnsupportedElevation(HGammaError):
    """Degree elevation is only available for specific family/h combinations."""

    code = "UnsupportedElevation"
