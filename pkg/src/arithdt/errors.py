"""Exception hierarchy shared across the package.

Every domain error raised by library code derives from ArithdtError so the
CLI can map it to a single exit code; usage errors are left to argparse.
"""


class ArithdtError(Exception):
    """Base class for domain errors raised by this package."""


class FieldMismatchError(ArithdtError):
    """Operands live over different base fields."""


class UnsupportedFieldError(ArithdtError):
    """The operation is undefined over the given base field."""


class SingularMatrixError(ArithdtError):
    """A symmetric matrix expected to be nondegenerate is singular."""


class NonUnitError(ArithdtError):
    """A value required to be a unit (invertible) is not."""


class SeriesMismatchError(ArithdtError):
    """Truncated series with different orders or coefficient rings."""


class GeneratorProductError(ArithdtError):
    """Product of two non-Tate generator classes, outside the supported subring."""


class InexactDivisionError(ArithdtError):
    """A polynomial division that must be exact left a remainder."""


class PositiveDimensionalIdealError(ArithdtError):
    """The ideal does not cut out a finite-dimensional quotient algebra."""


class NotSupportedAtOriginError(ArithdtError):
    """The zero locus of the ideal is not concentrated at the origin."""


class DegenerateSystemError(ArithdtError):
    """A map violates a regularity precondition (vanishing Jacobian, repeated roots)."""


class UnsupportedExtensionError(ArithdtError):
    """A residue field extension beyond quadratic is required but unsupported."""


class NonIntegralCoefficientError(ArithdtError):
    """A formula produced non-integral multiplicities where integers are required."""


class InputDataError(ArithdtError):
    """Malformed or missing user-supplied data."""
