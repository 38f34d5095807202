"""Exception types raised by validation and contract checks.

Everything derives from :class:`StatePrepError` (itself a ``ValueError``)
so callers can catch the whole family at once.
"""


class StatePrepError(ValueError):
    """Base class for all errors raised by this package."""


# -- linear algebra ---------------------------------------------------------

class NotHermitianError(StatePrepError):
    pass


class NoConvergenceError(StatePrepError):
    pass


class NotPSDError(StatePrepError):
    pass


class DimensionMismatchError(StatePrepError):
    pass


class NotOrthonormalError(StatePrepError):
    pass


# -- state and amplitude validation -----------------------------------------

class NotNormalizedError(StatePrepError):
    pass


class NegativeAmplitudeError(StatePrepError):
    pass


class NotDensityMatrixError(StatePrepError):
    pass


class NotAProbabilityVectorError(StatePrepError):
    pass


class BadProbabilitiesError(StatePrepError):
    pass


class LevelOutOfRangeError(StatePrepError):
    pass


class OutOfRangeError(StatePrepError):
    pass


# -- circuits and simulation -------------------------------------------------

class IndexOutOfRangeError(StatePrepError):
    pass


class NotUnitaryError(StatePrepError):
    pass


class BadLabelError(StatePrepError):
    pass


class MissingExpectationError(StatePrepError):
    pass


# -- file and text formats ----------------------------------------------------

class FormatError(StatePrepError):
    """Malformed density-matrix file, circuit file, or family spec string."""
