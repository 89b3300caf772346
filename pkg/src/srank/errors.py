"""Exception hierarchy.

Every error raised on bad input derives from :class:`SRankError`, which is a
``ValueError`` so callers that only care about "invalid argument" can catch
that.  :class:`NumericalFailure` is kept separate: it signals that a
well-formed input defeated a numerical routine.
"""


class SRankError(ValueError):
    pass


class IndexOutOfRange(SRankError):
    pass


class DuplicateEntry(SRankError):
    pass


class SymmetryViolation(SRankError):
    pass


class DimensionMismatch(SRankError):
    pass


class OrderMismatch(SRankError):
    pass


class SizeGuardExceeded(SRankError):
    pass


class ZeroTensor(SRankError):
    pass


class WrongOrder(SRankError):
    pass


class WrongClass(SRankError):
    pass


class UnsupportedClass(SRankError):
    pass


class NotNormalized(SRankError):
    pass


class NotSymmetric(SRankError):
    pass


class NotAntisymmetric(SRankError):
    pass


class DependentVectors(SRankError):
    pass


class NotInIrreducible(SRankError):
    pass


class DegenerateProbe(SRankError):
    pass


class NumericalFailure(RuntimeError):
    """A decomposition did not reach its reconstruction tolerance."""
