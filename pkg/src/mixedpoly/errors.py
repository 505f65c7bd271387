"""Exception types shared across the package."""


class MixedPolyError(Exception):
    """Base class for all errors raised by this package."""


class DimensionMismatch(MixedPolyError):
    """Operands or points do not agree on the number of variables."""


class ZeroPolynomial(MixedPolyError):
    """The operation is undefined for the zero polynomial."""


class NotPolarHomogeneous(MixedPolyError):
    """The polynomial is not strongly polar homogeneous (unit weights)."""


class ZeroOnContour(MixedPolyError):
    """A sampled contour point is indistinguishable from a zero."""


class RefinementExhausted(MixedPolyError):
    """Adaptive refinement hit its cap without reaching certification."""


class NotMonic(MixedPolyError):
    """Two or more monomials share the maximal radial degree."""


class IndeterminateCluster(MixedPolyError):
    """A candidate cluster could not be certified at the minimal width."""


class SolverInconsistency(MixedPolyError):
    """Certified partial results contradict each other; aborting."""


class DegenerateAtInfinity(MixedPolyError):
    """The point-at-infinity test is ambiguous (index-0 cluster at 0)."""


class GenericityFailure(MixedPolyError):
    """Too many consecutive random lines failed the genericity checks."""


class NonIntegralGenus(MixedPolyError):
    """The Euler characteristic does not yield an integer genus >= 0."""


class InvalidFamilyParams(MixedPolyError):
    """Family parameters are missing, of the wrong type, or out of range."""


class AmbientDimensionError(MixedPolyError):
    """The requested computation needs a different ambient dimension."""


class ParseError(MixedPolyError):
    """Polynomial text does not conform to the grammar."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position
