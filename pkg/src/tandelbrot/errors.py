"""Exception hierarchy shared across the toolkit."""


class TandelbrotError(Exception):
    """Base class for all domain errors raised by this package."""


class AlphaIsOne(TandelbrotError):
    """The tangent family is undefined at alpha = 1."""


class AlphaZero(TandelbrotError):
    """Operation requires alpha != 0 (e.g. 1/alpha or poles)."""


class AZero(TandelbrotError):
    """The Newton family is undefined at a = 0."""


class EssentialSingularityInput(TandelbrotError):
    """The map cannot be evaluated at its essential singularity (infinity)."""


class PoleInput(TandelbrotError):
    """Derivative requested at (or too close to) a pole."""


class NoPoles(TandelbrotError):
    """alpha = 0 gives an entire map with no poles."""


class ParamOutsideDisk(TandelbrotError):
    """Orbit classification requires |alpha| < 1."""


class InvalidSeed(TandelbrotError):
    """Seed must be a finite complex number."""


class NoConvergence(TandelbrotError):
    """An iterative solver failed to converge."""


class DegenerateDerivative(TandelbrotError):
    """Newton step undefined: derivative of the objective vanished."""


class DerivativeThroughPole(TandelbrotError):
    """Parameter derivative invalid: an intermediate iterate was clamped."""


class NotHyperbolic(TandelbrotError):
    """The free asymptotic value is not attracted to a cycle other than 0."""


class ContinuationLost(TandelbrotError):
    """Fixed-point continuation lost its branch before reaching neutrality."""


class GridOutsideHalfDisk(TandelbrotError):
    """Nested-set grids must lie inside the open disk of radius 1/2."""


class ZeroPixelViewport(TandelbrotError):
    """Viewport must have a positive number of pixels in both directions."""
