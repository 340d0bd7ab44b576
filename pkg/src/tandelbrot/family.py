"""Overflow-safe evaluation of the generalized tangent family.

The family is

    T_alpha(z) = (w - 1) / (alpha*w - 1),   w = exp((alpha - 1) z / 8),

defined for alpha != 1.  Every map fixes 0 with multiplier 1/8 and has the
two asymptotic values 1 and 1/alpha.  Evaluation is done entirely in double
precision; the two tract limits of the essential singularity are applied
explicitly instead of letting exp() overflow to inf/NaN.
"""

from __future__ import annotations

import cmath
import enum
import math
from dataclasses import dataclass

from .errors import (
    AlphaIsOne,
    AlphaZero,
    EssentialSingularityInput,
    NoPoles,
    PoleInput,
)

# exp() overflows past the natural log of the largest finite double
EXP_OVERFLOW = 709.0
# quotients larger than this are promoted to the point at infinity
POLE_CUTOFF = 1e12

FIXED_POINT_MULTIPLIER = 0.125


class Clamp(enum.Enum):
    """Which analytic limit, if any, was substituted during evaluation."""

    NONE = "none"
    UNDERFLOW_TO_ONE = "underflow_to_one"
    OVERFLOW_TO_RECIP_ALPHA = "overflow_to_recip_alpha"
    POLE_OVERFLOW_TO_INFINITY = "pole_overflow_to_infinity"


@dataclass(frozen=True)
class SpherePoint:
    """A point of the Riemann sphere: a finite complex value or infinity."""

    value: complex = 0j
    is_infinity: bool = False

    @staticmethod
    def finite(z: complex) -> "SpherePoint":
        z = complex(z)
        if not (math.isfinite(z.real) and math.isfinite(z.imag)):
            raise ValueError("finite SpherePoint requires finite coordinates")
        return SpherePoint(z, False)

    @staticmethod
    def infinity() -> "SpherePoint":
        return SpherePoint(0j, True)

    def __complex__(self) -> complex:
        if self.is_infinity:
            raise ValueError("infinity has no finite complex value")
        return self.value


INFINITY = SpherePoint.infinity()


@dataclass(frozen=True)
class TangentParam:
    """Parameter of the tangent family; alpha = 1 is excluded."""

    alpha: complex

    def __post_init__(self):
        object.__setattr__(self, "alpha", complex(self.alpha))
        if self.alpha == 1:
            raise AlphaIsOne("the family is undefined at alpha = 1")

    @property
    def free_value(self) -> complex:
        """The free asymptotic value 1/alpha."""
        if self.alpha == 0:
            raise AlphaZero("1/alpha is undefined at alpha = 0")
        return 1 / self.alpha


@dataclass(frozen=True)
class EvalOutcome:
    value: SpherePoint
    clamp: Clamp = Clamp.NONE


def _as_finite(z) -> complex:
    if isinstance(z, SpherePoint):
        if z.is_infinity:
            raise EssentialSingularityInput(
                "infinity is the essential singularity of the family"
            )
        return z.value
    z = complex(z)
    if not (math.isfinite(z.real) and math.isfinite(z.imag)):
        raise EssentialSingularityInput("non-finite input")
    return z


def eval_tangent(p: TangentParam, z) -> EvalOutcome:
    """Evaluate T_alpha(z) with explicit clamping of the exponential tracts.

    Accepts a finite complex number or a finite SpherePoint; evaluation at
    infinity raises EssentialSingularityInput.
    """
    a = p.alpha
    z = _as_finite(z)
    u = (a - 1) * z / 8
    if u.real > EXP_OVERFLOW:
        # w -> infinity: T -> 1/alpha (alpha != 0), or infinity for alpha = 0
        if a == 0:
            return EvalOutcome(INFINITY, Clamp.POLE_OVERFLOW_TO_INFINITY)
        return EvalOutcome(SpherePoint.finite(1 / a), Clamp.OVERFLOW_TO_RECIP_ALPHA)
    if u.real < -EXP_OVERFLOW:
        # w -> 0: T -> 1
        return EvalOutcome(SpherePoint.finite(1 + 0j), Clamp.UNDERFLOW_TO_ONE)
    w = cmath.exp(u)
    den = a * w - 1
    if den == 0:
        return EvalOutcome(INFINITY, Clamp.POLE_OVERFLOW_TO_INFINITY)
    v = (w - 1) / den
    if abs(v) > POLE_CUTOFF:
        return EvalOutcome(INFINITY, Clamp.POLE_OVERFLOW_TO_INFINITY)
    return EvalOutcome(SpherePoint.finite(v))


def eval_value(p: TangentParam, z: complex) -> complex:
    """T_alpha(z) as a bare complex; raises PoleInput on pole blow-up."""
    out = eval_tangent(p, z)
    if out.value.is_infinity:
        raise PoleInput(f"z = {z} is (numerically) a pole of T_alpha")
    return out.value.value


def eval_derivative(p: TangentParam, z: complex) -> complex:
    """T'_alpha(z) = (alpha-1)^2 w / (8 (alpha w - 1)^2), w = e^{(alpha-1)z/8}."""
    a = p.alpha
    z = _as_finite(z)
    u = (a - 1) * z / 8
    if u.real > EXP_OVERFLOW:
        # w dominates both numerator and denominator: T' ~ (a-1)^2/(8 a^2 w) -> 0
        if a == 0:
            raise PoleInput("derivative overflow for the entire map alpha = 0")
        return 0j
    if u.real < -EXP_OVERFLOW:
        return 0j
    w = cmath.exp(u)
    den = a * w - 1
    if den == 0:
        raise PoleInput(f"z = {z} is a pole of T_alpha")
    d = (a - 1) ** 2 * w / (8 * den * den)
    if not (math.isfinite(d.real) and math.isfinite(d.imag)):
        raise PoleInput(f"derivative overflow at z = {z}")
    # the derivative blows up quadratically where the value blows up linearly
    if abs(d) > POLE_CUTOFF**2:
        raise PoleInput(f"z = {z} is (numerically) a pole of T_alpha")
    return d


def pole(p: TangentParam, k: int) -> complex:
    """The k-th pole under principal-branch indexing.

    Solves alpha * e^{(alpha-1)z/8} = 1 with the principal logarithm:
    z = 8 (-Log(alpha) + 2 pi i k) / (alpha - 1).  The labelling agrees with
    the dynamically defined one only up to a constant index shift.
    """
    a = p.alpha
    if a == 0:
        raise NoPoles("alpha = 0 gives an entire map with no poles")
    return 8 * (-cmath.log(a) + 2j * math.pi * k) / (a - 1)


def special_fixed_point(p: TangentParam) -> complex:
    """z_alpha = 1 + 1/alpha, the only candidate nonzero fixed point of
    multiplier 1/8.  It is an actual fixed point only at symmetric parameters;
    callers verify via eval_tangent."""
    if p.alpha == 0:
        raise AlphaZero("1 + 1/alpha is undefined at alpha = 0")
    return 1 + 1 / p.alpha


def symmetry_residual(p: TangentParam) -> complex:
    """Normalized residual of the basin-switching symmetry relation.

    Symmetric parameters satisfy e^{(alpha^2-1)/(8 alpha)} = 1/alpha^2.  The
    returned quantity is alpha^2 * e^{(alpha^2-1)/(8 alpha)} - 1, which has the
    same zero set but is scale-normalized (the raw difference is amplified by
    1/alpha^2 ~ 1e4 near the real symmetric parameter).
    """
    a = p.alpha
    if a == 0:
        raise AlphaZero("symmetry relation undefined at alpha = 0")
    if a == 1:
        raise AlphaIsOne("symmetry relation undefined at alpha = 1")
    return cmath.exp(symmetry_exponent(p)) - 1


def symmetry_exponent(p: TangentParam) -> complex:
    """h(alpha) = 2 Log(alpha) + (alpha^2 - 1)/(8 alpha), so that the
    symmetry residual is e^h - 1 (roots: h in 2 pi i Z)."""
    a = p.alpha
    return 2 * cmath.log(a) + (a * a - 1) / (8 * a)


def symmetry_exponent_derivative(p: TangentParam) -> complex:
    a = p.alpha
    return 2 / a + 0.125 + 1 / (8 * a * a)


def symmetry_residual_derivative(p: TangentParam) -> complex:
    """d/d alpha of symmetry_residual; used by the Newton polisher."""
    return cmath.exp(symmetry_exponent(p)) * symmetry_exponent_derivative(p)


def involution_transport(p: TangentParam, z: complex) -> tuple[TangentParam, complex]:
    """Transport (alpha, z) through the involution alpha -> 1/alpha.

    Returns (1/alpha, alpha*z).  The conjugacy L(z) = alpha*z satisfies
    alpha * T_alpha(z) = T_{1/alpha}(alpha z) wherever both sides are finite,
    and maps the singular set {1, 1/alpha} onto {alpha, 1}.
    """
    a = p.alpha
    if a == 0:
        raise AlphaZero("the involution is undefined at alpha = 0")
    return TangentParam(1 / a), a * complex(z)
