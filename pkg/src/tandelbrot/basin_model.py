"""Universal constants of the conformal model on the basin of 0.

Every map of the family is conformally conjugate on its basin of 0 to
g(z) = C tan(pi z) on the upper half plane.  The constants are determined by
the multiplier 1/8 alone:

    2 p* ln(1/p*) / (1 - p*^2) = 1/8,   t = (1 - p*)/(1 + p*),
    C = atanh(t) / (pi t),

and g fixes i*C*t with derivative 1/8.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from functools import lru_cache

from .errors import PoleInput


def _multiplier_objective(x: float) -> float:
    return 2 * x * math.log(1 / x) / (1 - x * x)


def solve_pstar(tol: float = 1e-14) -> float:
    """Unique root of 2x ln(1/x)/(1-x^2) = 1/8 in (0, 1), by bisection.

    The objective is strictly increasing on (0, 1), so bisection on a fixed
    bracket is unconditionally convergent.
    """
    if not 0 < tol < 1e-6:
        raise ValueError("tol must be in (0, 1e-6)")
    lo, hi = 1e-12, 1 - 1e-12
    while _multiplier_objective(lo) > 0.125:
        lo /= 2
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        if _multiplier_objective(mid) < 0.125:
            lo = mid
        else:
            hi = mid
        if hi - lo < tol * 1e-3 and abs(_multiplier_objective(mid) - 0.125) < tol:
            break
    return 0.5 * (lo + hi)


@dataclass(frozen=True)
class ModelConstants:
    p_star: float
    t: float
    C: float


@lru_cache(maxsize=1)
def model_constants() -> ModelConstants:
    p = solve_pstar()
    t = (1 - p) / (1 + p)
    C = math.atanh(t) / (math.pi * t)
    return ModelConstants(p_star=p, t=t, C=C)


def model_constant_C() -> float:
    return model_constants().C


def eval_model_g(z: complex) -> complex:
    """g(z) = C tan(pi z); poles at 1/2 + k on the real line."""
    z = complex(z)
    if z.imag == 0 and abs((z.real - 0.5) - round(z.real - 0.5)) < 1e-15:
        raise PoleInput("z is a pole of tan(pi z)")
    C = model_constant_C()
    v = C * cmath.tan(math.pi * z)
    if not (math.isfinite(v.real) and math.isfinite(v.imag)):
        raise PoleInput("tan(pi z) overflowed")
    return v


def eval_model_g_derivative(z: complex) -> complex:
    C = model_constant_C()
    c = cmath.cos(math.pi * z)
    return C * math.pi / (c * c)
