"""Rational approximants T_{alpha,k} = M_alpha . P_k . N_alpha and the
nested parameter sets behind the connectivity argument."""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .errors import AlphaIsOne, GridOutsideHalfDisk
from .family import EXP_OVERFLOW, INFINITY, POLE_CUTOFF, SpherePoint, TangentParam, eval_tangent


@dataclass(frozen=True)
class RationalParam:
    alpha: complex
    k: int

    def __post_init__(self):
        object.__setattr__(self, "alpha", complex(self.alpha))
        if self.alpha == 1:
            raise AlphaIsOne("the approximant family is undefined at alpha = 1")
        if self.k < 1:
            raise ValueError("k must be a positive integer")


def _power_pk(y: complex, k: int) -> complex | None:
    """P_k(y) = (1 + y/k)^k; returns None when it overflows to infinity.

    Computed as exp(k log(1 + y/k)) while |y/k| < 1 (stable for large k) and
    by binary powering otherwise (exact near y = -k)."""
    q = y / k
    if abs(q) < 1:
        e = k * cmath.log(1 + q)
        if e.real > EXP_OVERFLOW:
            return None
        if e.real < -EXP_OVERFLOW:
            return 0j
        return cmath.exp(e)
    base = 1 + q
    if base == 0:
        return 0j
    # binary powering with magnitude guard
    r = 1 + 0j
    b = base
    n = k
    while n:
        if n & 1:
            r *= b
            if not (math.isfinite(r.real) and math.isfinite(r.imag)):
                return None
        n >>= 1
        if n:
            b *= b
            if not (math.isfinite(b.real) and math.isfinite(b.imag)):
                # remaining factors only grow the magnitude further
                return None
    return r


def eval_rational(p: RationalParam, z: complex) -> SpherePoint:
    """Evaluate the degree-k approximant on the sphere, with pole promotion
    matching the tangent family's conventions."""
    a = p.alpha
    y = (a - 1) * complex(z) / 8
    P = _power_pk(y, p.k)
    if P is None:
        # P_k -> infinity: M_alpha(inf) = 1/alpha
        if a == 0:
            return INFINITY
        return SpherePoint.finite(1 / a)
    den = a * P - 1
    if den == 0:
        return INFINITY
    v = (P - 1) / den
    if abs(v) > POLE_CUTOFF:
        return INFINITY
    return SpherePoint.finite(v)


def finite_critical_point(p: RationalParam) -> complex:
    """c_{alpha,k} = -8k/(alpha - 1); the approximant maps it to 1."""
    return -8 * p.k / (p.alpha - 1)


def chordal_distance(z, w) -> float:
    """Chordal metric on the Riemann sphere; accepts SpherePoint or complex."""
    zi = z.is_infinity if isinstance(z, SpherePoint) else False
    wi = w.is_infinity if isinstance(w, SpherePoint) else False
    zv = None if zi else complex(z.value if isinstance(z, SpherePoint) else z)
    wv = None if wi else complex(w.value if isinstance(w, SpherePoint) else w)
    if zi and wi:
        return 0.0
    if zi:
        return 2 / math.sqrt(1 + abs(wv) ** 2)
    if wi:
        return 2 / math.sqrt(1 + abs(zv) ** 2)
    return 2 * abs(zv - wv) / math.sqrt((1 + abs(zv) ** 2) * (1 + abs(wv) ** 2))


def classify_an_grid(
    n: int,
    alphas: np.ndarray,
    k: int | None = None,
    delta: float | None = None,
) -> np.ndarray:
    """Boolean membership mask of A_n (or A_{n,k}, or A_n(delta)) over a grid.

    alphas is any complex array with every entry inside D(0, 1/2); the result
    has the same shape.  Membership means |T^n(1/alpha)| > 2; with delta also
    |T^j(1/alpha)| < 1/delta for all 0 <= j <= n.
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    alphas = np.asarray(alphas, dtype=np.complex128)
    if np.any(np.abs(alphas) >= 0.5):
        raise GridOutsideHalfDisk("grid parameters must satisfy |alpha| < 1/2")
    if np.any(alphas == 0):
        raise GridOutsideHalfDisk("alpha = 0 has no free value")
    from .kernels import an_mask_kernel  # deferred: numba compile on first use

    flat = alphas.ravel()
    mask = an_mask_kernel(
        flat,
        np.int64(n),
        np.int64(0 if k is None else k),
        np.float64(0.0 if delta is None else delta),
    )
    return mask.reshape(alphas.shape)


def approximation_error(
    alphas: np.ndarray, k: int, zs: np.ndarray
) -> float:
    """Sup over the sample grids of the chordal distance between the
    approximant and the tangent map."""
    worst = 0.0
    for a in np.ravel(np.asarray(alphas, dtype=np.complex128)):
        pa = TangentParam(complex(a))
        pr = RationalParam(complex(a), k)
        for z in np.ravel(np.asarray(zs, dtype=np.complex128)):
            exact = eval_tangent(pa, complex(z)).value
            approx = eval_rational(pr, complex(z))
            d = chordal_distance(exact, approx)
            if d > worst:
                worst = d
    return worst
