"""Orbit iteration, fate classification and attracting-cycle refinement."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

from .errors import (
    DegenerateDerivative,
    InvalidSeed,
    NoConvergence,
    ParamOutsideDisk,
)
from .family import Clamp, TangentParam, eval_derivative, eval_tangent


@dataclass(frozen=True)
class IterationSettings:
    max_iter: int = 5000
    trap_radius: float = 2.0  # valid for |alpha| < 1 only
    pole_cutoff: float = 1e12
    cycle_tol: float = 1e-9
    refine_tol: float = 1e-12

    @staticmethod
    def for_rendering() -> "IterationSettings":
        return IterationSettings(max_iter=5000)

    @staticmethod
    def for_analysis() -> "IterationSettings":
        return IterationSettings(max_iter=100_000)


@dataclass(frozen=True)
class CycleInfo:
    period: int
    representative: complex
    multiplier: complex


@dataclass(frozen=True)
class OrbitFate:
    """Tagged orbit outcome; kind is one of 'captured', 'cycle', 'pole',
    'undecided'."""

    kind: str
    steps: int
    cycle: Optional[CycleInfo] = None

    @property
    def is_captured(self) -> bool:
        return self.kind == "captured"


def _step(p: TangentParam, z: complex):
    """One iteration step; returns (value, hit_infinity)."""
    out = eval_tangent(p, z)
    if out.value.is_infinity:
        return 0j, True
    if out.clamp is not Clamp.NONE:
        return out.value.value, False
    return out.value.value, False


def refine_cycle(
    p: TangentParam, guess: complex, period: int, s: IterationSettings = IterationSettings()
) -> CycleInfo:
    """Polish a periodic point by Newton's method on F(z) = T^period(z) - z.

    The multiplier is the chain-rule product of T' along the refined cycle.
    """
    if period < 1:
        raise ValueError("period must be >= 1")
    z = complex(guess)
    for _ in range(80):
        w = z
        dprod = 1 + 0j
        try:
            for _ in range(period):
                dprod *= eval_derivative(p, w)
                out = eval_tangent(p, w)
                if out.value.is_infinity:
                    raise NoConvergence("cycle refinement ran through a pole")
                w = out.value.value
        except NoConvergence:
            raise
        except Exception as exc:  # pole input, overflow
            raise NoConvergence(f"cycle refinement left the domain: {exc}") from exc
        f = w - z
        if abs(f) < s.refine_tol:
            return CycleInfo(period=period, representative=z, multiplier=dprod)
        fprime = dprod - 1
        if abs(fprime) < 1e-300:
            raise DegenerateDerivative("F'(z) vanished during refinement")
        zn = z - f / fprime
        if not (math.isfinite(zn.real) and math.isfinite(zn.imag)):
            raise NoConvergence("Newton step diverged")
        z = zn
    raise NoConvergence("cycle refinement did not converge")


def _minimal_period(p: TangentParam, rep: complex, period: int, tol: float) -> int:
    """Smallest divisor d of period with |T^d(rep) - rep| < tol."""
    for d in range(1, period + 1):
        if period % d:
            continue
        w = rep
        ok = True
        for _ in range(d):
            out = eval_tangent(p, w)
            if out.value.is_infinity:
                ok = False
                break
            w = out.value.value
        if ok and abs(w - rep) < tol:
            return d
    return period


def _try_cycle(
    p: TangentParam, z: complex, lam: int, s: IterationSettings
) -> Optional[CycleInfo]:
    """Confirm a Brent repeat: reduce to the minimal period, refine, and
    require an attracting multiplier."""
    period = _minimal_period(p, z, lam, 100 * s.cycle_tol)
    try:
        info = refine_cycle(p, z, period, s)
    except (NoConvergence, DegenerateDerivative):
        return None
    # the refined representative may admit a smaller period than the guess did
    d = _minimal_period(p, info.representative, info.period, s.refine_tol * 10)
    if d != info.period:
        try:
            info = refine_cycle(p, info.representative, d, s)
        except (NoConvergence, DegenerateDerivative):
            return None
    if abs(info.multiplier) >= 1:
        return None
    return info


def classify_orbit(
    p: TangentParam, z0: complex, s: IterationSettings = IterationSettings()
) -> OrbitFate:
    """Iterate T_alpha from z0 and classify the orbit.

    Capture by the trap disk D(0, trap_radius) is checked before every step
    (the disk is forward invariant for |alpha| < 1, so entering it means
    convergence to 0).  Cycle detection is Brent's algorithm with tolerance
    cycle_tol, confirmed by Newton refinement.
    """
    if abs(p.alpha) >= 1:
        raise ParamOutsideDisk(
            "classify_orbit requires |alpha| < 1; transport by the involution first"
        )
    z0 = complex(z0)
    if not (math.isfinite(z0.real) and math.isfinite(z0.imag)):
        raise InvalidSeed("seed must be finite")

    z = z0
    if abs(z) <= s.trap_radius:
        return OrbitFate("captured", 0)

    tortoise = z
    power = 1
    lam = 0
    steps = 0
    while steps < s.max_iter:
        z, hit_pole = _step(p, z)
        steps += 1
        lam += 1
        if hit_pole:
            return OrbitFate("pole", steps)
        if abs(z) <= s.trap_radius:
            return OrbitFate("captured", steps)
        if abs(z - tortoise) < s.cycle_tol:
            info = _try_cycle(p, z, lam, s)
            if info is not None:
                return OrbitFate("cycle", steps, info)
        if lam == power:
            tortoise = z
            power *= 2
            lam = 0
    return OrbitFate("undecided", steps)


def orbit_points(p: TangentParam, z0: complex, n: int, s: IterationSettings = IterationSettings()):
    """First n points of the orbit starting at z0 (z0 included).

    Infinity (a pole hit) terminates the list with None as sentinel.
    """
    pts = []
    z = complex(z0)
    for _ in range(n):
        pts.append(z)
        out = eval_tangent(p, z)
        if out.value.is_infinity:
            pts.append(None)
            break
        z = out.value.value
    return pts[:n]
