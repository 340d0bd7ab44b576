"""Newton's method for f_a(z) = z + a e^z and orbit classification of its
free asymptotic value 0.

The Newton map is N_a(z) = z - (z + a e^z)/(1 + a e^z).  Its fixed points
are the roots of f_a (all superattracting); the only free singular value is
the asymptotic value 0, reached along Re z -> -infinity.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import Optional

from .errors import AZero
from .family import EXP_OVERFLOW, INFINITY, POLE_CUTOFF, Clamp, EvalOutcome, SpherePoint
from .orbits import CycleInfo, IterationSettings, OrbitFate


@dataclass(frozen=True)
class NewtonParam:
    a: complex

    def __post_init__(self):
        object.__setattr__(self, "a", complex(self.a))
        if self.a == 0:
            raise AZero("the Newton family requires a != 0")


def eval_newton(p: NewtonParam, z: complex) -> EvalOutcome:
    """N_a(z) with tract clamping.

    Re z + ln|a| below the underflow threshold: a e^z vanishes and the value
    is the asymptotic value 0.  Above the overflow threshold the quotient
    tends to 1 and the value is z - 1.  Near 1 + a e^z = 0 the value is
    promoted to infinity.
    """
    a = p.a
    z = complex(z)
    m = z.real + math.log(abs(a))
    if m < -EXP_OVERFLOW:
        return EvalOutcome(SpherePoint.finite(0j), Clamp.UNDERFLOW_TO_ONE)
    if m > EXP_OVERFLOW:
        return EvalOutcome(SpherePoint.finite(z - 1), Clamp.OVERFLOW_TO_RECIP_ALPHA)
    e = a * cmath.exp(z)
    den = 1 + e
    if den == 0:
        return EvalOutcome(INFINITY, Clamp.POLE_OVERFLOW_TO_INFINITY)
    v = z - (z + e) / den
    if abs(v) > POLE_CUTOFF:
        return EvalOutcome(INFINITY, Clamp.POLE_OVERFLOW_TO_INFINITY)
    return EvalOutcome(SpherePoint.finite(v))


def eval_newton_derivative(p: NewtonParam, z: complex) -> complex:
    """N'_a = f f'' / (f')^2 with f = z + a e^z, f' = 1 + a e^z, f'' = a e^z."""
    a = p.a
    z = complex(z)
    m = z.real + math.log(abs(a))
    if m < -EXP_OVERFLOW:
        return 0j
    if m > EXP_OVERFLOW:
        return 1 + 0j  # f f''/(f')^2 -> 1 as |a e^z| -> infinity
    e = a * cmath.exp(z)
    den = 1 + e
    return (z + e) * e / (den * den)


def newton_pole(p: NewtonParam, k: int) -> complex:
    """k-th pole of N_a under principal-branch labelling:
    z = Log(-1/a) + 2 pi i k solves 1 + a e^z = 0."""
    return cmath.log(-1 / p.a) + 2j * math.pi * k


def residual_f(p: NewtonParam, z: complex) -> float:
    """|f_a(z)| = |z + a e^z|; roots of f_a are the Newton fixed points."""
    return abs(z + p.a * cmath.exp(z))


def classify_newton_orbit(
    p: NewtonParam, s: IterationSettings = IterationSettings()
) -> OrbitFate:
    """Iterate N_a from the asymptotic value 0 and classify the orbit.

    kind 'captured' here means convergence to a root of f_a (the fate carries
    a period-1 CycleInfo whose representative is the root); 'cycle' is an
    attracting cycle of period >= 2; 'pole' is a virtual-cycle hit.
    """
    z = 0j
    steps = 0
    still = 0
    tortoise = z
    power = 1
    lam = 0
    while steps < s.max_iter:
        out = eval_newton(p, z)
        if out.value.is_infinity:
            return OrbitFate("pole", steps + 1)
        zn = out.value.value
        steps += 1
        lam += 1
        if abs(zn - z) < 1e-10:
            still += 1
            if still >= 5 and residual_f(p, zn) < 1e-9:
                info = CycleInfo(period=1, representative=zn,
                                 multiplier=eval_newton_derivative(p, zn))
                return OrbitFate("captured", steps, info)
        else:
            still = 0
        z = zn
        if abs(z - tortoise) < s.cycle_tol and lam > 1:
            info = _confirm_newton_cycle(p, z, lam, s)
            if info is not None:
                if info.period == 1 and residual_f(p, info.representative) < 1e-9:
                    return OrbitFate("captured", steps, info)
                return OrbitFate("cycle", steps, info)
        if lam == power:
            tortoise = z
            power *= 2
            lam = 0
    return OrbitFate("undecided", steps)


def _newton_minimal_period(p: NewtonParam, rep: complex, period: int, tol: float) -> int:
    for d in range(1, period + 1):
        if period % d:
            continue
        w = rep
        ok = True
        for _ in range(d):
            out = eval_newton(p, w)
            if out.value.is_infinity:
                ok = False
                break
            w = out.value.value
        if ok and abs(w - rep) < tol:
            return d
    return period


def _confirm_newton_cycle(
    p: NewtonParam, z: complex, lam: int, s: IterationSettings
) -> Optional[CycleInfo]:
    period = _newton_minimal_period(p, z, lam, 100 * s.cycle_tol)
    info = _refine_newton_cycle(p, z, period, s)
    if info is None:
        return None
    d = _newton_minimal_period(p, info.representative, info.period, s.refine_tol * 10)
    if d != info.period:
        info = _refine_newton_cycle(p, info.representative, d, s)
        if info is None:
            return None
    if abs(info.multiplier) >= 1:
        return None
    return info


def _refine_newton_cycle(
    p: NewtonParam, guess: complex, period: int, s: IterationSettings
) -> Optional[CycleInfo]:
    z = complex(guess)
    for _ in range(80):
        w = z
        dprod = 1 + 0j
        for _ in range(period):
            dprod *= eval_newton_derivative(p, w)
            out = eval_newton(p, w)
            if out.value.is_infinity:
                return None
            w = out.value.value
        f = w - z
        if abs(f) < s.refine_tol:
            return CycleInfo(period=period, representative=z, multiplier=dprod)
        fp = dprod - 1
        if abs(fp) < 1e-300:
            # superattracting fixed point: dprod ~ 0 keeps fp away from 0,
            # so this only triggers on parabolic degeneracies
            return None
        zn = z - f / fp
        if not (math.isfinite(zn.real) and math.isfinite(zn.imag)):
            return None
        z = zn
    return None


def newton_orbit_points(p: NewtonParam, n: int):
    """First n orbit points of the free asymptotic value (starting at 0)."""
    pts = []
    z = 0j
    for _ in range(n):
        pts.append(z)
        out = eval_newton(p, z)
        if out.value.is_infinity:
            break
        z = out.value.value
    return pts[:n]
