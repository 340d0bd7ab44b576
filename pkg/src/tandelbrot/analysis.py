"""Per-parameter analysis: membership, solvers and the multiplier map."""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import List, Optional

from .errors import (
    AlphaIsOne,
    AlphaZero,
    ContinuationLost,
    DerivativeThroughPole,
    NoConvergence,
    NotHyperbolic,
    ParamOutsideDisk,
)
from .family import (
    TangentParam,
    eval_derivative,
    eval_tangent,
    pole,
    symmetry_exponent,
    symmetry_exponent_derivative,
    symmetry_residual,
)
from .orbits import CycleInfo, IterationSettings, OrbitFate, classify_orbit


@dataclass(frozen=True)
class Membership:
    """Tandelbrot membership of a parameter.

    in_t        -- orbit of 1/alpha did not fall into the trap disk
    tentative   -- True when max_iter was exhausted (numerical inclusion)
    escape_step -- step at which the orbit entered the trap disk (NotInT only)
    """

    in_t: bool
    tentative: bool = False
    escape_step: Optional[int] = None

    @property
    def label(self) -> str:
        return "InT" if self.in_t else "NotInT"


@dataclass(frozen=True)
class ParamReport:
    alpha: complex
    membership: Membership
    fate: OrbitFate
    cycle: Optional[CycleInfo]
    symmetry_residual: complex
    nearest_poles: List[complex]


def _require_unit_disk(alpha: complex) -> TangentParam:
    if alpha == 0:
        raise AlphaZero("the free value 1/alpha is undefined at alpha = 0")
    p = TangentParam(alpha)
    if abs(alpha) >= 1:
        raise ParamOutsideDisk("membership requires |alpha| < 1")
    return p


def tandelbrot_membership(
    alpha: complex, s: IterationSettings = IterationSettings()
) -> Membership:
    """Classify the orbit of the free asymptotic value 1/alpha.

    Capture by the trap disk is definitive escape from the Tandelbrot set.
    A pole hit is a virtual cycle: the parameter is reported inside.
    """
    p = _require_unit_disk(alpha)
    fate = classify_orbit(p, 1 / p.alpha, s)
    if fate.kind == "captured":
        return Membership(in_t=False, escape_step=fate.steps)
    if fate.kind == "undecided":
        return Membership(in_t=True, tentative=True)
    return Membership(in_t=True)


def _free_orbit_point(p: TangentParam, n: int):
    """T_alpha^n(1/alpha); returns (value, clamped) or (None, _) on a pole."""
    z = 1 / p.alpha
    clamped = False
    for _ in range(n):
        out = eval_tangent(p, z)
        if out.value.is_infinity:
            return None, clamped
        if out.clamp.value != "none":
            clamped = True
        z = out.value.value
    return z, clamped


def solve_virtual_cycle(
    n: int, alpha_guess: complex, s: IterationSettings = IterationSettings()
) -> complex:
    """Solve for a parameter whose free orbit hits a pole at step n.

    The objective is the pole relation at the (n-1)-st iterate:
    g(alpha) = alpha * exp((alpha-1) * T_alpha^{n-1}(1/alpha) / 8) - 1,
    driven to zero by complex secant iteration in the parameter.
    """
    if n < 1:
        raise ValueError("n must be >= 1")

    def objective(a: complex) -> complex:
        p = TangentParam(a)
        z, clamped = _free_orbit_point(p, n - 1)
        if z is None or clamped:
            raise DerivativeThroughPole(
                "an intermediate iterate clamped; objective invalid here"
            )
        return a * cmath.exp((a - 1) * z / 8) - 1

    a0 = complex(alpha_guess)
    a1 = a0 * (1 + 1e-7) + 1e-9
    f0 = objective(a0)
    try:
        f1 = objective(a1)
    except DerivativeThroughPole:
        a1 = a0 * (1 - 1e-7) - 1e-9
        f1 = objective(a1)
    for _ in range(200):
        if abs(f1) < 1e-13:
            break
        if f1 == f0:
            raise NoConvergence("secant stalled: flat objective")
        a2 = a1 - f1 * (a1 - a0) / (f1 - f0)
        if not (math.isfinite(a2.real) and math.isfinite(a2.imag)):
            raise NoConvergence("secant step diverged")
        a0, f0 = a1, f1
        a1 = a2
        try:
            f1 = objective(a1)
        except DerivativeThroughPole as exc:
            raise NoConvergence(f"secant walked into a clamped region: {exc}") from exc
    else:
        raise NoConvergence("virtual-cycle solve did not converge")

    # verify: the n-th iterate must blow up at a pole of T_alpha
    p = TangentParam(a1)
    z, _ = _free_orbit_point(p, n - 1)
    if z is None:
        # the orbit already hit a pole earlier than requested
        raise NoConvergence("orbit hit a pole before step n")
    k = round(((a1 - 1) * z / 8 + cmath.log(a1)).imag / (2 * math.pi))
    if abs(z - pole(p, k)) >= 1e-9 * (1 + abs(z)):
        raise NoConvergence("solution does not satisfy the pole relation")
    return a1


def find_symmetry_parameters(
    box: tuple[float, float, float, float], seeds_per_axis: int = 40
) -> List[complex]:
    """All roots of the symmetry residual in box = (re0, re1, im0, im1).

    Grid seeding followed by Newton polishing; each returned root satisfies
    |residual| < 1e-12.  The box must avoid alpha = 0 and alpha = 1.
    """
    re0, re1, im0, im1 = box
    roots: List[complex] = []
    for i in range(seeds_per_axis):
        for j in range(seeds_per_axis):
            a = complex(
                re0 + (i + 0.5) * (re1 - re0) / seeds_per_axis,
                im0 + (j + 0.5) * (im1 - im0) / seeds_per_axis,
            )
            if abs(a) < 1e-12 or abs(a - 1) < 1e-12:
                continue
            try:
                root = _polish_symmetry_root(a)
            except (NoConvergence, AlphaZero, AlphaIsOne, ZeroDivisionError):
                continue
            if not (re0 - 1e-12 <= root.real <= re1 + 1e-12):
                continue
            if not (im0 - 1e-12 <= root.imag <= im1 + 1e-12):
                continue
            if all(abs(root - r) > 1e-8 for r in roots):
                roots.append(root)
    roots.sort(key=lambda r: (r.real, r.imag))
    return roots


def _polish_symmetry_root(a: complex, max_steps: int = 60) -> complex:
    # Newton on e^h - 1 via the step (1 - e^{-h})/h', which stays finite
    # when Re h is large positive (the residual itself would overflow)
    for _ in range(max_steps):
        if abs(a) < 1e-12 or abs(a - 1) < 1e-12:
            raise NoConvergence("iterate hit an excluded parameter")
        p = TangentParam(a)
        h = symmetry_exponent(p)
        if h.real < -700:
            raise NoConvergence("residual pinned at -1; Newton step degenerate")
        if h.real < 700 and abs(cmath.exp(h) - 1) < 1e-13:
            return a
        hp = symmetry_exponent_derivative(p)
        if hp == 0:
            raise NoConvergence("vanishing derivative")
        step = (1 - cmath.exp(-h)) / hp
        if not (math.isfinite(step.real) and math.isfinite(step.imag)):
            raise NoConvergence("non-finite Newton step")
        a = a - step
    raise NoConvergence("symmetry root polishing did not converge")


def _real_fixed_point(alpha: float, x0: float) -> Optional[float]:
    """Newton solve for the nonzero real fixed point of T_alpha, x < -2.5.

    Returns None when the branch is lost (divergence, or collapse onto the
    fixed point 0)."""
    p = TangentParam(alpha)
    x = x0
    for _ in range(200):
        try:
            out = eval_tangent(p, x)
            if out.value.is_infinity:
                return None
            f = out.value.value.real - x
            fp = eval_derivative(p, x).real - 1
        except Exception:
            return None
        if fp == 0:
            return None
        xn = x - f / fp
        if not math.isfinite(xn):
            return None
        if abs(xn - x) < 1e-13 * (1 + abs(x)):
            x = xn
            break
        x = xn
    else:
        return None
    if x > -2.5:  # collapsed toward the 0 fixed point
        return None
    out = eval_tangent(p, x)
    if out.value.is_infinity or abs(out.value.value.real - x) > 1e-8 * (1 + abs(x)):
        return None
    return x


def main_component_left_endpoint(tol: float = 1e-6) -> float:
    """Left endpoint alpha_0 of the real interval of the main component.

    Continues the nonzero real attracting fixed point p(alpha) from
    alpha = -0.001 toward more negative alpha with adaptive steps, then
    bisects on the neutrality condition |T'(p)| = 1 (a saddle-node on the
    real line, so the condition is T'(p) -> 1 from below).
    """
    alpha = -0.001
    x = _real_fixed_point(alpha, -1000.0)
    if x is None:
        raise ContinuationLost("could not start the fixed-point branch")

    step = 1e-4
    bad = None
    while step > 1e-15:
        cand = alpha - step
        xc = _real_fixed_point(cand, x)
        m = None if xc is None else abs(eval_derivative(TangentParam(cand), xc))
        if xc is None or m >= 1:
            bad = cand
            step /= 2
            continue
        alpha, x = cand, xc
        if 1 - m < tol:
            break
        step = min(step * 2, 1e-3)
    if bad is None:
        bad = alpha - max(step, 1e-15) * 2

    # bisect [bad, alpha] on branch existence / neutrality
    good = alpha
    for _ in range(200):
        mid = 0.5 * (bad + good)
        xm = _real_fixed_point(mid, x)
        m = None if xm is None else abs(eval_derivative(TangentParam(mid), xm))
        if xm is None or m >= 1:
            bad = mid
        else:
            good, x = mid, xm
            if 1 - m < tol:
                break
        if good - bad < 1e-16:
            break
    m = abs(eval_derivative(TangentParam(good), x))
    if not abs(m - 1) < 10 * tol:
        raise ContinuationLost(f"neutrality not bracketed: |T'| = {m}")
    return good


def multiplier_map(
    alpha: complex, s: IterationSettings = IterationSettings.for_analysis()
) -> complex:
    """Multiplier of the attracting cycle capturing the free value 1/alpha."""
    p = _require_unit_disk(alpha)
    fate = classify_orbit(p, 1 / p.alpha, s)
    if fate.kind != "cycle":
        raise NotHyperbolic(f"free orbit fate is '{fate.kind}', not a cycle")
    rho = fate.cycle.multiplier
    if not 0 < abs(rho) < 1:
        raise NotHyperbolic(f"reported multiplier {rho} is not in the punctured disk")
    return rho


def analyze_parameter(
    alpha: complex, s: IterationSettings = IterationSettings()
) -> ParamReport:
    """Aggregate per-parameter report; missing sub-results are recorded absent."""
    if alpha == 0:
        raise AlphaZero("cannot analyze alpha = 0")
    if alpha == 1:
        raise AlphaIsOne("cannot analyze alpha = 1")
    p = _require_unit_disk(alpha)
    fate = classify_orbit(p, 1 / p.alpha, s)
    if fate.kind == "captured":
        membership = Membership(in_t=False, escape_step=fate.steps)
    elif fate.kind == "undecided":
        membership = Membership(in_t=True, tentative=True)
    else:
        membership = Membership(in_t=True)
    poles = sorted((pole(p, k) for k in range(-2, 3)), key=abs)
    return ParamReport(
        alpha=complex(alpha),
        membership=membership,
        fate=fate,
        cycle=fate.cycle,
        symmetry_residual=symmetry_residual(p),
        nearest_poles=poles,
    )
