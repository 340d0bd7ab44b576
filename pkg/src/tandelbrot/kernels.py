"""Per-pixel iteration kernels.

Everything here is numba-compiled unless TANDELBROT_NO_NUMBA is set, in
which case the same functions run interpreted (bit-identical results).
Fate codes match the tile format: 0 captured/escaped, 1 attracting cycle,
2 pole hit, 3 undecided.  `value` carries the escape step (fate 0/2) or the
cycle period (fate 1); `aux` carries |multiplier| when known.
"""

import cmath
import math

import numpy as np

from ._accel import jit

FATE_CAPTURED = 0
FATE_CYCLE = 1
FATE_POLE = 2
FATE_UNDECIDED = 3

_EXP_OVERFLOW = 709.0


@jit
def tangent_step(alpha, z, pole_cutoff):
    """One step of T_alpha; returns (value, hit_infinity)."""
    u = (alpha - 1) * z / 8
    if u.real > _EXP_OVERFLOW:
        if alpha == 0:
            return 0j, True
        return 1 / alpha, False
    if u.real < -_EXP_OVERFLOW:
        return complex(1.0, 0.0), False
    w = cmath.exp(u)
    den = alpha * w - 1
    if den == 0:
        return 0j, True
    v = (w - 1) / den
    if abs(v) > pole_cutoff:
        return 0j, True
    return v, False


@jit
def tangent_derivative(alpha, z):
    u = (alpha - 1) * z / 8
    if u.real > _EXP_OVERFLOW or u.real < -_EXP_OVERFLOW:
        return 0j
    w = cmath.exp(u)
    den = alpha * w - 1
    if den == 0:
        return 0j
    return (alpha - 1) ** 2 * w / (8 * den * den)


@jit
def _tangent_minimal_period(alpha, rep, period, tol, pole_cutoff):
    for d in range(1, period + 1):
        if period % d != 0:
            continue
        w = rep
        ok = True
        for _ in range(d):
            w, hit = tangent_step(alpha, w, pole_cutoff)
            if hit:
                ok = False
                break
        if ok and abs(w - rep) < tol:
            return d
    return period


@jit
def tangent_orbit_fate(alpha, z0, max_iter, trap_radius, pole_cutoff, cycle_tol):
    """Classify the orbit of z0 under T_alpha.

    Returns (fate, value, aux).  Brent cycle detection with divisor-based
    period reduction; a detected cycle is accepted only if the chain-rule
    multiplier along it is attracting.
    """
    z = z0
    if abs(z) <= trap_radius:
        return FATE_CAPTURED, 0, 0.0
    tortoise = z
    power = 1
    lam = 0
    steps = 0
    while steps < max_iter:
        z, hit = tangent_step(alpha, z, pole_cutoff)
        steps += 1
        lam += 1
        if hit:
            return FATE_POLE, steps, 0.0
        if abs(z) <= trap_radius:
            return FATE_CAPTURED, steps, 0.0
        if abs(z - tortoise) < cycle_tol:
            period = _tangent_minimal_period(alpha, z, lam, 100 * cycle_tol, pole_cutoff)
            mult = complex(1.0, 0.0)
            w = z
            ok = True
            for _ in range(period):
                mult *= tangent_derivative(alpha, w)
                w, h2 = tangent_step(alpha, w, pole_cutoff)
                if h2:
                    ok = False
                    break
            if ok and abs(mult) < 1.0:
                return FATE_CYCLE, period, abs(mult)
        if lam == power:
            tortoise = z
            power *= 2
            lam = 0
    return FATE_UNDECIDED, steps, 0.0


@jit
def tangent_param_band(alphas, fate, value, aux, max_iter, trap_radius, pole_cutoff, cycle_tol):
    """Parameter-plane fates of the free value 1/alpha over a flat array.

    Pixels with |alpha| >= 1 or alpha in {0, 1} are marked undecided."""
    for i in range(alphas.shape[0]):
        a = alphas[i]
        if a == 0 or a == 1 or abs(a) >= 1.0:
            fate[i] = FATE_UNDECIDED
            value[i] = 0
            aux[i] = 0.0
            continue
        f, v, x = tangent_orbit_fate(a, 1 / a, max_iter, trap_radius, pole_cutoff, cycle_tol)
        fate[i] = f
        value[i] = v
        aux[i] = x


@jit
def tangent_dyn_band(alpha, zs, fate, value, aux, max_iter, trap_radius, pole_cutoff, cycle_tol):
    """Dynamical-plane fates of the pixel points under T_alpha."""
    for i in range(zs.shape[0]):
        f, v, x = tangent_orbit_fate(alpha, zs[i], max_iter, trap_radius, pole_cutoff, cycle_tol)
        fate[i] = f
        value[i] = v
        aux[i] = x


@jit
def newton_step(a, z, pole_cutoff):
    """One step of the Newton map of f_a(z) = z + a e^z."""
    m = z.real + math.log(abs(a))
    if m < -_EXP_OVERFLOW:
        return 0j, False
    if m > _EXP_OVERFLOW:
        return z - 1, False
    e = a * cmath.exp(z)
    den = 1 + e
    if den == 0:
        return 0j, True
    v = z - (z + e) / den
    if abs(v) > pole_cutoff:
        return 0j, True
    return v, False


@jit
def newton_derivative(a, z):
    m = z.real + math.log(abs(a))
    if m < -_EXP_OVERFLOW:
        return 0j
    if m > _EXP_OVERFLOW:
        return complex(1.0, 0.0)
    e = a * cmath.exp(z)
    den = 1 + e
    return (z + e) * e / (den * den)


@jit
def _newton_residual(a, z):
    m = z.real + math.log(abs(a))
    if m > _EXP_OVERFLOW:
        return math.inf
    return abs(z + a * cmath.exp(z))


@jit
def _newton_minimal_period(a, rep, period, tol, pole_cutoff):
    for d in range(1, period + 1):
        if period % d != 0:
            continue
        w = rep
        ok = True
        for _ in range(d):
            w, hit = newton_step(a, w, pole_cutoff)
            if hit:
                ok = False
                break
        if ok and abs(w - rep) < tol:
            return d
    return period


@jit
def newton_orbit_fate(a, z0, max_iter, pole_cutoff, cycle_tol):
    """Fate of an orbit under N_a: root convergence, cycle, pole, undecided."""
    z = z0
    tortoise = z
    power = 1
    lam = 0
    steps = 0
    still = 0
    while steps < max_iter:
        zn, hit = newton_step(a, z, pole_cutoff)
        steps += 1
        lam += 1
        if hit:
            return FATE_POLE, steps, 0.0
        if abs(zn - z) < 1e-10:
            still += 1
            if still >= 5 and _newton_residual(a, zn) < 1e-9:
                return FATE_CAPTURED, steps, abs(newton_derivative(a, zn))
        else:
            still = 0
        z = zn
        if abs(z - tortoise) < cycle_tol and lam > 1:
            period = _newton_minimal_period(a, z, lam, 100 * cycle_tol, pole_cutoff)
            mult = complex(1.0, 0.0)
            w = z
            ok = True
            for _ in range(period):
                mult *= newton_derivative(a, w)
                w, h2 = newton_step(a, w, pole_cutoff)
                if h2:
                    ok = False
                    break
            if ok and abs(mult) < 1.0:
                if period == 1 and _newton_residual(a, z) < 1e-9:
                    return FATE_CAPTURED, steps, abs(mult)
                return FATE_CYCLE, period, abs(mult)
        if lam == power:
            tortoise = z
            power *= 2
            lam = 0
    return FATE_UNDECIDED, steps, 0.0


@jit
def newton_param_band(avals, fate, value, aux, max_iter, pole_cutoff, cycle_tol):
    for i in range(avals.shape[0]):
        a = avals[i]
        if a == 0:
            fate[i] = FATE_UNDECIDED
            value[i] = 0
            aux[i] = 0.0
            continue
        f, v, x = newton_orbit_fate(a, 0j, max_iter, pole_cutoff, cycle_tol)
        fate[i] = f
        value[i] = v
        aux[i] = x


@jit
def newton_dyn_band(a, zs, fate, value, aux, max_iter, pole_cutoff, cycle_tol):
    for i in range(zs.shape[0]):
        f, v, x = newton_orbit_fate(a, zs[i], max_iter, pole_cutoff, cycle_tol)
        fate[i] = f
        value[i] = v
        aux[i] = x


@jit
def rational_step(alpha, k, z, pole_cutoff):
    """One step of the degree-k approximant; returns (value, hit_infinity).

    P_k(y) = (1 + y/k)^k via exp(k log(1 + y/k)) when |y/k| < 1, binary
    powering otherwise."""
    y = (alpha - 1) * z / 8
    q = y / k
    overflow = False
    P = complex(1.0, 0.0)
    if abs(q) < 1:
        e = k * cmath.log(1 + q)
        if e.real > _EXP_OVERFLOW:
            overflow = True
        elif e.real < -_EXP_OVERFLOW:
            P = 0j
        else:
            P = cmath.exp(e)
    else:
        base = 1 + q
        if base == 0:
            P = 0j
        else:
            r = complex(1.0, 0.0)
            b = base
            n = k
            while n > 0:
                if n & 1:
                    r = r * b
                    if not (math.isfinite(r.real) and math.isfinite(r.imag)):
                        overflow = True
                        break
                n >>= 1
                if n > 0:
                    b = b * b
                    if not (math.isfinite(b.real) and math.isfinite(b.imag)):
                        overflow = True
                        break
            if not overflow:
                P = r
    if overflow:
        if alpha == 0:
            return 0j, True
        return 1 / alpha, False
    den = alpha * P - 1
    if den == 0:
        return 0j, True
    v = (P - 1) / den
    if abs(v) > pole_cutoff:
        return 0j, True
    return v, False


@jit
def an_mask_kernel(alphas, n, k, delta):
    """Membership mask of A_n (k = 0: tangent map; k > 0: approximant).

    delta > 0 additionally requires |T^j(1/alpha)| < 1/delta for 0 <= j <= n.
    A pole hit is absorbing at infinity: it lies in V but violates any delta
    bound."""
    out = np.zeros(alphas.shape[0], dtype=np.uint8)
    bound = 1e308 if delta <= 0 else 1 / delta
    for i in range(alphas.shape[0]):
        a = alphas[i]
        z = 1 / a
        at_inf = False
        ok_delta = True
        for _ in range(n):
            if at_inf:
                break
            if abs(z) >= bound:
                ok_delta = False
                break
            if k == 0:
                z, hit = tangent_step(a, z, 1e12)
            else:
                z, hit = rational_step(a, k, z, 1e12)
            if hit:
                at_inf = True
        if not ok_delta:
            out[i] = 0
            continue
        if at_inf:
            out[i] = 1 if delta <= 0 else 0
            continue
        if abs(z) >= bound:
            out[i] = 0
            continue
        out[i] = 1 if abs(z) > 2.0 else 0
    return out
