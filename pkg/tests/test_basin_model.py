"""Tests for the universal constants of the conformal basin model."""

import cmath
import math
import random

import pytest

from tandelbrot import (
    eval_model_g,
    eval_model_g_derivative,
    model_constants,
    solve_pstar,
)
from tandelbrot.basin_model import _multiplier_objective
from tandelbrot.errors import PoleInput

# frozen from a converged bisection run at tol = 1e-14
P_STAR = 0.01484107990673594
T_CONST = 0.970751913377216
C_CONST = 0.6902886349583202


def test_pstar_residual():
    p = solve_pstar()
    assert abs(_multiplier_objective(p) - 0.125) < 1e-12


def test_pstar_bracket_and_value():
    p = solve_pstar()
    assert 0.01 < p < 0.02
    assert abs(p - P_STAR) < 1e-13


def test_objective_monotone():
    xs = [i / 1001 for i in range(1, 1001)]
    vals = [_multiplier_objective(x) for x in xs]
    assert all(b > a for a, b in zip(vals, vals[1:]))


def test_constants_values():
    c = model_constants()
    assert abs(c.t - (1 - c.p_star) / (1 + c.p_star)) < 1e-16
    assert abs(c.C - math.atanh(c.t) / (math.pi * c.t)) < 1e-16
    assert abs(c.t - T_CONST) < 1e-13
    assert abs(c.C - C_CONST) < 1e-13


def test_model_fixed_point_and_multiplier():
    c = model_constants()
    z = 1j * c.C * c.t
    assert abs(eval_model_g(z) - z) < 1e-12
    assert abs(eval_model_g_derivative(z) - 0.125) < 1e-10


def test_model_is_periodic():
    rng = random.Random(17)
    for _ in range(50):
        z = complex(rng.uniform(-2, 2), rng.uniform(0.05, 5))
        v = eval_model_g(z)
        assert abs(eval_model_g(z + 1) - v) < 1e-9 * (1 + abs(v))


def test_model_maps_imaginary_axis_to_itself():
    for t in (0.1, 0.7, 2.0):
        v = eval_model_g(1j * t)
        assert abs(v.real) < 1e-15
        assert v.imag > 0


def test_model_pole_input_rejected():
    with pytest.raises(PoleInput):
        eval_model_g(0.5)
    with pytest.raises(PoleInput):
        eval_model_g(-2.5)


def test_derivative_matches_finite_differences():
    h = 1e-7
    for z in (0.2 + 0.3j, -1.1 + 0.8j, 2j):
        fd = (eval_model_g(z + h) - eval_model_g(z - h)) / (2 * h)
        assert abs(eval_model_g_derivative(z) - fd) < 1e-5


def test_tolerance_validation():
    with pytest.raises(ValueError):
        solve_pstar(tol=0.5)
    with pytest.raises(ValueError):
        solve_pstar(tol=-1e-15)
