"""Tests for rasterization: pixel mapping, determinism, fate content."""

import numpy as np
import pytest

from tandelbrot import (
    IterationSettings,
    Viewport,
    render_dynamical_plane,
    render_parameter_plane,
)
from tandelbrot.errors import GridOutsideHalfDisk, ZeroPixelViewport
from tandelbrot.kernels import FATE_CAPTURED, FATE_CYCLE, FATE_POLE, FATE_UNDECIDED

FIG2_ALPHA = -0.021 + 0.009j
FIG5_A = -1.1627 + 0.1143j


def test_viewport_validation():
    with pytest.raises(ZeroPixelViewport):
        Viewport(0j, 1.0, 0, 10)
    with pytest.raises(ZeroPixelViewport):
        Viewport(0j, -1.0, 10, 10)


def test_pixel_mapping_formula():
    vp = Viewport(0.5 + 0.25j, 2.0, 100, 50)
    assert vp.height == 1.0
    # center of the pixel lattice maps to the viewport center
    assert abs(vp.pixel_to_complex(49.5, 24.5) - vp.center) < 1e-15
    # explicit formula at a corner pixel
    expect = vp.center + ((0 + 0.5) / 100 - 0.5) * 2.0 + 1j * ((0 + 0.5) / 50 - 0.5) * 1.0
    assert vp.pixel_to_complex(0, 0) == expect


def test_grid_matches_pixel_mapping():
    vp = Viewport(-0.3 + 0.1j, 0.8, 7, 5)
    g = vp.grid()
    assert g.shape == (5, 7)
    for j in (0, 2, 4):
        for i in (0, 3, 6):
            assert abs(g[j, i] - vp.pixel_to_complex(i, j)) < 1e-15


def test_parameter_plane_deterministic_across_workers():
    vp = Viewport(-0.005 + 0j, 0.06, 96, 96)
    s = IterationSettings(max_iter=2000)
    grids = [
        render_parameter_plane("tangent", vp, s, workers=w) for w in (1, 4, 16)
    ]
    for g in grids[1:]:
        assert g == grids[0]


def test_dynamical_plane_deterministic_across_workers():
    vp = Viewport(0j, 8.0, 64, 64)
    s = IterationSettings(max_iter=1000)
    grids = [
        render_dynamical_plane("tangent", FIG2_ALPHA, vp, s, workers=w)
        for w in (1, 4, 16)
    ]
    for g in grids[1:]:
        assert g == grids[0]


def test_zoomed_tandelbrot_window_contains_cycle_pixels():
    # window resolving the period-3 satellite near the reference parameter
    vp = Viewport(FIG2_ALPHA, 0.004, 64, 64)
    g = render_parameter_plane("tangent", vp, IterationSettings(max_iter=20000))
    cyc = g.fate == FATE_CYCLE
    assert cyc.any()
    # the reference parameter itself is the center pixel
    assert g.fate[32, 32] == FATE_CYCLE
    assert g.value[32, 32] == 3  # stored period
    assert cyc.sum() < cyc.size  # the window also sees the outside


def test_half_disk_bound_in_rendered_plane():
    # pixels outside D(0, 1/2) never carry a cycle fate
    vp = Viewport(0j, 2.0, 96, 96)
    g = render_parameter_plane("tangent", vp, IterationSettings(max_iter=2000))
    mods = np.abs(vp.grid())
    assert not np.any((g.fate == FATE_CYCLE) & (mods >= 0.5))
    # undecided pixels in the annulus 0.5 <= |alpha| < 1 would contradict the
    # half-disk bound; outside the unit disk they mean "not classified here"
    assert not np.any((g.fate == FATE_UNDECIDED) & (mods >= 0.5) & (mods < 1))


def test_escaped_dynamical_plane_has_no_cycle_pixels():
    # alpha = 0.8 lies outside the Tandelbrot set: the basin of 0 is everything
    # visible and no attracting cycle exists
    vp = Viewport(0j, 10.0, 96, 96)
    g = render_dynamical_plane("tangent", 0.8, vp, IterationSettings(max_iter=3000))
    assert not np.any(g.fate == FATE_CYCLE)
    assert np.any(g.fate == FATE_CAPTURED)


def test_cycle_dynamical_plane_shows_cycle_basin():
    # center the window on the attracting cycle (it sits near the free value
    # 1/alpha, far from the origin)
    from tandelbrot import TangentParam, classify_orbit

    p = TangentParam(FIG2_ALPHA)
    fate = classify_orbit(p, 1 / p.alpha, IterationSettings.for_analysis())
    vp = Viewport(fate.cycle.representative, 40.0, 96, 96)
    g = render_dynamical_plane(
        "tangent", FIG2_ALPHA, vp, IterationSettings(max_iter=3000)
    )
    assert np.any(g.fate == FATE_CYCLE)
    assert np.any(g.fate == FATE_CAPTURED)


def test_newton_parameter_plane_reference_window():
    vp = Viewport(FIG5_A, 0.2, 64, 64)
    g = render_parameter_plane("newton", vp, IterationSettings(max_iter=3000))
    # a non-converging (attracting cycle) region surrounds the center
    assert g.fate[32, 32] == FATE_CYCLE
    assert np.any(g.fate == FATE_CAPTURED)


def test_newton_dynamical_plane_renders():
    vp = Viewport(0j, 12.0, 64, 64)
    g = render_dynamical_plane("newton", FIG5_A, vp, IterationSettings(max_iter=2000))
    assert np.any(g.fate == FATE_CYCLE)


def test_an_mask_plane():
    vp = Viewport(0.0001 + 0.0001j, 0.6, 48, 48)
    g0 = render_parameter_plane("an_mask", vp, n=0)
    assert np.all(g0.value == 1)
    assert np.all(g0.fate == FATE_UNDECIDED)
    g3 = render_parameter_plane("an_mask", vp, n=3)
    assert np.any(g3.value == 0)
    # nesting visible at the tile level
    assert not np.any((g3.value == 1) & (g0.value == 0))


def test_an_mask_viewport_must_fit_half_disk():
    vp = Viewport(0j, 2.0, 16, 16)
    with pytest.raises(GridOutsideHalfDisk):
        render_parameter_plane("an_mask", vp, n=1)


def test_unknown_family_rejected():
    vp = Viewport(0j, 1.0, 8, 8)
    with pytest.raises(ValueError):
        render_parameter_plane("mandelbrot", vp)
    with pytest.raises(ValueError):
        render_dynamical_plane("mandelbrot", 0.3, vp)


def test_downsample_coherence():
    # halving the resolution samples every other pixel center's neighborhood;
    # fates at shared subregions broadly agree (identical center columns)
    vp_hi = Viewport(-0.005 + 0j, 0.05, 128, 128)
    vp_lo = Viewport(-0.005 + 0j, 0.05, 64, 64)
    s = IterationSettings(max_iter=5000)
    hi = render_parameter_plane("tangent", vp_hi, s)
    lo = render_parameter_plane("tangent", vp_lo, s)
    inside_hi = (hi.fate == FATE_CYCLE) | (hi.fate == FATE_UNDECIDED)
    inside_lo = (lo.fate == FATE_CYCLE) | (lo.fate == FATE_UNDECIDED)
    # block-reduce the fine mask and compare where the coarse grid is inside:
    # every coarse inside pixel should have inside pixels in its 2x2 block
    blocks = inside_hi.reshape(64, 2, 64, 2).any(axis=(1, 3))
    agree = np.logical_and(inside_lo, blocks).sum()
    assert agree >= 0.9 * inside_lo.sum()


def test_pole_fate_marks_exact_pole_pixel():
    # a 3x3 viewport centered on a pole puts the pole on the middle pixel
    from tandelbrot import TangentParam, pole

    z_pole = pole(TangentParam(0.2), 0)
    vp = Viewport(z_pole, 1e-3, 3, 3)
    g = render_dynamical_plane("tangent", 0.2, vp, IterationSettings(max_iter=1000))
    assert g.fate[1, 1] == FATE_POLE
