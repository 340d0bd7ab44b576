"""Parallel rasterization of parameter and dynamical planes."""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .errors import GridOutsideHalfDisk, ZeroPixelViewport
from .kernels import (
    an_mask_kernel,
    newton_dyn_band,
    newton_param_band,
    tangent_dyn_band,
    tangent_param_band,
)
from .orbits import IterationSettings


@dataclass(frozen=True)
class Viewport:
    """Rectangular complex window with pixel resolution.

    Pixel (i, j) maps to
        center + ((i+0.5)/px - 0.5)*width + 1j*((j+0.5)/py - 0.5)*height
    with height = width*py/px and row 0 stored first (top row).
    """

    center: complex
    width: float
    px: int
    py: int

    def __post_init__(self):
        if self.px <= 0 or self.py <= 0:
            raise ZeroPixelViewport("viewport needs px > 0 and py > 0")
        if not self.width > 0:
            raise ZeroPixelViewport("viewport needs width > 0")

    @property
    def height(self) -> float:
        return self.width * self.py / self.px

    def pixel_to_complex(self, i: float, j: float) -> complex:
        return (
            self.center
            + ((i + 0.5) / self.px - 0.5) * self.width
            + 1j * ((j + 0.5) / self.py - 0.5) * self.height
        )

    def grid(self) -> np.ndarray:
        """(py, px) complex array of pixel-center coordinates, row 0 first."""
        i = (np.arange(self.px) + 0.5) / self.px - 0.5
        j = (np.arange(self.py) + 0.5) / self.py - 0.5
        return (
            self.center
            + i[None, :] * self.width
            + 1j * j[:, None] * self.height
        ).astype(np.complex128)


@dataclass
class TileGrid:
    viewport: Viewport
    fate: np.ndarray  # uint8, shape (py, px)
    value: np.ndarray  # uint32
    aux: np.ndarray  # float32

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, TileGrid)
            and self.viewport == other.viewport
            and np.array_equal(self.fate, other.fate)
            and np.array_equal(self.value, other.value)
            and np.array_equal(self.aux, other.aux)
        )


def worker_count(workers: Optional[int] = None) -> int:
    if workers is not None:
        return max(1, int(workers))
    env = os.environ.get("TANDELBROT_THREADS", "").strip()
    if env:
        return max(1, int(env))
    return min(8, os.cpu_count() or 1)


def _run_banded(kernel_call, py: int, workers: int) -> None:
    """Run kernel_call(row_start, row_end) over disjoint row bands."""
    workers = min(workers, py)
    if workers <= 1:
        kernel_call(0, py)
        return
    bounds = [round(b * py / workers) for b in range(workers + 1)]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        futs = [
            pool.submit(kernel_call, bounds[b], bounds[b + 1])
            for b in range(workers)
            if bounds[b + 1] > bounds[b]
        ]
        for f in futs:
            f.result()


def _alloc(vp: Viewport):
    fate = np.empty((vp.py, vp.px), dtype=np.uint8)
    value = np.empty((vp.py, vp.px), dtype=np.uint32)
    aux = np.empty((vp.py, vp.px), dtype=np.float32)
    return fate, value, aux


def render_parameter_plane(
    family: str,
    vp: Viewport,
    s: IterationSettings = IterationSettings.for_rendering(),
    workers: Optional[int] = None,
    n: int = 0,
    k: Optional[int] = None,
    delta: Optional[float] = None,
) -> TileGrid:
    """Render a parameter plane: family 'tangent', 'newton' or 'an_mask'.

    Pixels are independent; work is split into row bands over a thread pool
    (the kernels release the GIL).  Identical inputs produce identical grids
    regardless of the worker count.
    """
    grid = vp.grid()
    fate, value, aux = _alloc(vp)
    nw = worker_count(workers)

    if family == "tangent":

        def call(r0, r1):
            tangent_param_band(
                grid[r0:r1].ravel(),
                fate[r0:r1].ravel(),
                value[r0:r1].ravel(),
                aux[r0:r1].ravel(),
                np.int64(s.max_iter),
                np.float64(s.trap_radius),
                np.float64(s.pole_cutoff),
                np.float64(s.cycle_tol),
            )

    elif family == "newton":

        def call(r0, r1):
            newton_param_band(
                grid[r0:r1].ravel(),
                fate[r0:r1].ravel(),
                value[r0:r1].ravel(),
                aux[r0:r1].ravel(),
                np.int64(s.max_iter),
                np.float64(s.pole_cutoff),
                np.float64(s.cycle_tol),
            )

    elif family == "an_mask":
        if np.any(np.abs(grid) >= 0.5) or np.any(grid == 0):
            raise GridOutsideHalfDisk("an_mask viewport must lie inside D(0, 1/2)")

        def call(r0, r1):
            mask = an_mask_kernel(
                grid[r0:r1].ravel(),
                np.int64(n),
                np.int64(k or 0),
                np.float64(delta or 0.0),
            )
            # member pixels render as inside (undecided code), others escaped
            band_f = np.where(mask == 1, np.uint8(3), np.uint8(0))
            fate[r0:r1].ravel()[:] = band_f
            value[r0:r1].ravel()[:] = mask.astype(np.uint32)
            aux[r0:r1].ravel()[:] = 0.0

    else:
        raise ValueError(f"unknown family {family!r}")

    _run_banded(call, vp.py, nw)
    return TileGrid(vp, fate, value, aux)


def render_dynamical_plane(
    family: str,
    param: complex,
    vp: Viewport,
    s: IterationSettings = IterationSettings.for_rendering(),
    workers: Optional[int] = None,
) -> TileGrid:
    """Render the dynamical plane of one map ('tangent' alpha or 'newton' a)."""
    grid = vp.grid()
    fate, value, aux = _alloc(vp)
    nw = worker_count(workers)
    param = complex(param)

    if family == "tangent":
        if param == 1:
            raise ValueError("alpha = 1 is outside the family")

        def call(r0, r1):
            tangent_dyn_band(
                param,
                grid[r0:r1].ravel(),
                fate[r0:r1].ravel(),
                value[r0:r1].ravel(),
                aux[r0:r1].ravel(),
                np.int64(s.max_iter),
                np.float64(s.trap_radius),
                np.float64(s.pole_cutoff),
                np.float64(s.cycle_tol),
            )

    elif family == "newton":
        if param == 0:
            raise ValueError("a = 0 is outside the Newton family")

        def call(r0, r1):
            newton_dyn_band(
                param,
                grid[r0:r1].ravel(),
                fate[r0:r1].ravel(),
                value[r0:r1].ravel(),
                aux[r0:r1].ravel(),
                np.int64(s.max_iter),
                np.float64(s.pole_cutoff),
                np.float64(s.cycle_tol),
            )

    else:
        raise ValueError(f"unknown family {family!r}")

    _run_banded(call, vp.py, nw)
    return TileGrid(vp, fate, value, aux)
