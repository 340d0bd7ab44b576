"""The interpreted fallback backend must agree bit-for-bit with the compiled
kernels (same code, different decorator)."""

import os
import subprocess
import sys

from tandelbrot import IterationSettings, Viewport, render_parameter_plane
from tandelbrot.tiles import encode_tile

_SCRIPT = """
import sys
from tandelbrot import IterationSettings, Viewport, render_parameter_plane
from tandelbrot._accel import USING_NUMBA
from tandelbrot.tiles import encode_tile

assert not USING_NUMBA
vp = Viewport(-0.005 + 0j, 0.06, 48, 48)
g = render_parameter_plane("tangent", vp, IterationSettings(max_iter=1500))
sys.stdout.buffer.write(encode_tile(g))
"""


def test_compiled_backend_enabled_by_default():
    from tandelbrot._accel import USING_NUMBA

    assert USING_NUMBA


def test_fallback_matches_compiled_bit_for_bit():
    vp = Viewport(-0.005 + 0j, 0.06, 48, 48)
    compiled = encode_tile(
        render_parameter_plane("tangent", vp, IterationSettings(max_iter=1500))
    )
    env = dict(os.environ, TANDELBROT_NO_NUMBA="1")
    proc = subprocess.run(
        [sys.executable, "-c", _SCRIPT],
        capture_output=True,
        env=env,
        check=True,
        timeout=300,
    )
    assert proc.stdout == compiled
