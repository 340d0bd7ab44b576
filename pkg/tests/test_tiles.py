"""Tests for the binary tile codec and colorization."""

import numpy as np
import pytest

from tandelbrot import (
    IterationSettings,
    PaletteSpec,
    TileGrid,
    Viewport,
    colorize,
    decode_tile,
    encode_tile,
    render_parameter_plane,
    to_png,
    to_ppm,
)
from tandelbrot.tiles import HEADER_SIZE, MAGIC, RECORD_SIZE


def _random_grid(rng, px, py):
    vp = Viewport(complex(rng.standard_normal(), rng.standard_normal()), 1.5, px, py)
    return TileGrid(
        viewport=vp,
        fate=rng.integers(0, 4, size=(py, px)).astype(np.uint8),
        value=rng.integers(0, 2**32, size=(py, px)).astype(np.uint32),
        aux=rng.standard_normal((py, px)).astype(np.float32),
    )


def test_layout_sizes():
    assert HEADER_SIZE == 32
    assert RECORD_SIZE == 9
    rng = np.random.default_rng(0)
    t = _random_grid(rng, 5, 7)
    data = encode_tile(t)
    assert len(data) == 32 + 5 * 7 * 9
    assert data[:4] == MAGIC


def test_header_fields_little_endian():
    rng = np.random.default_rng(1)
    t = _random_grid(rng, 3, 2)
    data = encode_tile(t)
    assert data[4:6] == (1).to_bytes(2, "little")  # version
    assert data[8:12] == (3).to_bytes(4, "little")  # px
    assert data[12:16] == (2).to_bytes(4, "little")  # py
    assert np.frombuffer(data[16:24], "<f8")[0] == t.viewport.center.real
    assert np.frombuffer(data[24:32], "<f8")[0] == t.viewport.center.imag


def test_records_are_row_major_top_first():
    rng = np.random.default_rng(2)
    t = _random_grid(rng, 4, 3)
    data = encode_tile(t)
    # first record holds pixel (0, 0) of the top row
    assert data[32] == t.fate[0, 0]
    # second record is the next pixel of the same row
    assert data[32 + 9] == t.fate[0, 1]


def test_round_trip_identity():
    rng = np.random.default_rng(3)
    for _ in range(20):
        px = int(rng.integers(1, 40))
        py = int(rng.integers(1, 40))
        t = _random_grid(rng, px, py)
        u = decode_tile(encode_tile(t), width=t.viewport.width)
        assert u == t


def test_decode_rejects_corruption():
    rng = np.random.default_rng(4)
    data = encode_tile(_random_grid(rng, 4, 4))
    with pytest.raises(ValueError):
        decode_tile(data[:10])
    with pytest.raises(ValueError):
        decode_tile(b"XXXX" + data[4:])
    with pytest.raises(ValueError):
        decode_tile(data + b"\0")


def test_encoding_is_deterministic():
    vp = Viewport(-0.005 + 0j, 0.05, 32, 32)
    g1 = render_parameter_plane("tangent", vp, IterationSettings(max_iter=1000))
    g2 = render_parameter_plane("tangent", vp, IterationSettings(max_iter=1000))
    assert encode_tile(g1) == encode_tile(g2)


def test_colorize_shapes_and_codes():
    rng = np.random.default_rng(5)
    t = _random_grid(rng, 8, 6)
    img = colorize(t, PaletteSpec())
    assert img.shape == (6, 8, 4)
    assert img.dtype == np.uint8
    assert np.all(img[..., 3] == 255)
    # inside pixels take the solid palette color
    inside = (t.fate == 1) | (t.fate == 3)
    if inside.any():
        assert np.all(img[inside, 0:3] == (0, 0, 0))
    mark = t.fate == 2
    if mark.any():
        assert np.all(img[mark, 0:3] == (255, 0, 255))


def test_png_and_ppm_outputs():
    rng = np.random.default_rng(6)
    img = colorize(_random_grid(rng, 10, 4))
    png = to_png(img)
    assert png[:8] == b"\x89PNG\r\n\x1a\n"
    ppm = to_ppm(img)
    assert ppm.startswith(b"P6\n10 4\n255\n")
    assert len(ppm) == len(b"P6\n10 4\n255\n") + 10 * 4 * 3
