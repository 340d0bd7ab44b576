"""Deterministic colorization of fate grids and image output."""

from __future__ import annotations

import io
from dataclasses import dataclass

import numpy as np

from .kernels import FATE_CAPTURED, FATE_CYCLE, FATE_POLE, FATE_UNDECIDED
from .render import TileGrid


@dataclass(frozen=True)
class PaletteSpec:
    inside: tuple = (0, 0, 0)
    marker: tuple = (255, 0, 255)
    gradient_low: tuple = (40, 10, 90)
    gradient_high: tuple = (255, 250, 210)


def colorize(t: TileGrid, palette: PaletteSpec = PaletteSpec()) -> np.ndarray:
    """RGBA uint8 image: inside (cycle/undecided) solid, escapes on a smooth
    gradient by escape step, pole hits in the marker color."""
    py, px = t.fate.shape
    img = np.zeros((py, px, 4), dtype=np.uint8)
    img[..., 3] = 255

    inside = (t.fate == FATE_CYCLE) | (t.fate == FATE_UNDECIDED)
    img[inside, 0:3] = palette.inside

    mark = t.fate == FATE_POLE
    img[mark, 0:3] = palette.marker

    esc = t.fate == FATE_CAPTURED
    if np.any(esc):
        steps = t.value[esc].astype(np.float64)
        top = max(float(steps.max()), 1.0)
        # log scaling keeps shallow escapes from washing out the gradient
        frac = np.log1p(steps) / np.log1p(top)
        lo = np.asarray(palette.gradient_low, dtype=np.float64)
        hi = np.asarray(palette.gradient_high, dtype=np.float64)
        img[esc, 0:3] = np.clip(
            lo[None, :] + (hi - lo)[None, :] * frac[:, None], 0, 255
        ).astype(np.uint8)
    return img


def to_png(img: np.ndarray) -> bytes:
    from PIL import Image

    buf = io.BytesIO()
    Image.fromarray(img, mode="RGBA").save(buf, format="PNG")
    return buf.getvalue()


def to_ppm(img: np.ndarray) -> bytes:
    """PPM P6 fallback (alpha dropped)."""
    py, px = img.shape[:2]
    head = f"P6\n{px} {py}\n255\n".encode()
    return head + img[..., 0:3].tobytes()
