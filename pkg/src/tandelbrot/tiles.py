"""Bit-exact binary tile codec.

Layout (little-endian):
  magic "TNDL" (4 bytes), version u16 = 1, reserved u16 = 0,
  px u32, py u32, center_re f64, center_im f64,
then px*py records of {fate u8, value u32, aux f32}, row-major, top row
first.  Header is 32 bytes; each record is 9 bytes.
"""

from __future__ import annotations

import struct

import numpy as np

from .render import TileGrid, Viewport

MAGIC = b"TNDL"
VERSION = 1
HEADER = struct.Struct("<4sHHIIdd")
HEADER_SIZE = HEADER.size  # 32
RECORD_SIZE = 9

_RECORD_DTYPE = np.dtype(
    [("fate", "<u1"), ("value", "<u4"), ("aux", "<f4")], align=False
)


def encode_tile(t: TileGrid, width: float | None = None) -> bytes:
    """Serialize a TileGrid; decode_tile(encode_tile(t), width) round-trips."""
    vp = t.viewport
    head = HEADER.pack(
        MAGIC, VERSION, 0, vp.px, vp.py, vp.center.real, vp.center.imag
    )
    rec = np.empty(vp.px * vp.py, dtype=_RECORD_DTYPE)
    rec["fate"] = t.fate.ravel()
    rec["value"] = t.value.ravel()
    rec["aux"] = t.aux.ravel()
    return head + rec.tobytes()


def decode_tile(data: bytes, width: float = 1.0) -> TileGrid:
    """Decode a tile; the viewport width is not part of the wire format and
    must be supplied by the caller (it defaults to 1)."""
    if len(data) < HEADER_SIZE:
        raise ValueError("truncated tile header")
    magic, version, _reserved, px, py, cre, cim = HEADER.unpack_from(data)
    if magic != MAGIC:
        raise ValueError("bad magic")
    if version != VERSION:
        raise ValueError(f"unsupported tile version {version}")
    n = px * py
    expect = HEADER_SIZE + n * RECORD_SIZE
    if len(data) != expect:
        raise ValueError(f"tile payload size {len(data)} != {expect}")
    rec = np.frombuffer(data, dtype=_RECORD_DTYPE, count=n, offset=HEADER_SIZE)
    vp = Viewport(center=complex(cre, cim), width=width, px=px, py=py)
    return TileGrid(
        viewport=vp,
        fate=rec["fate"].reshape(py, px).copy(),
        value=rec["value"].reshape(py, px).copy(),
        aux=rec["aux"].reshape(py, px).copy(),
    )
