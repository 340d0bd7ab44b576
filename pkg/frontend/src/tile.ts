/** Decoder and colorizer for the binary tile format (magic "TNDL"). */

export const FATE_CAPTURED = 0;
export const FATE_CYCLE = 1;
export const FATE_POLE = 2;
export const FATE_UNDECIDED = 3;

export const HEADER_SIZE = 32;
export const RECORD_SIZE = 9;

export interface Tile {
  px: number;
  py: number;
  centerRe: number;
  centerIm: number;
  fate: Uint8Array; // row-major, top row first
  value: Uint32Array;
  aux: Float32Array;
}

export function decodeTile(buf: ArrayBuffer): Tile {
  if (buf.byteLength < HEADER_SIZE) {
    throw new Error("truncated tile header");
  }
  const view = new DataView(buf);
  const magic = String.fromCharCode(
    view.getUint8(0),
    view.getUint8(1),
    view.getUint8(2),
    view.getUint8(3),
  );
  if (magic !== "TNDL") {
    throw new Error(`bad tile magic ${magic}`);
  }
  const version = view.getUint16(4, true);
  if (version !== 1) {
    throw new Error(`unsupported tile version ${version}`);
  }
  const px = view.getUint32(8, true);
  const py = view.getUint32(12, true);
  const n = px * py;
  if (buf.byteLength !== HEADER_SIZE + n * RECORD_SIZE) {
    throw new Error(
      `tile payload size ${buf.byteLength} != ${HEADER_SIZE + n * RECORD_SIZE}`,
    );
  }
  const fate = new Uint8Array(n);
  const value = new Uint32Array(n);
  const aux = new Float32Array(n);
  for (let k = 0; k < n; k++) {
    const off = HEADER_SIZE + k * RECORD_SIZE;
    fate[k] = view.getUint8(off);
    value[k] = view.getUint32(off + 1, true);
    aux[k] = view.getFloat32(off + 5, true);
  }
  return {
    px,
    py,
    centerRe: view.getFloat64(16, true),
    centerIm: view.getFloat64(24, true),
    fate,
    value,
    aux,
  };
}

export interface Palette {
  inside: [number, number, number];
  marker: [number, number, number];
  gradientLow: [number, number, number];
  gradientHigh: [number, number, number];
}

export const DEFAULT_PALETTE: Palette = {
  inside: [0, 0, 0],
  marker: [255, 0, 255],
  gradientLow: [40, 10, 90],
  gradientHigh: [255, 250, 210],
};

/**
 * RGBA colorization with the renderer's palette rules: cycle/undecided
 * pixels solid, pole hits in the marker color, escapes on a log-scaled
 * gradient by escape step.
 */
export function colorizeTile(
  tile: Tile,
  palette: Palette = DEFAULT_PALETTE,
): Uint8ClampedArray<ArrayBuffer> {
  const n = tile.px * tile.py;
  const out = new Uint8ClampedArray(n * 4);
  let top = 1;
  for (let k = 0; k < n; k++) {
    if (tile.fate[k] === FATE_CAPTURED && tile.value[k] > top) {
      top = tile.value[k];
    }
  }
  const logTop = Math.log1p(top);
  for (let k = 0; k < n; k++) {
    const o = k * 4;
    out[o + 3] = 255;
    const fate = tile.fate[k];
    if (fate === FATE_CYCLE || fate === FATE_UNDECIDED) {
      [out[o], out[o + 1], out[o + 2]] = palette.inside;
    } else if (fate === FATE_POLE) {
      [out[o], out[o + 1], out[o + 2]] = palette.marker;
    } else {
      const frac = Math.log1p(tile.value[k]) / logTop;
      for (let c = 0; c < 3; c++) {
        out[o + c] =
          palette.gradientLow[c] +
          (palette.gradientHigh[c] - palette.gradientLow[c]) * frac;
      }
    }
  }
  return out;
}
