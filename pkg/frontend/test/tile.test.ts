import { describe, expect, it } from "vitest";

import {
  colorizeTile,
  decodeTile,
  DEFAULT_PALETTE,
  FATE_CAPTURED,
  FATE_CYCLE,
  FATE_POLE,
  FATE_UNDECIDED,
  HEADER_SIZE,
  RECORD_SIZE,
} from "../src/tile.js";

function buildTile(
  px: number,
  py: number,
  records: Array<{ fate: number; value: number; aux: number }>,
  centerRe = -0.021,
  centerIm = 0.009,
): ArrayBuffer {
  const buf = new ArrayBuffer(HEADER_SIZE + records.length * RECORD_SIZE);
  const view = new DataView(buf);
  view.setUint8(0, "T".charCodeAt(0));
  view.setUint8(1, "N".charCodeAt(0));
  view.setUint8(2, "D".charCodeAt(0));
  view.setUint8(3, "L".charCodeAt(0));
  view.setUint16(4, 1, true); // version
  view.setUint16(6, 0, true); // reserved
  view.setUint32(8, px, true);
  view.setUint32(12, py, true);
  view.setFloat64(16, centerRe, true);
  view.setFloat64(24, centerIm, true);
  records.forEach((r, k) => {
    const off = HEADER_SIZE + k * RECORD_SIZE;
    view.setUint8(off, r.fate);
    view.setUint32(off + 1, r.value, true);
    view.setFloat32(off + 5, r.aux, true);
  });
  return buf;
}

describe("decodeTile", () => {
  it("decodes header and records", () => {
    const buf = buildTile(2, 1, [
      { fate: FATE_CYCLE, value: 3, aux: 0.25 },
      { fate: FATE_CAPTURED, value: 17, aux: 0 },
    ]);
    const t = decodeTile(buf);
    expect(t.px).toBe(2);
    expect(t.py).toBe(1);
    expect(t.centerRe).toBe(-0.021);
    expect(t.centerIm).toBe(0.009);
    expect(Array.from(t.fate)).toEqual([FATE_CYCLE, FATE_CAPTURED]);
    expect(Array.from(t.value)).toEqual([3, 17]);
    expect(t.aux[0]).toBeCloseTo(0.25, 6);
  });

  it("accepts a 41-byte single-pixel tile", () => {
    const buf = buildTile(1, 1, [{ fate: FATE_UNDECIDED, value: 0, aux: 0 }]);
    expect(buf.byteLength).toBe(41);
    const t = decodeTile(buf);
    expect(t.fate[0]).toBe(FATE_UNDECIDED);
  });

  it("rejects bad magic, version and truncation", () => {
    const buf = buildTile(1, 1, [{ fate: 0, value: 0, aux: 0 }]);
    const bad = buf.slice(0);
    new DataView(bad).setUint8(0, 88);
    expect(() => decodeTile(bad)).toThrow(/magic/);
    const v2 = buf.slice(0);
    new DataView(v2).setUint16(4, 2, true);
    expect(() => decodeTile(v2)).toThrow(/version/);
    expect(() => decodeTile(buf.slice(0, 10))).toThrow(/truncated/);
    expect(() => decodeTile(buf.slice(0, buf.byteLength - 1))).toThrow(/size/);
  });
});

describe("colorizeTile", () => {
  it("applies the renderer's palette rules", () => {
    const t = decodeTile(
      buildTile(4, 1, [
        { fate: FATE_CYCLE, value: 3, aux: 0.2 },
        { fate: FATE_UNDECIDED, value: 0, aux: 0 },
        { fate: FATE_POLE, value: 5, aux: 0 },
        { fate: FATE_CAPTURED, value: 9, aux: 0 },
      ]),
    );
    const rgba = colorizeTile(t);
    expect(rgba.length).toBe(16);
    // cycle and undecided: solid inside color
    expect([rgba[0], rgba[1], rgba[2]]).toEqual([...DEFAULT_PALETTE.inside]);
    expect([rgba[4], rgba[5], rgba[6]]).toEqual([...DEFAULT_PALETTE.inside]);
    // pole: marker color
    expect([rgba[8], rgba[9], rgba[10]]).toEqual([...DEFAULT_PALETTE.marker]);
    // deepest escape maps to the gradient top
    expect([rgba[12], rgba[13], rgba[14]]).toEqual([...DEFAULT_PALETTE.gradientHigh]);
    // opaque everywhere
    expect(rgba[3]).toBe(255);
    expect(rgba[15]).toBe(255);
  });

  it("scales escapes logarithmically between the gradient ends", () => {
    const t = decodeTile(
      buildTile(3, 1, [
        { fate: FATE_CAPTURED, value: 0, aux: 0 },
        { fate: FATE_CAPTURED, value: 10, aux: 0 },
        { fate: FATE_CAPTURED, value: 100, aux: 0 },
      ]),
    );
    const rgba = colorizeTile(t);
    const red = [rgba[0], rgba[4], rgba[8]];
    expect(red[0]).toBe(DEFAULT_PALETTE.gradientLow[0]);
    expect(red[2]).toBe(DEFAULT_PALETTE.gradientHigh[0]);
    expect(red[1]).toBeGreaterThan(red[0]);
    expect(red[1]).toBeLessThan(red[2]);
  });
});
