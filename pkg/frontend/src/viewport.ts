/** Complex-plane viewport math, matching the server's pixel mapping. */

export interface Complex {
  re: number;
  im: number;
}

export interface Viewport {
  center: Complex;
  width: number;
  px: number;
  py: number;
}

export const MIN_WIDTH = 1e-12; // double-precision zoom floor

export function viewportHeight(vp: Viewport): number {
  return (vp.width * vp.py) / vp.px;
}

/**
 * Pixel (i, j) maps to
 *   center + ((i+0.5)/px - 0.5)*width + i*((j+0.5)/py - 0.5)*height
 * with row 0 at the top (same formula as the tile renderer).
 */
export function pixelToComplex(vp: Viewport, i: number, j: number): Complex {
  return {
    re: vp.center.re + ((i + 0.5) / vp.px - 0.5) * vp.width,
    im: vp.center.im + ((j + 0.5) / vp.py - 0.5) * viewportHeight(vp),
  };
}

/** Inverse of pixelToComplex (fractional pixel coordinates). */
export function complexToPixel(vp: Viewport, z: Complex): { i: number; j: number } {
  return {
    i: ((z.re - vp.center.re) / vp.width + 0.5) * vp.px - 0.5,
    j: ((z.im - vp.center.im) / viewportHeight(vp) + 0.5) * vp.py - 0.5,
  };
}

/**
 * Scale the viewport width by `factor` keeping the complex point under the
 * cursor (at pixel i, j) fixed.  Returns null when the zoom would cross the
 * double-precision floor.
 */
export function zoomAbout(
  vp: Viewport,
  i: number,
  j: number,
  factor: number,
): Viewport | null {
  const newWidth = vp.width * factor;
  if (newWidth < MIN_WIDTH) {
    return null;
  }
  const anchor = pixelToComplex(vp, i, j);
  // after scaling, the anchor must stay at the same fractional pixel
  const fx = (i + 0.5) / vp.px - 0.5;
  const fy = (j + 0.5) / vp.py - 0.5;
  const newHeight = (newWidth * vp.py) / vp.px;
  return {
    center: { re: anchor.re - fx * newWidth, im: anchor.im - fy * newHeight },
    width: newWidth,
    px: vp.px,
    py: vp.py,
  };
}

/** Translate the viewport by a drag of (di, dj) pixels. */
export function panByPixels(vp: Viewport, di: number, dj: number): Viewport {
  return {
    center: {
      re: vp.center.re - (di / vp.px) * vp.width,
      im: vp.center.im - (dj / vp.py) * viewportHeight(vp),
    },
    width: vp.width,
    px: vp.px,
    py: vp.py,
  };
}
