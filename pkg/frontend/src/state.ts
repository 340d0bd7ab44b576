/** Explorer state and its URL-fragment serialization (deep links). */

import { Complex, Viewport } from "./viewport.js";

export type ParamFamily = "tangent" | "newton";

export interface ExplorerState {
  family: ParamFamily;
  /** left pane: parameter plane */
  paramView: Viewport;
  /** right pane: dynamical plane of the selected instance */
  dynView: Viewport;
  /** selected instance parameter (alpha, or a for the Newton family) */
  selection: Complex | null;
  orbitOn: boolean;
  orbitLength: number;
  maxIter: number;
}

export const DEFAULT_STATE: ExplorerState = {
  family: "tangent",
  paramView: { center: { re: -0.005, im: 0 }, width: 0.06, px: 512, py: 512 },
  dynView: { center: { re: 0, im: 0 }, width: 8, px: 512, py: 512 },
  selection: null,
  orbitOn: true,
  orbitLength: 32,
  maxIter: 5000,
};

/** Shortest decimal that parses back to the exact 64-bit value. */
const num = (x: number): string => String(x);

export function serializeState(s: ExplorerState): string {
  const q = new URLSearchParams();
  q.set("fam", s.family);
  q.set("pc", `${num(s.paramView.center.re)},${num(s.paramView.center.im)}`);
  q.set("pw", num(s.paramView.width));
  q.set("dc", `${num(s.dynView.center.re)},${num(s.dynView.center.im)}`);
  q.set("dw", num(s.dynView.width));
  if (s.selection) {
    q.set("sel", `${num(s.selection.re)},${num(s.selection.im)}`);
  }
  q.set("orb", s.orbitOn ? `${s.orbitLength}` : "0");
  q.set("it", `${s.maxIter}`);
  return q.toString();
}

function parsePair(text: string | null): Complex | null {
  if (!text) return null;
  const parts = text.split(",");
  if (parts.length !== 2) return null;
  const re = Number(parts[0]);
  const im = Number(parts[1]);
  if (!Number.isFinite(re) || !Number.isFinite(im)) return null;
  return { re, im };
}

function parsePositive(text: string | null, fallback: number): number {
  const v = Number(text);
  return Number.isFinite(v) && v > 0 ? v : fallback;
}

/** Parse a fragment produced by serializeState; missing or malformed fields
 * fall back to the defaults, so stale links degrade gracefully. */
export function parseState(fragment: string): ExplorerState {
  const q = new URLSearchParams(fragment.replace(/^#/, ""));
  const d = DEFAULT_STATE;
  const fam = q.get("fam");
  const orbRaw = q.get("orb");
  const orb = orbRaw === null ? d.orbitLength : Math.max(0, Math.floor(Number(orbRaw) || 0));
  return {
    family: fam === "newton" ? "newton" : "tangent",
    paramView: {
      center: parsePair(q.get("pc")) ?? d.paramView.center,
      width: parsePositive(q.get("pw"), d.paramView.width),
      px: d.paramView.px,
      py: d.paramView.py,
    },
    dynView: {
      center: parsePair(q.get("dc")) ?? d.dynView.center,
      width: parsePositive(q.get("dw"), d.dynView.width),
      px: d.dynView.px,
      py: d.dynView.py,
    },
    selection: parsePair(q.get("sel")),
    orbitOn: orb > 0,
    orbitLength: orb > 0 ? orb : d.orbitLength,
    maxIter: Math.max(1, Math.floor(parsePositive(q.get("it"), d.maxIter))),
  };
}

export function statesEqual(a: ExplorerState, b: ExplorerState): boolean {
  return serializeState(a) === serializeState(b);
}
