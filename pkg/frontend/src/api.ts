/** Thin client for the explorer HTTP API; all math happens server-side. */

import { ExplorerState } from "./state.js";
import { Complex, Viewport } from "./viewport.js";

export interface ParamReport {
  alpha: Complex;
  membership: "InT" | "NotInT";
  period: number | null;
  tentative: boolean;
  escape_step: number | null;
  fate: string;
  steps: number;
  representative: Complex | null;
  multiplier: Complex | null;
  multiplier_abs: number | null;
  symmetry_residual: Complex;
  symmetry_residual_abs: number;
  nearest_poles: Complex[];
}

export type OrbitPoint = Complex | { infinity: true };

export function tileUrl(
  plane: "param" | "dyn",
  state: ExplorerState,
  vp: Viewport,
  scale = 1,
): string {
  const q = new URLSearchParams();
  q.set("plane", plane);
  q.set("family", state.family);
  q.set("center_re", String(vp.center.re));
  q.set("center_im", String(vp.center.im));
  q.set("width", String(vp.width));
  q.set("px", String(Math.max(1, Math.round(vp.px / scale))));
  q.set("py", String(Math.max(1, Math.round(vp.py / scale))));
  q.set("max_iter", String(state.maxIter));
  if (plane === "dyn" && state.selection) {
    if (state.family === "newton") {
      q.set("a_re", String(state.selection.re));
      q.set("a_im", String(state.selection.im));
    } else {
      q.set("alpha_re", String(state.selection.re));
      q.set("alpha_im", String(state.selection.im));
    }
  }
  return `/api/v1/tile?${q.toString()}`;
}

export function analyzeUrl(alpha: Complex): string {
  return `/api/v1/analyze?alpha_re=${alpha.re}&alpha_im=${alpha.im}`;
}

export function orbitUrl(state: ExplorerState, sel: Complex, n: number): string {
  const key = state.family === "newton" ? "a" : "alpha";
  return `/api/v1/orbit?family=${state.family}&${key}_re=${sel.re}&${key}_im=${sel.im}&n=${n}`;
}

async function fetchOk(url: string, signal?: AbortSignal): Promise<Response> {
  const r = await fetch(url, { signal });
  if (!r.ok) {
    let detail = `${r.status}`;
    try {
      const body = (await r.json()) as { error?: string };
      if (body.error) detail = body.error;
    } catch {
      /* non-JSON error body */
    }
    throw new Error(detail);
  }
  return r;
}

export async function fetchTile(url: string, signal?: AbortSignal): Promise<ArrayBuffer> {
  return (await fetchOk(url, signal)).arrayBuffer();
}

export async function fetchAnalysis(
  alpha: Complex,
  signal?: AbortSignal,
): Promise<ParamReport> {
  return (await fetchOk(analyzeUrl(alpha), signal)).json() as Promise<ParamReport>;
}

export async function fetchOrbit(
  state: ExplorerState,
  sel: Complex,
  n: number,
  signal?: AbortSignal,
): Promise<OrbitPoint[]> {
  const body = (await (await fetchOk(orbitUrl(state, sel, n), signal)).json()) as {
    points: OrbitPoint[];
  };
  return body.points;
}
