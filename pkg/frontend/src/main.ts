/** Dual-pane explorer: parameter plane on the left, dynamical plane of the
 * selected parameter on the right, with orbit overlay and analysis readout.
 * All dynamics come from the HTTP API; this module only draws. */

import { fetchAnalysis, fetchOrbit, fetchTile, OrbitPoint, ParamReport, tileUrl } from "./api.js";
import { DEFAULT_STATE, ExplorerState, parseState, serializeState } from "./state.js";
import { colorizeTile, decodeTile } from "./tile.js";
import { complexToPixel, pixelToComplex, Viewport, zoomAbout } from "./viewport.js";

type Plane = "param" | "dyn";

const paramCanvas = document.getElementById("param-canvas") as HTMLCanvasElement;
const dynCanvas = document.getElementById("dyn-canvas") as HTMLCanvasElement;
const readout = document.getElementById("readout") as HTMLElement;
const notice = document.getElementById("notice") as HTMLElement;
const familySelect = document.getElementById("family") as HTMLSelectElement;
const orbitToggle = document.getElementById("orbit-on") as HTMLInputElement;
const orbitLength = document.getElementById("orbit-n") as HTMLInputElement;

let state: ExplorerState = parseState(location.hash);
let lastReport: ParamReport | null = null;
let lastOrbit: OrbitPoint[] = [];
const inflight: Partial<Record<Plane, AbortController>> = {};

function pushState(): void {
  history.replaceState(null, "", `#${serializeState(state)}`);
}

function showNotice(text: string): void {
  notice.textContent = text;
  notice.classList.toggle("hidden", text === "");
}

function canvasFor(plane: Plane): HTMLCanvasElement {
  return plane === "param" ? paramCanvas : dynCanvas;
}

function viewFor(plane: Plane): Viewport {
  return plane === "param" ? state.paramView : state.dynView;
}

async function drawPlane(plane: Plane): Promise<void> {
  const canvas = canvasFor(plane);
  const vp = viewFor(plane);
  canvas.width = vp.px;
  canvas.height = vp.py;
  if (plane === "dyn" && !state.selection) {
    const ctx = canvas.getContext("2d")!;
    ctx.clearRect(0, 0, vp.px, vp.py);
    return;
  }
  inflight[plane]?.abort();
  const ctrl = new AbortController();
  inflight[plane] = ctrl;
  try {
    // progressive refinement: show a 4x coarser tile while the full one loads
    for (const scale of [4, 1]) {
      const buf = await fetchTile(tileUrl(plane, state, vp, scale), ctrl.signal);
      if (ctrl.signal.aborted) return;
      blit(canvas, buf, vp);
    }
    if (plane === "dyn") {
      drawOrbitOverlay();
    }
    showNotice("");
  } catch (err) {
    if (!ctrl.signal.aborted) {
      showNotice(`render failed: ${(err as Error).message}`);
    }
  }
}

function blit(canvas: HTMLCanvasElement, buf: ArrayBuffer, vp: Viewport): void {
  const tile = decodeTile(buf);
  const rgba = colorizeTile(tile);
  const img = new ImageData(rgba, tile.px, tile.py);
  const ctx = canvas.getContext("2d")!;
  if (tile.px === vp.px && tile.py === vp.py) {
    ctx.putImageData(img, 0, 0);
    return;
  }
  const off = document.createElement("canvas");
  off.width = tile.px;
  off.height = tile.py;
  off.getContext("2d")!.putImageData(img, 0, 0);
  ctx.imageSmoothingEnabled = false;
  ctx.drawImage(off, 0, 0, vp.px, vp.py);
}

function drawOrbitOverlay(): void {
  if (!state.orbitOn || lastOrbit.length === 0) return;
  const ctx = dynCanvas.getContext("2d")!;
  const vp = state.dynView;
  ctx.strokeStyle = "#00e5ff";
  ctx.fillStyle = "#00e5ff";
  ctx.lineWidth = 1.5;
  ctx.beginPath();
  let started = false;
  for (const pt of lastOrbit) {
    if ("infinity" in pt) break;
    const { i, j } = complexToPixel(vp, pt);
    // points outside the viewport are clipped by the canvas, not dropped
    if (started) {
      ctx.lineTo(i, j);
    } else {
      ctx.moveTo(i, j);
      started = true;
    }
  }
  ctx.stroke();
  for (const pt of lastOrbit) {
    if ("infinity" in pt) break;
    const { i, j } = complexToPixel(vp, pt);
    ctx.beginPath();
    ctx.arc(i, j, 2.5, 0, 2 * Math.PI);
    ctx.fill();
  }
}

function fmt(x: number): string {
  return x.toPrecision(6);
}

function renderReadout(): void {
  if (!state.selection) {
    readout.innerHTML = "<em>click the left pane to select a parameter</em>";
    return;
  }
  const sel = state.selection;
  const lines = [`<b>selection</b> ${fmt(sel.re)} ${sel.im >= 0 ? "+" : "−"} ${fmt(Math.abs(sel.im))}i`];
  if (lastReport) {
    const r = lastReport;
    lines.push(`<b>membership</b> ${r.membership}${r.tentative ? " (tentative)" : ""}`);
    if (r.period !== null) {
      lines.push(`<b>period</b> ${r.period}`);
    }
    if (r.multiplier_abs !== null) {
      lines.push(`<b>|multiplier|</b> ${fmt(r.multiplier_abs)}`);
    }
    if (r.escape_step !== null) {
      lines.push(`<b>escape step</b> ${r.escape_step}`);
    }
    lines.push(`<b>|symmetry residual|</b> ${fmt(r.symmetry_residual_abs)}`);
  }
  readout.innerHTML = lines.join("<br>");
}

async function select(z: { re: number; im: number }): Promise<void> {
  state = { ...state, selection: z };
  pushState();
  lastReport = null;
  lastOrbit = [];
  renderReadout();
  try {
    if (state.family === "tangent") {
      lastReport = await fetchAnalysis(z);
    }
    if (state.orbitOn) {
      lastOrbit = await fetchOrbit(state, z, state.orbitLength);
    }
    showNotice("");
  } catch (err) {
    showNotice(`analysis failed: ${(err as Error).message}`);
  }
  renderReadout();
  void drawPlane("dyn");
}

function attachPaneEvents(plane: Plane): void {
  const canvas = canvasFor(plane);
  let drag: { i: number; j: number; moved: boolean } | null = null;

  const pixelOf = (ev: MouseEvent): { i: number; j: number } => {
    const rect = canvas.getBoundingClientRect();
    return {
      i: ((ev.clientX - rect.left) / rect.width) * viewFor(plane).px,
      j: ((ev.clientY - rect.top) / rect.height) * viewFor(plane).py,
    };
  };

  canvas.addEventListener("wheel", (ev) => {
    ev.preventDefault();
    const { i, j } = pixelOf(ev);
    const factor = ev.deltaY > 0 ? 2 : 0.5;
    const next = zoomAbout(viewFor(plane), i, j, factor);
    if (next === null) {
      showNotice("zoom limit reached (double-precision floor)");
      return;
    }
    if (plane === "param") {
      state = { ...state, paramView: next };
    } else {
      state = { ...state, dynView: next };
    }
    pushState();
    void drawPlane(plane);
  });

  canvas.addEventListener("mousedown", (ev) => {
    drag = { ...pixelOf(ev), moved: false };
  });
  canvas.addEventListener("mousemove", (ev) => {
    if (!drag) return;
    const { i, j } = pixelOf(ev);
    if (Math.abs(i - drag.i) + Math.abs(j - drag.j) > 3) {
      drag.moved = true;
    }
  });
  canvas.addEventListener("mouseup", (ev) => {
    if (!drag) return;
    const { i, j } = pixelOf(ev);
    const vp = viewFor(plane);
    if (drag.moved) {
      const from = pixelToComplex(vp, drag.i, drag.j);
      const to = pixelToComplex(vp, i, j);
      const next: Viewport = {
        ...vp,
        center: {
          re: vp.center.re - (to.re - from.re),
          im: vp.center.im - (to.im - from.im),
        },
      };
      if (plane === "param") {
        state = { ...state, paramView: next };
      } else {
        state = { ...state, dynView: next };
      }
      pushState();
      void drawPlane(plane);
    } else if (plane === "param") {
      void select(pixelToComplex(vp, i, j));
    }
    drag = null;
  });
  canvas.addEventListener("mouseleave", () => {
    drag = null;
  });
}

function syncControls(): void {
  familySelect.value = state.family;
  orbitToggle.checked = state.orbitOn;
  orbitLength.value = String(state.orbitLength);
}

function boot(): void {
  syncControls();
  renderReadout();
  void drawPlane("param");
  if (state.selection) {
    void select(state.selection);
  }

  familySelect.addEventListener("change", () => {
    const fam = familySelect.value === "newton" ? "newton" : "tangent";
    const base = fam === "newton"
      ? { center: { re: -1.1627, im: 0.1143 }, width: 4, px: 512, py: 512 }
      : DEFAULT_STATE.paramView;
    state = { ...state, family: fam, paramView: base, selection: null };
    lastReport = null;
    lastOrbit = [];
    pushState();
    renderReadout();
    void drawPlane("param");
    void drawPlane("dyn");
  });

  orbitToggle.addEventListener("change", () => {
    state = { ...state, orbitOn: orbitToggle.checked };
    pushState();
    if (state.selection) void select(state.selection);
  });
  orbitLength.addEventListener("change", () => {
    const n = Math.max(0, Math.floor(Number(orbitLength.value) || 0));
    state = { ...state, orbitLength: n || DEFAULT_STATE.orbitLength, orbitOn: n > 0 };
    pushState();
    syncControls();
    if (state.selection) void select(state.selection);
  });

  window.addEventListener("hashchange", () => {
    state = parseState(location.hash);
    syncControls();
    void drawPlane("param");
    if (state.selection) void select(state.selection);
  });

  attachPaneEvents("param");
  attachPaneEvents("dyn");
}

boot();
