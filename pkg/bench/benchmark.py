#!/usr/bin/env python3
"""Benchmark the compiled kernels against the interpreted fallback.

Both backends execute the same kernel source; the fallback simply skips JIT
compilation (select it with TANDELBROT_NO_NUMBA=1).  This script runs each
backend in a fresh interpreter and reports wall time per rendered tile.

Usage: python bench/benchmark.py [--px 256] [--max-iter 2000] [--repeats 3]
"""

import argparse
import json
import os
import subprocess
import sys

_WORKLOAD = """
import json, sys, time
from tandelbrot import IterationSettings, Viewport, render_parameter_plane
from tandelbrot._accel import USING_NUMBA

px, max_iter, repeats = (int(x) for x in sys.argv[1:4])
vp = Viewport(-0.005 + 0j, 0.06, px, px)
s = IterationSettings(max_iter=max_iter)

render_parameter_plane("tangent", vp, s)  # warm-up (JIT compile / cache load)
times = []
for _ in range(repeats):
    t0 = time.perf_counter()
    render_parameter_plane("tangent", vp, s)
    times.append(time.perf_counter() - t0)
print(json.dumps({"numba": USING_NUMBA, "best_s": min(times), "all_s": times}))
"""


def run_backend(no_numba: bool, px: int, max_iter: int, repeats: int) -> dict:
    env = dict(os.environ)
    if no_numba:
        env["TANDELBROT_NO_NUMBA"] = "1"
    else:
        env.pop("TANDELBROT_NO_NUMBA", None)
    out = subprocess.run(
        [sys.executable, "-c", _WORKLOAD, str(px), str(max_iter), str(repeats)],
        capture_output=True,
        text=True,
        env=env,
        check=True,
    )
    return json.loads(out.stdout)


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--px", type=int, default=256)
    ap.add_argument("--max-iter", type=int, default=2000)
    ap.add_argument("--repeats", type=int, default=3)
    ap.add_argument("--fallback-px", type=int, default=64,
                    help="smaller tile for the interpreted backend")
    args = ap.parse_args()

    fast = run_backend(False, args.px, args.max_iter, args.repeats)
    slow = run_backend(True, args.fallback_px, args.max_iter, args.repeats)
    assert fast["numba"] and not slow["numba"]

    per_px_fast = fast["best_s"] / args.px**2
    per_px_slow = slow["best_s"] / args.fallback_px**2
    print(f"compiled   : {args.px}x{args.px} tile in {fast['best_s']:.4f} s "
          f"({per_px_fast * 1e6:.3f} us/pixel)")
    print(f"interpreted: {args.fallback_px}x{args.fallback_px} tile in "
          f"{slow['best_s']:.4f} s ({per_px_slow * 1e6:.3f} us/pixel)")
    print(f"speedup    : {per_px_slow / per_px_fast:.1f}x per pixel")
    return 0


if __name__ == "__main__":
    sys.exit(main())
