"""Command line frontend.

Exit status: 0 on success, 2 on usage errors (argparse), 1 on computation
errors.
"""

from __future__ import annotations

import argparse
import math
import sys

import numpy as np

from .analysis import analyze_parameter, find_symmetry_parameters, solve_virtual_cycle
from .colorize import PaletteSpec, colorize, to_png, to_ppm
from .errors import TandelbrotError
from .orbits import IterationSettings
from .rational import approximation_error
from .render import Viewport, render_dynamical_plane, render_parameter_plane
from .reporting import complex_obj, constants_dict, dumps, report_dict
from .tiles import encode_tile


def _parse_complex(text: str) -> complex:
    parts = text.split(",")
    if len(parts) != 2:
        raise argparse.ArgumentTypeError(f"expected RE,IM, got {text!r}")
    try:
        return complex(float(parts[0]), float(parts[1]))
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _parse_box(text: str):
    parts = text.split(",")
    if len(parts) != 4:
        raise argparse.ArgumentTypeError(f"expected RE0,RE1,IM0,IM1, got {text!r}")
    try:
        return tuple(float(p) for p in parts)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _add_viewport_args(sp, default_max_iter=5000):
    sp.add_argument("--center", type=_parse_complex, default=0j, metavar="RE,IM")
    sp.add_argument("--width", type=float, default=1.0)
    sp.add_argument("--px", type=int, default=512)
    sp.add_argument("--py", type=int, default=512)
    sp.add_argument("--max-iter", type=int, default=default_max_iter)
    sp.add_argument("--out", default="-", metavar="PATH")
    sp.add_argument("--format", choices=("png", "ppm", "tile"), default="png")
    sp.add_argument("--workers", type=int, default=None)


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="tandelbrot")
    sub = ap.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("render-param", help="render a parameter plane")
    sp.add_argument("--family", choices=("tangent", "newton", "an-mask"), default="tangent")
    _add_viewport_args(sp)
    sp.add_argument("--n", type=int, default=0)
    sp.add_argument("--k", type=int, default=None)
    sp.add_argument("--delta", type=float, default=None)

    sp = sub.add_parser("render-dyn", help="render a dynamical plane")
    sp.add_argument("--family", choices=("tangent", "newton"), default="tangent")
    sp.add_argument("--alpha", type=_parse_complex, default=None, metavar="RE,IM")
    sp.add_argument("--a", type=_parse_complex, default=None, metavar="RE,IM")
    _add_viewport_args(sp)

    sp = sub.add_parser("analyze", help="full report for one parameter")
    sp.add_argument("--alpha", type=_parse_complex, required=True, metavar="RE,IM")
    sp.add_argument("--max-iter", type=int, default=100_000)

    sub.add_parser("constants", help="print the basin-model constants")

    sp = sub.add_parser("symmetry-params", help="roots of the symmetry relation in a box")
    sp.add_argument("--box", type=_parse_box, required=True, metavar="RE0,RE1,IM0,IM1")

    sp = sub.add_parser("virtual-cycle", help="solve for a virtual-cycle parameter")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--alpha", type=_parse_complex, required=True, metavar="RE,IM",
                    help="initial guess")

    sp = sub.add_parser("an-mask", help="emit an A_n / A_{n,k} mask tile")
    _add_viewport_args(sp)
    sp.set_defaults(format="tile")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--k", type=int, default=None)
    sp.add_argument("--delta", type=float, default=None)

    sp = sub.add_parser("approx-report", help="approximant sup-error sweep over k")
    sp.add_argument("--kmin-exp", type=int, default=4)
    sp.add_argument("--kmax-exp", type=int, default=13)

    sp = sub.add_parser("serve", help="run the HTTP explorer service")
    sp.add_argument("--port", type=int, default=8000)
    sp.add_argument("--host", default="127.0.0.1")

    return ap


def _write_tilegrid(grid, fmt: str, out: str) -> None:
    if fmt == "tile":
        data = encode_tile(grid)
    else:
        img = colorize(grid, PaletteSpec())
        data = to_png(img) if fmt == "png" else to_ppm(img)
    if out == "-":
        sys.stdout.buffer.write(data)
    else:
        with open(out, "wb") as fh:
            fh.write(data)


def _cmd_render_param(args) -> int:
    vp = Viewport(args.center, args.width, args.px, args.py)
    s = IterationSettings(max_iter=args.max_iter)
    family = args.family.replace("-", "_")
    grid = render_parameter_plane(
        family, vp, s, workers=args.workers,
        n=getattr(args, "n", 0), k=getattr(args, "k", None),
        delta=getattr(args, "delta", None),
    )
    _write_tilegrid(grid, args.format, args.out)
    return 0


def _cmd_render_dyn(args) -> int:
    vp = Viewport(args.center, args.width, args.px, args.py)
    s = IterationSettings(max_iter=args.max_iter)
    if args.family == "tangent":
        if args.alpha is None:
            raise TandelbrotError("--alpha is required for the tangent family")
        param = args.alpha
    else:
        if args.a is None:
            raise TandelbrotError("--a is required for the newton family")
        param = args.a
    grid = render_dynamical_plane(args.family, param, vp, s, workers=args.workers)
    _write_tilegrid(grid, args.format, args.out)
    return 0


def _cmd_analyze(args) -> int:
    report = analyze_parameter(args.alpha, IterationSettings(max_iter=args.max_iter))
    print(dumps(report_dict(report), compact=False))
    return 0


def _cmd_constants(_args) -> int:
    print(dumps(constants_dict(), compact=False))
    return 0


def _cmd_symmetry(args) -> int:
    roots = find_symmetry_parameters(args.box)
    print(dumps([complex_obj(r) for r in roots], compact=False))
    return 0


def _cmd_virtual_cycle(args) -> int:
    root = solve_virtual_cycle(args.n, args.alpha)
    print(dumps({"alpha": complex_obj(root), "n": args.n}, compact=False))
    return 0


def _cmd_an_mask(args) -> int:
    vp = Viewport(args.center, args.width, args.px, args.py)
    s = IterationSettings(max_iter=args.max_iter)
    grid = render_parameter_plane(
        "an_mask", vp, s, workers=args.workers, n=args.n, k=args.k, delta=args.delta
    )
    _write_tilegrid(grid, args.format, args.out)
    return 0


def _cmd_approx_report(args) -> int:
    alphas = np.array(
        [0.4 * r * np.exp(2j * np.pi * t / 7) for t in range(7) for r in (0.3, 0.8, 1.0)]
    )
    zs = np.array(
        [1.9 * r * np.exp(2j * np.pi * t / 9) for t in range(9) for r in (0.2, 0.6, 1.0)]
    )
    rows = []
    for j in range(args.kmin_exp, args.kmax_exp + 1):
        k = 2**j
        rows.append({"k": k, "sup_error": approximation_error(alphas, k, zs)})
    xs = [math.log(r["k"]) for r in rows]
    ys = [math.log(r["sup_error"]) for r in rows]
    n = len(xs)
    sx, sy = sum(xs), sum(ys)
    slope = (n * sum(x * y for x, y in zip(xs, ys)) - sx * sy) / (
        n * sum(x * x for x in xs) - sx * sx
    )
    print(dumps({"rows": rows, "loglog_slope": slope}, compact=False))
    return 0


def _cmd_serve(args) -> int:
    import uvicorn

    from .server import create_app

    uvicorn.run(create_app(), host=args.host, port=args.port, log_level="warning")
    return 0


_COMMANDS = {
    "render-param": _cmd_render_param,
    "render-dyn": _cmd_render_dyn,
    "analyze": _cmd_analyze,
    "constants": _cmd_constants,
    "symmetry-params": _cmd_symmetry,
    "virtual-cycle": _cmd_virtual_cycle,
    "an-mask": _cmd_an_mask,
    "approx-report": _cmd_approx_report,
    "serve": _cmd_serve,
}


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except TandelbrotError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
