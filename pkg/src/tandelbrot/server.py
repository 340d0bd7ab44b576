"""HTTP API exposing rendering and analysis; thin adapter over the library.

Responses are built from canonicalized parameters and cached, so identical
queries return byte-identical bodies.
"""

from __future__ import annotations

import os
from functools import lru_cache

from fastapi import FastAPI, Request
from fastapi.responses import HTMLResponse, Response

from .analysis import analyze_parameter
from .colorize import PaletteSpec, colorize, to_png
from .errors import TandelbrotError
from .family import TangentParam
from .newton import NewtonParam, newton_orbit_points
from .orbits import IterationSettings, orbit_points
from .render import Viewport, render_dynamical_plane, render_parameter_plane
from .reporting import complex_obj, constants_dict, dumps, report_dict
from .tiles import encode_tile


class BadQuery(Exception):
    """400: malformed query string."""


def _get_float(q, name, default=None):
    raw = q.get(name)
    if raw is None:
        if default is None:
            raise BadQuery(f"missing query parameter {name!r}")
        return default
    try:
        return float(raw)
    except ValueError:
        raise BadQuery(f"parameter {name!r} is not a number: {raw!r}") from None


def _get_int(q, name, default=None):
    raw = q.get(name)
    if raw is None:
        if default is None:
            raise BadQuery(f"missing query parameter {name!r}")
        return default
    try:
        return int(raw)
    except ValueError:
        raise BadQuery(f"parameter {name!r} is not an integer: {raw!r}") from None


@lru_cache(maxsize=256)
def _tile_bytes(
    plane: str,
    family: str,
    center: complex,
    width: float,
    px: int,
    py: int,
    max_iter: int,
    inst: complex,
    n: int,
    k: int,
    delta: float,
    fmt: str,
) -> bytes:
    vp = Viewport(center, width, px, py)
    s = IterationSettings(max_iter=max_iter)
    if plane == "param":
        grid = render_parameter_plane(
            family, vp, s, n=n, k=k or None, delta=delta or None
        )
    else:
        grid = render_dynamical_plane(family, inst, vp, s)
    if fmt == "png":
        return to_png(colorize(grid, PaletteSpec()))
    return encode_tile(grid)


@lru_cache(maxsize=1024)
def _analyze_body(alpha: complex, max_iter: int) -> bytes:
    report = analyze_parameter(alpha, IterationSettings(max_iter=max_iter))
    return dumps(report_dict(report)).encode()


@lru_cache(maxsize=1024)
def _orbit_body(family: str, inst: complex, n: int) -> bytes:
    if family == "newton":
        pts = newton_orbit_points(NewtonParam(inst), n)
    else:
        p = TangentParam(inst)
        pts = orbit_points(p, p.free_value, n)
    body = [complex_obj(z) if z is not None else {"infinity": True} for z in pts]
    return dumps({"family": family, "points": body}).encode()


def _static_dir() -> str | None:
    for cand in (
        os.environ.get("TANDELBROT_STATIC", ""),
        os.path.join(os.path.dirname(__file__), "static"),
        os.path.join(os.getcwd(), "frontend", "dist"),
    ):
        if cand and os.path.isdir(cand):
            return cand
    return None


def create_app() -> FastAPI:
    app = FastAPI(title="tandelbrot explorer", docs_url=None, redoc_url=None)

    @app.exception_handler(BadQuery)
    async def _bad_query(_req, exc):
        return Response(
            dumps({"error": str(exc)}).encode(), status_code=400,
            media_type="application/json",
        )

    @app.exception_handler(TandelbrotError)
    async def _domain_error(_req, exc):
        return Response(
            dumps({"error": str(exc)}).encode(), status_code=422,
            media_type="application/json",
        )

    @app.get("/api/v1/tile")
    def tile(request: Request):
        q = request.query_params
        plane = q.get("plane", "param")
        family = q.get("family", "tangent").replace("-", "_")
        if plane not in ("param", "dyn"):
            raise BadQuery(f"plane must be param or dyn, got {plane!r}")
        if family not in ("tangent", "newton", "an_mask"):
            raise BadQuery(f"unknown family {family!r}")
        fmt = q.get("format", "tile")
        if fmt not in ("tile", "png"):
            raise BadQuery(f"format must be tile or png, got {fmt!r}")
        center = complex(
            _get_float(q, "center_re", 0.0), _get_float(q, "center_im", 0.0)
        )
        width = _get_float(q, "width", 1.0)
        px = _get_int(q, "px")
        py = _get_int(q, "py", px)
        max_iter = _get_int(q, "max_iter", 5000)
        if family == "newton" or (plane == "dyn" and q.get("a_re") is not None):
            inst = complex(_get_float(q, "a_re", 0.0), _get_float(q, "a_im", 0.0))
        else:
            inst = complex(
                _get_float(q, "alpha_re", 0.0), _get_float(q, "alpha_im", 0.0)
            )
        n = _get_int(q, "n", 0)
        k = _get_int(q, "k", 0)
        delta = _get_float(q, "delta", 0.0)
        try:
            body = _tile_bytes(
                plane, family, center, width, px, py, max_iter, inst, n, k, delta, fmt
            )
        except ValueError as exc:  # out-of-domain instance parameters
            raise TandelbrotError(str(exc)) from exc
        media = "image/png" if fmt == "png" else "application/octet-stream"
        return Response(body, media_type=media)

    @app.get("/api/v1/analyze")
    def analyze(request: Request):
        q = request.query_params
        alpha = complex(_get_float(q, "alpha_re"), _get_float(q, "alpha_im", 0.0))
        max_iter = _get_int(q, "max_iter", 100_000)
        return Response(_analyze_body(alpha, max_iter), media_type="application/json")

    @app.get("/api/v1/orbit")
    def orbit(request: Request):
        q = request.query_params
        family = q.get("family", "tangent")
        if family not in ("tangent", "newton"):
            raise BadQuery(f"unknown family {family!r}")
        n = _get_int(q, "n")
        if n < 0:
            raise BadQuery("n must be >= 0")
        if family == "newton":
            inst = complex(_get_float(q, "a_re"), _get_float(q, "a_im", 0.0))
        else:
            inst = complex(_get_float(q, "alpha_re"), _get_float(q, "alpha_im", 0.0))
        return Response(_orbit_body(family, inst, n), media_type="application/json")

    @app.get("/api/v1/constants")
    def constants():
        return Response(dumps(constants_dict()).encode(), media_type="application/json")

    static = _static_dir()
    if static:
        from fastapi.staticfiles import StaticFiles

        app.mount("/", StaticFiles(directory=static, html=True), name="static")
    else:

        @app.get("/", response_class=HTMLResponse)
        def index():
            return "<html><body><h1>tandelbrot service</h1><p>UI assets not built.</p></body></html>"

    return app
