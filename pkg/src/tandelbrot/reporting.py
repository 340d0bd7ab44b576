"""JSON views of analysis results, shared by the CLI and the HTTP service.

Floats are emitted with Python's shortest round-trip repr, which restores
the exact 64-bit value on parse.
"""

from __future__ import annotations

import json

from .analysis import ParamReport
from .basin_model import model_constants, _multiplier_objective


def complex_obj(z: complex) -> dict:
    return {"re": z.real, "im": z.imag}


def report_dict(r: ParamReport) -> dict:
    d: dict = {
        "alpha": complex_obj(r.alpha),
        "membership": r.membership.label,
        "period": r.cycle.period if r.cycle else None,
        "tentative": r.membership.tentative,
        "escape_step": r.membership.escape_step,
        "fate": r.fate.kind,
        "steps": r.fate.steps,
        "representative": complex_obj(r.cycle.representative) if r.cycle else None,
        "multiplier": complex_obj(r.cycle.multiplier) if r.cycle else None,
        "multiplier_abs": abs(r.cycle.multiplier) if r.cycle else None,
        "symmetry_residual": complex_obj(r.symmetry_residual),
        "symmetry_residual_abs": abs(r.symmetry_residual),
        "nearest_poles": [complex_obj(p) for p in r.nearest_poles],
    }
    return d


def constants_dict() -> dict:
    c = model_constants()
    return {
        "p_star": c.p_star,
        "t": c.t,
        "C": c.C,
        "residual": _multiplier_objective(c.p_star) - 0.125,
    }


def dumps(obj, compact: bool = True) -> str:
    if compact:
        return json.dumps(obj, separators=(",", ":"))
    return json.dumps(obj, indent=2)
