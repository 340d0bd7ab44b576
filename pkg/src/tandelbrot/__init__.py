"""Toolkit for the dynamics of the generalized tangent family, its
parameter space, rational approximants, the associated Newton family, and
a tile-based renderer with an HTTP explorer."""

from .errors import (
    EssentialSingularityInput,
    NoPoles,
    PoleInput,
    TandelbrotError,
)
from .family import (
    Clamp,
    EvalOutcome,
    SpherePoint,
    TangentParam,
    eval_derivative,
    eval_tangent,
    eval_value,
    involution_transport,
    pole,
    special_fixed_point,
    symmetry_residual,
)
from .orbits import (
    CycleInfo,
    IterationSettings,
    OrbitFate,
    classify_orbit,
    orbit_points,
    refine_cycle,
)
from .analysis import (
    Membership,
    ParamReport,
    analyze_parameter,
    find_symmetry_parameters,
    main_component_left_endpoint,
    multiplier_map,
    solve_virtual_cycle,
    tandelbrot_membership,
)
from .basin_model import (
    ModelConstants,
    eval_model_g,
    eval_model_g_derivative,
    model_constant_C,
    model_constants,
    solve_pstar,
)
from .rational import (
    RationalParam,
    approximation_error,
    chordal_distance,
    classify_an_grid,
    eval_rational,
    finite_critical_point,
)
from .newton import (
    NewtonParam,
    classify_newton_orbit,
    eval_newton,
    eval_newton_derivative,
    newton_orbit_points,
    newton_pole,
    residual_f,
)
from .render import TileGrid, Viewport, render_dynamical_plane, render_parameter_plane
from .tiles import decode_tile, encode_tile
from .colorize import PaletteSpec, colorize, to_png, to_ppm

__version__ = "0.1.0"
