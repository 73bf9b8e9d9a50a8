"""Fourth-order compact finite differences with symmetry-preserving stepping.

The package solves four model problems (an inviscid and a viscous Burgers
equation, and advection-diffusion in one and two dimensions) three ways:
a second-order explicit baseline, a fourth-order compact-in-space scheme,
and an invariant variant of the compact scheme that commutes with the
point symmetries of each equation. Analytic reference solutions, error
metrics, refinement studies, and a boost-equivariance harness round out
the toolkit.
"""

from .analytic import (
    PdeParams,
    ade1d_exact,
    ade2d_exact,
    galilean_exact,
    galilean_transform_field,
    ibe_breaking_time,
    ibe_exact,
    vbe_exact,
)
from .baseline_schemes import (
    StepContext,
    comp_step_ade1d,
    comp_step_ade2d,
    comp_step_ibe,
    comp_step_vbe,
    ftcs_step_ade1d,
    ftcs_step_ade2d,
    ftcs_step_ibe,
    ftcs_step_vbe,
)
from .compact_ops import (
    BoundaryPolicy,
    Grid1D,
    Grid2D,
    compact_dx,
    compact_dx_along_x,
    compact_dx_along_y,
    compact_dxx,
    compact_dxx_along_x,
    compact_dxx_along_y,
)
from .errors import (
    ConfigInvalid,
    FrameSingularity,
    NoConvergence,
    NonFinite,
    PostBreakingTime,
    ShapeMismatch,
    StepCountMismatch,
    SymfdError,
    ZeroPivot,
    ZeroState,
)
from .invariant_schemes import (
    MovingFrame,
    invariantize_check,
    sym_step_ade1d,
    sym_step_ade2d,
    sym_step_ibe,
    sym_step_vbe,
)
from .metrics import (
    PDES,
    SCHEMES_BY_PDE,
    ConvergenceTable,
    ErrorReport,
    convergence_study,
    evolve,
    fit_slope,
    galilean_experiment,
    grid_for,
    linf,
    rmse,
    run_experiment,
)
from .tridiag import TriDiagSystem, solve_tridiagonal, solve_tridiagonal_many

__all__ = [
    "BoundaryPolicy",
    "ConfigInvalid",
    "ConvergenceTable",
    "ErrorReport",
    "FrameSingularity",
    "Grid1D",
    "Grid2D",
    "MovingFrame",
    "NoConvergence",
    "NonFinite",
    "PDES",
    "PdeParams",
    "PostBreakingTime",
    "SCHEMES_BY_PDE",
    "ShapeMismatch",
    "StepContext",
    "StepCountMismatch",
    "SymfdError",
    "TriDiagSystem",
    "ZeroPivot",
    "ZeroState",
    "ade1d_exact",
    "ade2d_exact",
    "comp_step_ade1d",
    "comp_step_ade2d",
    "comp_step_ibe",
    "comp_step_vbe",
    "compact_dx",
    "compact_dx_along_x",
    "compact_dx_along_y",
    "compact_dxx",
    "compact_dxx_along_x",
    "compact_dxx_along_y",
    "convergence_study",
    "evolve",
    "fit_slope",
    "ftcs_step_ade1d",
    "ftcs_step_ade2d",
    "ftcs_step_ibe",
    "ftcs_step_vbe",
    "galilean_exact",
    "galilean_experiment",
    "galilean_transform_field",
    "grid_for",
    "ibe_breaking_time",
    "ibe_exact",
    "invariantize_check",
    "linf",
    "rmse",
    "run_experiment",
    "solve_tridiagonal",
    "solve_tridiagonal_many",
    "sym_step_ade1d",
    "sym_step_ade2d",
    "sym_step_ibe",
    "sym_step_vbe",
    "vbe_exact",
]

__version__ = "0.1.0"
