"""Error measures, experiment driver, convergence and Galilean studies."""

import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from functools import partial
from typing import Callable, List, Optional, Sequence, Tuple, Union

import numpy as np

from . import baseline_schemes as base
from . import invariant_schemes as inv
from .analytic import (
    PdeParams,
    ade1d_exact,
    ade2d_exact,
    galilean_exact,
    ibe_exact,
    vbe_exact,
)
from .baseline_schemes import StepContext
from .compact_ops import Field, Grid1D, Grid2D
from .errors import ShapeMismatch, StepCountMismatch

PDES = ("ibe", "ade1d", "vbe", "ade2d")

SCHEMES_BY_PDE = {
    "ibe": ("ftcs", "comp", "sym"),
    "ade1d": ("ftcs", "comp", "sym"),
    "vbe": ("ftcs", "comp", "sym"),
    "ade2d": ("ftcs", "comp", "sym1", "sym2"),
}

_STEPPERS = {
    ("ibe", "ftcs"): base.ftcs_step_ibe,
    ("ibe", "comp"): base.comp_step_ibe,
    ("ibe", "sym"): inv.sym_step_ibe,
    ("ade1d", "ftcs"): base.ftcs_step_ade1d,
    ("ade1d", "comp"): base.comp_step_ade1d,
    ("ade1d", "sym"): inv.sym_step_ade1d,
    ("vbe", "ftcs"): base.ftcs_step_vbe,
    ("vbe", "comp"): base.comp_step_vbe,
    ("vbe", "sym"): inv.sym_step_vbe,
    ("ade2d", "ftcs"): base.ftcs_step_ade2d,
    ("ade2d", "comp"): base.comp_step_ade2d,
    ("ade2d", "sym1"): partial(inv.sym_step_ade2d, variant="sym1"),
    ("ade2d", "sym2"): partial(inv.sym_step_ade2d, variant="sym2"),
}


def rmse(numeric: Field, exact: Field) -> float:
    """Root mean square difference over all nodes."""
    a = np.asarray(numeric, dtype=float)
    b = np.asarray(exact, dtype=float)
    if a.shape != b.shape:
        raise ShapeMismatch(f"shapes {a.shape} and {b.shape} differ")
    return float(np.sqrt(np.mean((a - b) ** 2)))


def linf(numeric: Field, exact: Field) -> float:
    """Max absolute difference over all nodes."""
    a = np.asarray(numeric, dtype=float)
    b = np.asarray(exact, dtype=float)
    if a.shape != b.shape:
        raise ShapeMismatch(f"shapes {a.shape} and {b.shape} differ")
    return float(np.max(np.abs(a - b)))


@dataclass
class ErrorReport:
    """Error summary of one experiment run."""

    scheme: str
    pde: str
    n: Union[int, Tuple[int, int]]
    h: Union[float, Tuple[float, float]]
    tau: float
    t_final: float
    rmse: float
    linf: float
    wall_time: float


@dataclass
class ConvergenceTable:
    """Grid-refinement study of one (pde, scheme) pair.

    rows hold (n, h, linf) in ascending n; slope is the least-squares
    slope of log(linf) against log(h).
    """

    pde: str
    scheme: str
    rows: List[Tuple[int, float, float]]
    slope: float


def stepper(pde: str, scheme: str) -> Callable:
    """Look up the step function for a (pde, scheme) pair."""
    try:
        return _STEPPERS[(pde, scheme)]
    except KeyError:
        raise ValueError(f"no scheme {scheme!r} for pde {pde!r}") from None


def default_exact(pde: str, params: PdeParams) -> Callable:
    """The reference solution for a PDE, with parameters baked in."""
    if pde == "ibe":
        return lambda t, x: ibe_exact(t, x, params.sigma)
    if pde == "ade1d":
        return lambda t, x: ade1d_exact(t, x, params)
    if pde == "vbe":
        return lambda t, x: vbe_exact(t, x, params.nu)
    if pde == "ade2d":
        return lambda t, x, y: ade2d_exact(t, x, y, params)
    raise ValueError(f"unknown pde {pde!r}")


def evolve(
    pde: str,
    scheme: str,
    grid: Union[Grid1D, Grid2D],
    tau: float,
    t_final: float,
    params: PdeParams,
    exact: Optional[Callable] = None,
    mesh_velocity: float = 0.0,
) -> Tuple[Field, Field, ErrorReport]:
    """March from exact initial data to t_final; also return the fields.

    Returns (numeric, reference, report). The reference is the exact
    solution sampled on the final node positions, which differ from the
    initial ones only for the sliding-mesh runs (mesh_velocity != 0).
    """
    step = stepper(pde, scheme)
    if mesh_velocity != 0.0 and (pde, scheme) != ("vbe", "sym"):
        raise ValueError("only the invariant viscous Burgers step supports a sliding mesh")
    if exact is None:
        exact = default_exact(pde, params)
    n_steps = int(round(t_final / tau))
    if abs(n_steps * tau - t_final) > 1e-9:
        raise StepCountMismatch(
            f"t_final = {t_final} is not a whole number of steps of tau = {tau}"
        )
    start = time.perf_counter()
    two_d = isinstance(grid, Grid2D)
    if two_d:
        mesh = np.meshgrid(grid.x, grid.y, indexing="ij")
        u = exact(0.0, *mesh)
    else:
        u = exact(0.0, grid.x)
    ctx = StepContext(grid, params, tau, 0.0, exact, mesh_velocity)
    for k in range(n_steps):
        ctx.t = k * tau
        u = step(u, ctx)
    if two_d:
        ref = exact(t_final, *mesh)
    else:
        ref = exact(t_final, grid.x + mesh_velocity * t_final)
    report = ErrorReport(
        scheme=scheme,
        pde=pde,
        n=(grid.nx, grid.ny) if two_d else grid.n,
        h=(grid.hx, grid.hy) if two_d else grid.h,
        tau=tau,
        t_final=t_final,
        rmse=rmse(u, ref),
        linf=linf(u, ref),
        wall_time=time.perf_counter() - start,
    )
    return u, ref, report


def run_experiment(
    pde: str,
    scheme: str,
    grid: Union[Grid1D, Grid2D],
    tau: float,
    t_final: float,
    params: PdeParams,
    exact: Optional[Callable] = None,
    mesh_velocity: float = 0.0,
) -> ErrorReport:
    """March from exact initial data to t_final and report the errors."""
    return evolve(pde, scheme, grid, tau, t_final, params, exact, mesh_velocity)[2]


def _map_cells(fn: Callable, items: Sequence, workers: int) -> list:
    """Run independent study cells, optionally on a small thread pool."""
    if workers <= 1:
        return [fn(item) for item in items]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, items))


def grid_for(pde: str, domain: Sequence[float], n: int) -> Union[Grid1D, Grid2D]:
    """Uniform grid with n nodes per axis spanning the domain bounds."""
    if pde == "ade2d":
        x_lo, x_hi, y_lo, y_hi = domain
        return Grid2D(
            x_lo, y_lo, (x_hi - x_lo) / (n - 1), (y_hi - y_lo) / (n - 1), n, n
        )
    lo, hi = domain
    return Grid1D(lo, (hi - lo) / (n - 1), n)


def fit_slope(hs: Sequence[float], errors: Sequence[float]) -> float:
    """Least-squares slope of log(error) against log(h)."""
    return float(np.polyfit(np.log(np.asarray(hs, float)), np.log(np.asarray(errors, float)), 1)[0])


def convergence_study(
    pde: str,
    scheme: str,
    sizes: Sequence[int],
    tau: float,
    t_final: float,
    params: PdeParams,
    domain: Sequence[float],
    workers: int = 1,
) -> ConvergenceTable:
    """One run per grid size at fixed small tau, plus the fitted slope."""
    sizes = sorted(set(int(n) for n in sizes))
    if len(sizes) < 3:
        raise ValueError(f"need at least 3 grid sizes, got {sizes}")
    reports = _map_cells(
        lambda n: run_experiment(pde, scheme, grid_for(pde, domain, n), tau, t_final, params),
        sizes,
        workers,
    )
    rows = []
    for n, rep in zip(sizes, reports):
        h = rep.h[0] if isinstance(rep.h, tuple) else rep.h
        rows.append((n, h, rep.linf))
    slope = fit_slope([r[1] for r in rows], [r[2] for r in rows])
    return ConvergenceTable(pde=pde, scheme=scheme, rows=rows, slope=slope)


def galilean_experiment(
    c_values: Sequence[float],
    schemes: Sequence[str] = ("ftcs", "comp", "sym"),
    grid: Optional[Grid1D] = None,
    tau: float = 1e-4,
    t_final: float = 0.25,
    params: Optional[PdeParams] = None,
    workers: int = 1,
) -> List[Tuple[float, str, ErrorReport]]:
    """Errors of the viscous Burgers schemes under Galilean-boosted data.

    For each boost speed c the initial and boundary data are drawn from
    the boosted reference solution. FTCS and COMP evolve on the static
    grid and degrade with c; the invariant scheme's nodes slide with the
    boost, which realizes the same run in boosted coordinates and keeps
    its error independent of c.
    """
    if grid is None:
        grid = Grid1D(0.0, 2.0 * np.pi / 100.0, 101)
    if params is None:
        params = PdeParams(nu=1.0 / 12.0)
    plain = default_exact("vbe", params)

    def one_cell(cell):
        c, scheme = cell
        boosted = galilean_exact(plain, c)
        velocity = c if scheme == "sym" else 0.0
        report = run_experiment(
            "vbe", scheme, grid, tau, t_final, params,
            exact=boosted, mesh_velocity=velocity,
        )
        return (c, scheme, report)

    cells = [(float(c), s) for c in c_values for s in schemes]
    return _map_cells(one_cell, cells, workers)
