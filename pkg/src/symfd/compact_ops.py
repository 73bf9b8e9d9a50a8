"""Fourth-order compact (Pade) first and second derivatives on uniform grids.

Interior rows couple neighbouring derivative values implicitly:

    (1/6)  U'_{i-1} + (2/3) U'_i  + (1/6)  U'_{i+1}  = (U_{i+1} - U_{i-1}) / (2h)
    (1/12) U''_{i-1} + (5/6) U''_i + (1/12) U''_{i+1} = (U_{i+1} - 2U_i + U_{i-1}) / h^2

both fourth-order accurate. The end rows either close the system with
one-sided third-order compact rows (exact for cubics resp. quartics) or pin
the end derivatives to caller-supplied exact values. 2D fields are handled
axis by axis, one tridiagonal solve per grid line.
"""

from dataclasses import dataclass

import numpy as np

from .errors import ShapeMismatch
from .tridiag import TriDiagSystem, solve_tridiagonal, solve_tridiagonal_many

# A field is a plain array of node values: shape (n,) on Grid1D and
# row-major (nx, ny) on Grid2D.
Field = np.ndarray


@dataclass(frozen=True)
class Grid1D:
    """Uniform 1D mesh: nodes x0 + i*h for i = 0 .. n-1."""

    x0: float
    h: float
    n: int

    def __post_init__(self):
        if self.h <= 0:
            raise ValueError(f"grid spacing must be positive, got h = {self.h}")
        if self.n < 5:
            raise ValueError(f"need at least 5 nodes for the closures, got n = {self.n}")

    @property
    def x(self) -> np.ndarray:
        return self.x0 + self.h * np.arange(self.n)


@dataclass(frozen=True)
class Grid2D:
    """Uniform tensor-product mesh; fields are indexed values[ix, iy]."""

    x0: float
    y0: float
    hx: float
    hy: float
    nx: int
    ny: int

    def __post_init__(self):
        if self.hx <= 0 or self.hy <= 0:
            raise ValueError(
                f"grid spacings must be positive, got hx = {self.hx}, hy = {self.hy}"
            )
        if self.nx < 5 or self.ny < 5:
            raise ValueError(
                f"need at least 5 nodes per axis, got nx = {self.nx}, ny = {self.ny}"
            )

    @property
    def x(self) -> np.ndarray:
        return self.x0 + self.hx * np.arange(self.nx)

    @property
    def y(self) -> np.ndarray:
        return self.y0 + self.hy * np.arange(self.ny)


@dataclass(frozen=True)
class BoundaryPolicy:
    """End-row treatment for the derivative systems.

    "one_sided": third-order one-sided compact rows; keeps the system
    self-contained when only node values are known.
    "exact": identity end rows pinning the end derivatives to (left,
    right); isolates the interior stencil order in property tests. On 2D
    fields the two scalars apply to every grid line, so this kind is
    only useful there when the true end derivative is constant along the
    boundary.
    """

    kind: str
    left: float = 0.0
    right: float = 0.0

    def __post_init__(self):
        if self.kind not in ("one_sided", "exact"):
            raise ValueError(f"unknown boundary policy kind {self.kind!r}")

    @classmethod
    def one_sided(cls) -> "BoundaryPolicy":
        return cls("one_sided")

    @classmethod
    def exact(cls, left: float, right: float) -> "BoundaryPolicy":
        return cls("exact", float(left), float(right))


ONE_SIDED = BoundaryPolicy.one_sided()


def _first_derivative_rows(u, h, bp):
    """Bands and right-hand side(s) for the U' system; u may be (n,) or (n, m)."""
    n = u.shape[0]
    lower = np.full(n - 1, 1.0 / 6.0)
    diag = np.full(n, 2.0 / 3.0)
    upper = np.full(n - 1, 1.0 / 6.0)
    rhs = np.empty_like(u)
    rhs[1:-1] = (u[2:] - u[:-2]) / (2.0 * h)
    diag[0] = diag[-1] = 1.0
    if bp.kind == "one_sided":
        # U'_1 + 2 U'_2 = (-5 U_1 + 4 U_2 + U_3) / (2h), mirrored on the right
        upper[0] = 2.0
        lower[-1] = 2.0
        rhs[0] = (-5.0 * u[0] + 4.0 * u[1] + u[2]) / (2.0 * h)
        rhs[-1] = (5.0 * u[-1] - 4.0 * u[-2] - u[-3]) / (2.0 * h)
    else:
        upper[0] = 0.0
        lower[-1] = 0.0
        rhs[0] = bp.left
        rhs[-1] = bp.right
    return lower, diag, upper, rhs


def _second_derivative_rows(u, h, bp):
    """Bands and right-hand side(s) for the U'' system."""
    n = u.shape[0]
    h2 = h * h
    lower = np.full(n - 1, 1.0 / 12.0)
    diag = np.full(n, 5.0 / 6.0)
    upper = np.full(n - 1, 1.0 / 12.0)
    rhs = np.empty_like(u)
    rhs[1:-1] = (u[2:] - 2.0 * u[1:-1] + u[:-2]) / h2
    diag[0] = diag[-1] = 1.0
    if bp.kind == "one_sided":
        # U''_1 + 11 U''_2 = (13 U_1 - 27 U_2 + 15 U_3 - U_4) / h^2, mirrored
        upper[0] = 11.0
        lower[-1] = 11.0
        rhs[0] = (13.0 * u[0] - 27.0 * u[1] + 15.0 * u[2] - u[3]) / h2
        rhs[-1] = (13.0 * u[-1] - 27.0 * u[-2] + 15.0 * u[-3] - u[-4]) / h2
    else:
        upper[0] = 0.0
        lower[-1] = 0.0
        rhs[0] = bp.left
        rhs[-1] = bp.right
    return lower, diag, upper, rhs


def _check_1d(u, grid):
    u = np.asarray(u, dtype=float)
    if u.shape != (grid.n,):
        raise ShapeMismatch(f"field shape {u.shape} does not match grid n = {grid.n}")
    return u


def _check_2d(u, grid):
    u = np.asarray(u, dtype=float)
    if u.shape != (grid.nx, grid.ny):
        raise ShapeMismatch(
            f"field shape {u.shape} does not match grid ({grid.nx}, {grid.ny})"
        )
    return u


def compact_dx(u: Field, grid: Grid1D, bp: BoundaryPolicy = ONE_SIDED) -> Field:
    """First derivative of a 1D field, fourth-order in the interior."""
    u = _check_1d(u, grid)
    lower, diag, upper, rhs = _first_derivative_rows(u, grid.h, bp)
    return solve_tridiagonal(TriDiagSystem(lower, diag, upper, rhs))


def compact_dxx(u: Field, grid: Grid1D, bp: BoundaryPolicy = ONE_SIDED) -> Field:
    """Second derivative of a 1D field, fourth-order in the interior."""
    u = _check_1d(u, grid)
    lower, diag, upper, rhs = _second_derivative_rows(u, grid.h, bp)
    return solve_tridiagonal(TriDiagSystem(lower, diag, upper, rhs))


def compact_dx_along_x(u: Field, grid: Grid2D, bp: BoundaryPolicy = ONE_SIDED) -> Field:
    """d/dx of a 2D field: the 1D operator applied to every x-line."""
    u = _check_2d(u, grid)
    lower, diag, upper, rhs = _first_derivative_rows(u, grid.hx, bp)
    return solve_tridiagonal_many(lower, diag, upper, rhs)


def compact_dx_along_y(u: Field, grid: Grid2D, bp: BoundaryPolicy = ONE_SIDED) -> Field:
    """d/dy of a 2D field: the 1D operator applied to every y-line."""
    u = _check_2d(u, grid)
    ut = np.ascontiguousarray(u.T)
    lower, diag, upper, rhs = _first_derivative_rows(ut, grid.hy, bp)
    return np.ascontiguousarray(solve_tridiagonal_many(lower, diag, upper, rhs).T)


def compact_dxx_along_x(u: Field, grid: Grid2D, bp: BoundaryPolicy = ONE_SIDED) -> Field:
    """d2/dx2 of a 2D field, axis-wise."""
    u = _check_2d(u, grid)
    lower, diag, upper, rhs = _second_derivative_rows(u, grid.hx, bp)
    return solve_tridiagonal_many(lower, diag, upper, rhs)


def compact_dxx_along_y(u: Field, grid: Grid2D, bp: BoundaryPolicy = ONE_SIDED) -> Field:
    """d2/dy2 of a 2D field, axis-wise."""
    u = _check_2d(u, grid)
    ut = np.ascontiguousarray(u.T)
    lower, diag, upper, rhs = _second_derivative_rows(ut, grid.hy, bp)
    return np.ascontiguousarray(solve_tridiagonal_many(lower, diag, upper, rhs).T)
