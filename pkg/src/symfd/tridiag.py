"""Tridiagonal linear systems and their direct solution.

The compact derivative stencils produce one tridiagonal system per grid
line; everything here is plain Thomas elimination (no pivoting, which the
strictly dominant compact matrices never need) with zero-pivot detection
to guard misuse.
"""

from dataclasses import dataclass

import numpy as np

from .errors import ShapeMismatch, ZeroPivot

# Elimination aborts rather than divides when a pivot falls below this.
PIVOT_TOL = 1e-14


@dataclass
class TriDiagSystem:
    """A x = rhs with tridiagonal A stored as three diagonals.

    lower[i] multiplies x[i] in row i+1; upper[i] multiplies x[i+1] in
    row i. Lengths must be n-1, n, n-1, n for a single n >= 2.
    """

    lower: np.ndarray
    diag: np.ndarray
    upper: np.ndarray
    rhs: np.ndarray

    def __post_init__(self):
        self.lower = np.atleast_1d(np.asarray(self.lower, dtype=float))
        self.diag = np.atleast_1d(np.asarray(self.diag, dtype=float))
        self.upper = np.atleast_1d(np.asarray(self.upper, dtype=float))
        self.rhs = np.atleast_1d(np.asarray(self.rhs, dtype=float))
        n = self.diag.shape[0]
        if n < 2:
            raise ShapeMismatch(f"need n >= 2 rows, got n = {n}")
        for name, band, want in (
            ("lower", self.lower, n - 1),
            ("upper", self.upper, n - 1),
            ("rhs", self.rhs, n),
        ):
            if band.shape != (want,):
                raise ShapeMismatch(
                    f"{name} has shape {band.shape}, expected ({want},) for n = {n}"
                )

    @property
    def n(self):
        return self.diag.shape[0]


def solve_tridiagonal(sys: TriDiagSystem) -> np.ndarray:
    """Solve a tridiagonal system by Thomas elimination.

    Inputs are left untouched; the result is a fresh array. Raises
    ZeroPivot when an elimination pivot drops below PIVOT_TOL in
    magnitude. The residual max-norm is <= 1e-12 * (1 + max|rhs|) for
    any reasonably conditioned system.
    """
    n = sys.n
    # Python float lists beat numpy scalar indexing in this serial loop.
    a = sys.lower.tolist()
    b = sys.diag.tolist()
    c = sys.upper.tolist()
    d = sys.rhs.tolist()
    for i in range(1, n):
        piv = b[i - 1]
        if abs(piv) < PIVOT_TOL:
            raise ZeroPivot(i - 1, abs(piv))
        w = a[i - 1] / piv
        b[i] -= w * c[i - 1]
        d[i] -= w * d[i - 1]
    piv = b[n - 1]
    if abs(piv) < PIVOT_TOL:
        raise ZeroPivot(n - 1, abs(piv))
    x = [0.0] * n
    x[n - 1] = d[n - 1] / piv
    for i in range(n - 2, -1, -1):
        x[i] = (d[i] - c[i] * x[i + 1]) / b[i]
    return np.array(x)


def solve_tridiagonal_many(lower, diag, upper, rhs) -> np.ndarray:
    """Solve one tridiagonal matrix against many right-hand sides.

    rhs has shape (n, m); column j is an independent right-hand side.
    The axis-wise 2D derivative operators use this, since every grid
    line shares the same matrix. Same elimination and pivot contract as
    solve_tridiagonal.
    """
    lower = np.asarray(lower, dtype=float)
    upper = np.asarray(upper, dtype=float)
    b = np.array(diag, dtype=float)
    d = np.array(rhs, dtype=float)
    n = b.shape[0]
    if d.shape[0] != n or lower.shape != (n - 1,) or upper.shape != (n - 1,):
        raise ShapeMismatch(
            f"band lengths {lower.shape[0]}/{n}/{upper.shape[0]} do not match "
            f"rhs with {d.shape[0]} rows"
        )
    for i in range(1, n):
        piv = b[i - 1]
        if abs(piv) < PIVOT_TOL:
            raise ZeroPivot(i - 1, abs(piv))
        w = lower[i - 1] / piv
        b[i] -= w * upper[i - 1]
        d[i] -= w * d[i - 1]
    piv = b[n - 1]
    if abs(piv) < PIVOT_TOL:
        raise ZeroPivot(n - 1, abs(piv))
    x = np.empty_like(d)
    x[n - 1] = d[n - 1] / piv
    for i in range(n - 2, -1, -1):
        x[i] = (d[i] - upper[i] * x[i + 1]) / b[i]
    return x
