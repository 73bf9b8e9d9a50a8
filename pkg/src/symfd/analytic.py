"""Reference solutions for the four model problems.

These closed-form (or implicitly defined) solutions provide initial data,
Dirichlet boundary data at every step, and the baseline for error
measurement. All accept scalar or array coordinates.
"""

import math
from dataclasses import dataclass

import numpy as np

from .errors import NoConvergence, PostBreakingTime


@dataclass(frozen=True)
class PdeParams:
    """Physical constants shared by the model problems.

    alpha, beta: advection speeds (beta only used in 2D); nu: diffusion
    coefficient; sigma: width of the inviscid-Burgers hump; L: width of
    the advection-diffusion kernel at t = 0.
    """

    alpha: float = 1.0
    beta: float = 1.0
    nu: float = 0.0
    sigma: float = 0.5
    L: float = 0.4

    def __post_init__(self):
        if self.nu < 0:
            raise ValueError(f"nu must be nonnegative, got {self.nu}")
        if self.sigma <= 0:
            raise ValueError(f"sigma must be positive, got {self.sigma}")
        if self.L <= 0:
            raise ValueError(f"L must be positive, got {self.L}")


def ibe_breaking_time(sigma: float) -> float:
    """First time the characteristics of the Gaussian hump cross.

    The t = 0 profile f(x) = exp(-x^2 / (2 sigma^2)) / sqrt(2 pi sigma^2)
    steepens fastest at x = sigma, so t_b = -1 / min f' = sigma^2 sqrt(2 pi e).
    """
    return sigma * sigma * math.sqrt(2.0 * math.pi * math.e)


def _hump(x: float, sigma: float) -> float:
    amp = 1.0 / math.sqrt(2.0 * math.pi * sigma * sigma)
    return amp * math.exp(-x * x / (2.0 * sigma * sigma))


def _ibe_scalar(t: float, x: float, sigma: float) -> float:
    u = _hump(x, sigma)
    if t == 0.0:
        return u
    # Fixed point u <- f(x - u t) contracts with ratio t / t_b < 1
    # before breaking; start from the t = 0 profile.
    steps = 0
    while steps < 60:
        steps += 1
        nxt = _hump(x - u * t, sigma)
        if abs(nxt - u) <= 1e-14 * (1.0 + abs(nxt)):
            u = nxt
            if abs(u - _hump(x - u * t, sigma)) <= 1e-13:
                return u
            break
        u = nxt
    # Close to breaking the contraction degrades; bisect F(u) = u - f(x - u t)
    # on [0, max f], which always brackets the pre-breaking root.
    lo = 0.0
    hi = _hump(0.0, sigma) * (1.0 + 1e-12)
    while steps < 200:
        steps += 1
        mid = 0.5 * (lo + hi)
        fmid = mid - _hump(x - mid * t, sigma)
        if abs(fmid) <= 1e-13:
            return mid
        if fmid <= 0.0:
            lo = mid
        else:
            hi = mid
    raise NoConvergence(
        f"implicit hump solve stalled at t = {t}, x = {x} after 200 steps"
    )


def ibe_exact(t, x, sigma: float = 0.5):
    """Implicit traveling-hump solution of u_t + u u_x = 0.

    Solves u = f(x - u t) with f the normalized Gaussian of width sigma;
    single-valued only before the breaking time, after which
    PostBreakingTime is raised.
    """
    if t >= ibe_breaking_time(sigma):
        raise PostBreakingTime(
            f"t = {t} is at or past breaking, t_b = {ibe_breaking_time(sigma):.6f}"
        )
    if np.ndim(x) == 0:
        return _ibe_scalar(float(t), float(x), sigma)
    x = np.asarray(x, dtype=float)
    out = np.array([_ibe_scalar(float(t), xx, sigma) for xx in x.ravel()])
    return out.reshape(x.shape)


def ade1d_exact(t, x, params: PdeParams):
    """Drifting, spreading Gaussian solving u_t + alpha u_x = nu u_xx."""
    d = params.L * params.L + params.nu * t
    if d <= 0:
        raise ValueError(f"kernel variance L^2 + nu t = {d} must be positive")
    xi = np.asarray(x, dtype=float) - params.alpha * t
    return np.exp(-xi * xi / (4.0 * d)) / np.sqrt(4.0 * math.pi * d)


def vbe_exact(t, x, nu: float):
    """Merging two-hump shock solution of u_t + u u_x = nu u_xx.

    u = 4 + (xi w1 + (xi - 2 pi) w2) / ((t + 1)(w1 + w2)) with xi = x - 4t
    and Gaussian weights centred at 0 and 2 pi. The weights are rescaled
    by their max so far-field evaluation never underflows to 0/0.
    """
    if nu <= 0:
        raise ValueError(f"nu must be positive, got {nu}")
    if t <= -1.0:
        raise ValueError(f"t must exceed -1, got {t}")
    big_t = t + 1.0
    xi = np.asarray(x, dtype=float) - 4.0 * t
    xi2 = xi - 2.0 * math.pi
    a1 = -xi * xi / (4.0 * nu * big_t)
    a2 = -xi2 * xi2 / (4.0 * nu * big_t)
    m = np.maximum(a1, a2)
    w1 = np.exp(a1 - m)
    w2 = np.exp(a2 - m)
    return 4.0 + (xi * w1 + xi2 * w2) / (big_t * (w1 + w2))


def ade2d_exact(t, x, y, params: PdeParams):
    """Drifting 2D Gaussian solving u_t + alpha u_x + beta u_y = nu laplacian(u).

    Mass-normalized plane heat kernel: the prefactor is 1 / (4 pi (L^2 + nu t));
    a square-root prefactor would not satisfy the equation in 2D.
    """
    d = params.L * params.L + params.nu * t
    if d <= 0:
        raise ValueError(f"kernel variance L^2 + nu t = {d} must be positive")
    xi = np.asarray(x, dtype=float) - params.alpha * t
    eta = np.asarray(y, dtype=float) - params.beta * t
    return np.exp(-(xi * xi + eta * eta) / (4.0 * d)) / (4.0 * math.pi * d)


def galilean_transform_field(u, c: float):
    """Boost a velocity field: same nodes, all values shifted by c."""
    return np.asarray(u, dtype=float) + c


def galilean_exact(base_exact, c: float):
    """Boosted reference solution: (t, x) -> base(t, x - c t) + c."""

    def boosted(t, x):
        return base_exact(t, np.asarray(x, dtype=float) - c * t) + c

    return boosted
