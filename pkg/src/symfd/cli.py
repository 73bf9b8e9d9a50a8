"""Command-line front end: run, converge, galilean, selftest.

Configuration is a flat UTF-8 key=value file ('#' starts a comment) plus
positional key=value overrides, later wins. Data goes to CSV files and
standard output; diagnostics go to standard error. Exit code 0 iff no
error. The THREADS environment variable caps how many study cells run in
parallel (default: sequential).
"""

import argparse
import csv
import math
import os
import sys
from dataclasses import dataclass
from typing import Optional, Tuple

import numpy as np

from .analytic import PdeParams, galilean_exact
from .compact_ops import Grid1D, Grid2D
from .errors import ConfigInvalid, SymfdError
from .metrics import (
    PDES,
    SCHEMES_BY_PDE,
    convergence_study,
    default_exact,
    evolve,
    fit_slope,
    galilean_experiment,
    run_experiment,
)

# Table-run defaults per problem; any key can be overridden.
DEFAULTS = {
    "ibe": dict(
        scheme="sym", x_lo=-3.0, x_hi=3.0, nx=31,
        tau=1e-3, t_final=0.5, alpha=1.0, beta=1.0, nu=0.0,
    ),
    "ade1d": dict(
        scheme="sym", x_lo=-2.0, x_hi=4.0, nx=31,
        tau=1e-3, t_final=1.0, alpha=1.0, beta=1.0, nu=1.0 / 60.0,
    ),
    "vbe": dict(
        scheme="sym", x_lo=0.0, x_hi=2.0 * math.pi, nx=101,
        tau=1e-4, t_final=0.25, alpha=1.0, beta=1.0, nu=1.0 / 12.0,
    ),
    # The square is placed so a node sits at the origin, where the hump
    # starts; the drift then breaks the variant tie at the peak nodes.
    "ade2d": dict(
        scheme="sym2", x_lo=-1.92, x_hi=2.08, y_lo=-1.92, y_hi=2.08, nx=26, ny=26,
        tau=1e-4, t_final=0.1, alpha=1.0, beta=1.0, nu=1.0 / 60.0,
    ),
}

# Grid-refinement defaults: a small tau so spatial error dominates, a
# short horizon, and sizes coarse enough that the forward-Euler floor
# stays subdominant at the finest grid.
CONVERGE_DEFAULTS = {
    "ibe": dict(tau=1e-5, t_final=0.2, sizes="41,61,81,101"),
    "ade1d": dict(tau=1e-5, t_final=0.5, sizes="31,41,61"),
    "vbe": dict(tau=1e-5, t_final=0.25, sizes="101,151,201"),
    "ade2d": dict(tau=1e-5, t_final=0.05, sizes="16,21,26"),
}


@dataclass
class RunConfig:
    """Validated settings of one experiment run."""

    pde: str
    scheme: str
    domain: Tuple[float, ...]  # (x_lo, x_hi) or (x_lo, x_hi, y_lo, y_hi)
    n: Tuple[int, ...]  # (nx,) or (nx, ny)
    tau: float
    t_final: float
    alpha: float
    beta: float
    nu: float
    sigma: float
    L: float
    galilean_c: Optional[float]
    output_path: str

    @property
    def grid(self):
        if self.pde == "ade2d":
            x_lo, x_hi, y_lo, y_hi = self.domain
            nx, ny = self.n
            return Grid2D(
                x_lo, y_lo, (x_hi - x_lo) / (nx - 1), (y_hi - y_lo) / (ny - 1), nx, ny
            )
        lo, hi = self.domain
        nx = self.n[0]
        return Grid1D(lo, (hi - lo) / (nx - 1), nx)

    @property
    def params(self) -> PdeParams:
        return PdeParams(
            alpha=self.alpha, beta=self.beta, nu=self.nu, sigma=self.sigma, L=self.L
        )


def parse_config_file(path: str) -> dict:
    """Read a flat key=value file; '#' comments, blank lines ignored."""
    mapping = {}
    with open(path, encoding="utf-8") as handle:
        for lineno, raw in enumerate(handle, start=1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise ConfigInvalid(f"{path}:{lineno}: expected key=value, got {line!r}")
            key, value = line.split("=", 1)
            mapping[key.strip()] = value.strip()
    return mapping


def apply_overrides(mapping: dict, pairs) -> dict:
    """Merge key=value override strings; later entries win."""
    merged = dict(mapping)
    for pair in pairs:
        if "=" not in pair:
            raise ConfigInvalid(f"override {pair!r} is not of the form key=value")
        key, value = pair.split("=", 1)
        merged[key.strip()] = value.strip()
    return merged


def _as_float(mapping: dict, key: str) -> float:
    try:
        value = float(mapping[key])
    except (ValueError, TypeError):
        raise ConfigInvalid(f"field {key!r} must be a number, got {mapping[key]!r}") from None
    if not math.isfinite(value):
        raise ConfigInvalid(f"field {key!r} must be finite, got {value}")
    return value


def _as_int(mapping: dict, key: str) -> int:
    try:
        return int(mapping[key])
    except (ValueError, TypeError):
        raise ConfigInvalid(f"field {key!r} must be an integer, got {mapping[key]!r}") from None


def build_run_config(mapping: dict) -> RunConfig:
    """Layer defaults under the mapping and validate every field."""
    pde = mapping.get("pde")
    if pde not in PDES:
        raise ConfigInvalid(f"field 'pde' must be one of {PDES}, got {pde!r}")
    merged = dict(DEFAULTS[pde])
    merged.update(mapping)
    scheme = merged.get("scheme")
    if scheme not in SCHEMES_BY_PDE[pde]:
        raise ConfigInvalid(
            f"field 'scheme' must be one of {SCHEMES_BY_PDE[pde]} for pde {pde!r}, "
            f"got {scheme!r}"
        )
    merged.setdefault("sigma", 0.5)
    merged.setdefault("L", 0.4)
    if pde == "ade2d":
        domain = tuple(_as_float(merged, k) for k in ("x_lo", "x_hi", "y_lo", "y_hi"))
        if "nx" in mapping and "ny" not in mapping:
            merged["ny"] = merged["nx"]  # an explicit nx alone means a square grid
        n = (_as_int(merged, "nx"), _as_int(merged, "ny"))
    else:
        domain = (_as_float(merged, "x_lo"), _as_float(merged, "x_hi"))
        n = (_as_int(merged, "nx"),)
    for axis in range(len(n)):
        if n[axis] < 5:
            raise ConfigInvalid(f"field 'nx'/'ny' must be >= 5, got {n[axis]}")
        if domain[2 * axis + 1] <= domain[2 * axis]:
            raise ConfigInvalid(
                f"domain bounds {domain[2 * axis]} .. {domain[2 * axis + 1]} are not increasing"
            )
    tau = _as_float(merged, "tau")
    if tau <= 0:
        raise ConfigInvalid(f"field 'tau' must be positive, got {tau}")
    t_final = _as_float(merged, "t_final")
    if t_final < 0:
        raise ConfigInvalid(f"field 't_final' must be nonnegative, got {t_final}")
    galilean_c = None
    if "galilean_c" in merged and str(merged["galilean_c"]) != "":
        if pde != "vbe":
            raise ConfigInvalid("field 'galilean_c' only applies to pde 'vbe'")
        galilean_c = _as_float(merged, "galilean_c")
    sigma = _as_float(merged, "sigma")
    big_l = _as_float(merged, "L")
    if sigma <= 0:
        raise ConfigInvalid(f"field 'sigma' must be positive, got {sigma}")
    if big_l <= 0:
        raise ConfigInvalid(f"field 'L' must be positive, got {big_l}")
    nu = _as_float(merged, "nu")
    if nu < 0:
        raise ConfigInvalid(f"field 'nu' must be nonnegative, got {nu}")
    return RunConfig(
        pde=pde,
        scheme=scheme,
        domain=domain,
        n=n,
        tau=tau,
        t_final=t_final,
        alpha=_as_float(merged, "alpha"),
        beta=_as_float(merged, "beta"),
        nu=nu,
        sigma=sigma,
        L=big_l,
        galilean_c=galilean_c,
        output_path=str(merged.get("output_path", f"{pde}_{scheme}_profile.csv")),
    )


def _fmt(value: float) -> str:
    return format(float(value), ".17g")


def _write_csv(path: str, header, rows):
    with open(path, "w", encoding="utf-8", newline="") as handle:
        writer = csv.writer(handle)
        writer.writerow(header)
        writer.writerows(rows)


def _workers() -> int:
    raw = os.environ.get("THREADS")
    if raw is None or raw == "":
        return 1
    try:
        workers = int(raw)
    except ValueError:
        raise ConfigInvalid(f"THREADS must be an integer, got {raw!r}") from None
    if workers < 1:
        raise ConfigInvalid(f"THREADS must be >= 1, got {workers}")
    return workers


def cmd_run(mapping: dict) -> int:
    """Evolve one configuration; write the profile CSV, print a summary."""
    cfg = build_run_config(mapping)
    grid = cfg.grid
    params = cfg.params
    exact = None
    velocity = 0.0
    if cfg.galilean_c is not None:
        exact = galilean_exact(default_exact("vbe", params), cfg.galilean_c)
        if cfg.scheme == "sym":
            velocity = cfg.galilean_c
    numeric, reference, report = evolve(
        cfg.pde, cfg.scheme, grid, cfg.tau, cfg.t_final, params,
        exact=exact, mesh_velocity=velocity,
    )
    if cfg.pde == "ade2d":
        mesh_x, mesh_y = np.meshgrid(grid.x, grid.y, indexing="ij")
        rows = [
            (_fmt(x), _fmt(y), _fmt(un), _fmt(ue), _fmt(un - ue))
            for x, y, un, ue in zip(
                mesh_x.ravel(), mesh_y.ravel(), numeric.ravel(), reference.ravel()
            )
        ]
        header = ("x", "y", "u_numeric", "u_exact", "error")
    else:
        xs = grid.x + velocity * cfg.t_final
        rows = [
            (_fmt(x), _fmt(un), _fmt(ue), _fmt(un - ue))
            for x, un, ue in zip(xs, numeric, reference)
        ]
        header = ("x", "u_numeric", "u_exact", "error")
    _write_csv(cfg.output_path, header, rows)
    n_txt = "x".join(str(v) for v in (report.n if isinstance(report.n, tuple) else (report.n,)))
    h_txt = "x".join(_fmt(v) for v in (report.h if isinstance(report.h, tuple) else (report.h,)))
    print("scheme,pde,n,h,tau,t_final,rmse,linf,wall_time")
    print(
        ",".join(
            (
                report.scheme, report.pde, n_txt, h_txt, _fmt(report.tau),
                _fmt(report.t_final), _fmt(report.rmse), _fmt(report.linf),
                _fmt(report.wall_time),
            )
        )
    )
    return 0


def _parse_list(text: str, kind, field_name: str) -> list:
    try:
        return [kind(part) for part in str(text).split(",") if part.strip() != ""]
    except ValueError:
        raise ConfigInvalid(f"field {field_name!r} must be comma-separated, got {text!r}") from None


def cmd_converge(mapping: dict) -> int:
    """Grid-refinement study per scheme; CSV rows (scheme, n, h, linf, slope)."""
    pde = mapping.get("pde")
    if pde not in PDES:
        raise ConfigInvalid(f"field 'pde' must be one of {PDES}, got {pde!r}")
    merged = dict(DEFAULTS[pde])
    merged.update(CONVERGE_DEFAULTS[pde])
    merged.update(mapping)
    sizes = _parse_list(merged["sizes"], int, "sizes")
    if len(set(sizes)) < 3:
        raise ConfigInvalid(f"field 'sizes' needs at least 3 distinct grid sizes, got {sizes}")
    schemes = _parse_list(merged.get("schemes", ",".join(SCHEMES_BY_PDE[pde])), str, "schemes")
    for scheme in schemes:
        if scheme not in SCHEMES_BY_PDE[pde]:
            raise ConfigInvalid(f"field 'schemes' contains {scheme!r}, invalid for {pde!r}")
    merged.setdefault("scheme", schemes[0])
    cfg = build_run_config({**merged, "pde": pde})
    tau = _as_float(merged, "tau")
    t_final = _as_float(merged, "t_final")
    workers = _workers()
    rows = []
    for scheme in schemes:
        table = convergence_study(
            pde, scheme, sizes, tau, t_final, cfg.params, cfg.domain, workers=workers
        )
        rows.extend(
            (scheme, str(n), _fmt(h), _fmt(err), _fmt(table.slope))
            for n, h, err in table.rows
        )
        print(f"{pde} {scheme}: slope {table.slope:.3f}", file=sys.stderr)
    out = str(merged.get("output_path", f"{pde}_convergence.csv"))
    _write_csv(out, ("scheme", "n", "h", "linf", "slope"), rows)
    return 0


def cmd_galilean(mapping: dict) -> int:
    """Boost study for the viscous Burgers schemes; CSV rows (c, scheme, rmse, linf)."""
    pde = mapping.get("pde", "vbe")
    if pde != "vbe":
        raise ConfigInvalid(f"field 'pde' must be 'vbe' for the galilean study, got {pde!r}")
    merged = dict(DEFAULTS["vbe"])
    merged.update(mapping)
    merged["pde"] = "vbe"
    c_values = _parse_list(merged.get("c_values", "0,0.5,1.0"), float, "c_values")
    if not c_values:
        raise ConfigInvalid("field 'c_values' must list at least one boost speed")
    schemes = _parse_list(merged.get("schemes", "ftcs,comp,sym"), str, "schemes")
    for scheme in schemes:
        if scheme not in SCHEMES_BY_PDE["vbe"]:
            raise ConfigInvalid(f"field 'schemes' contains {scheme!r}, invalid for 'vbe'")
    merged.setdefault("scheme", schemes[0])
    cfg = build_run_config(merged)
    results = galilean_experiment(
        c_values,
        schemes=schemes,
        grid=cfg.grid,
        tau=cfg.tau,
        t_final=cfg.t_final,
        params=cfg.params,
        workers=_workers(),
    )
    rows = [
        (_fmt(c), scheme, _fmt(rep.rmse), _fmt(rep.linf)) for c, scheme, rep in results
    ]
    out = str(merged.get("output_path", "vbe_galilean.csv"))
    _write_csv(out, ("c", "scheme", "rmse", "linf"), rows)
    return 0


def _selftest_checks():
    """Quick example checks spanning every module; see cmd_selftest."""
    from .analytic import ade1d_exact, ade2d_exact, ibe_exact, vbe_exact
    from .baseline_schemes import StepContext
    from .compact_ops import compact_dx, compact_dxx
    from .invariant_schemes import sym_step_ibe, sym_step_vbe
    from .metrics import linf as metric_linf
    from .metrics import rmse as metric_rmse
    from .tridiag import TriDiagSystem, solve_tridiagonal

    def tridiag_identity():
        r = np.array([4.0, -1.0, 2.5])
        x = solve_tridiagonal(TriDiagSystem(np.zeros(2), np.ones(3), np.zeros(2), r))
        return np.array_equal(x, r)

    def tridiag_dense_oracle():
        x = solve_tridiagonal(
            TriDiagSystem([1.0, 1.0], [2.0, 2.0, 2.0], [1.0, 1.0], [1.0, 2.0, 3.0])
        )
        return np.allclose(x, [0.5, 0.0, 1.5], rtol=0, atol=1e-13)

    grid = Grid1D(0.0, 0.1, 11)

    def dx_of_constant():
        return np.abs(compact_dx(np.full(11, 3.7), grid)).max() < 1e-12

    def dx_of_linear():
        return np.abs(compact_dx(grid.x.copy(), grid) - 1.0).max() < 1e-12

    def dxx_of_quadratic():
        return np.abs(compact_dxx(grid.x**2, grid) - 2.0).max() < 1e-10

    def hump_peak():
        return abs(ibe_exact(0.0, 0.0, 0.5) - 1.0 / math.sqrt(0.5 * math.pi)) < 1e-14

    def kernel_peak():
        p = PdeParams(nu=1.0 / 60.0, L=0.4)
        return abs(ade1d_exact(0.0, 0.0, p) - 1.0 / math.sqrt(4 * math.pi * 0.16)) < 1e-14

    def shock_midpoint():
        return abs(vbe_exact(0.0, math.pi, 1.0 / 12.0) - 4.0) < 1e-12

    def plane_kernel_peak():
        p = PdeParams(nu=1.0 / 60.0, L=0.4)
        return abs(ade2d_exact(0.0, 0.0, 0.0, p) - 1.0 / (4 * math.pi * 0.16)) < 1e-14

    def rmse_hand_value():
        return abs(metric_rmse(np.array([3.0, 4.0]), np.zeros(2)) - math.sqrt(12.5)) < 1e-14

    def linf_hand_value():
        return metric_linf(np.array([-5.0, 1.0]), np.zeros(2)) == 5.0

    rarefaction = lambda t, x: np.asarray(x) / (1.0 + t)

    def one_step_exact_ibe():
        g = Grid1D(1.0, 0.25, 9)
        ctx = StepContext(g, PdeParams(nu=0.0), 1e-3, 0.0, rarefaction)
        out = sym_step_ibe(g.x.copy(), ctx)
        return np.abs(out - g.x / 1.001).max() < 1e-12

    def one_step_exact_vbe():
        g = Grid1D(1.0, 0.25, 9)
        ctx = StepContext(g, PdeParams(nu=1.0 / 12.0), 1e-3, 0.0, rarefaction)
        out = sym_step_vbe(g.x.copy(), ctx)
        return np.abs(out - g.x / 1.001).max() < 1e-12

    def boost_identity():
        u = np.linspace(0.0, 2.0, 7)
        from .analytic import galilean_transform_field

        same = galilean_transform_field(u, 0.0)
        f = galilean_exact(lambda t, x: np.asarray(x) * 0.5, 0.0)
        return np.array_equal(same, u) and f(0.3, 1.2) == 0.6

    def slope_recovery():
        hs = np.array([0.4, 0.2, 0.1])
        return abs(fit_slope(hs, 2.5 * hs**3) - 3.0) < 1e-10

    def zero_step_run():
        p = PdeParams(nu=1.0 / 60.0, L=0.4)
        rep = run_experiment("ade1d", "comp", Grid1D(-2.0, 0.2, 31), 1e-3, 0.0, p)
        return rep.rmse == 0.0 and rep.linf == 0.0

    return [
        ("tridiagonal identity system", tridiag_identity),
        ("tridiagonal dense oracle 3x3", tridiag_dense_oracle),
        ("first derivative of constant", dx_of_constant),
        ("first derivative of linear", dx_of_linear),
        ("second derivative of quadratic", dxx_of_quadratic),
        ("hump peak value at t=0", hump_peak),
        ("kernel peak value at t=0", kernel_peak),
        ("shock midpoint value", shock_midpoint),
        ("plane kernel peak at t=0", plane_kernel_peak),
        ("rmse hand value", rmse_hand_value),
        ("linf hand value", linf_hand_value),
        ("one-step exactness, invariant hump step", one_step_exact_ibe),
        ("one-step exactness, invariant viscous step", one_step_exact_vbe),
        ("zero boost is the identity", boost_identity),
        ("slope recovery on cubic errors", slope_recovery),
        ("zero-step run has zero error", zero_step_run),
    ]


def cmd_selftest() -> int:
    """Run the bundled example checks; print one PASS/FAIL line each."""
    failures = 0
    for name, check in _selftest_checks():
        try:
            ok = bool(check())
        except Exception as exc:  # a crashing check is a failing check
            print(f"FAIL {name} ({type(exc).__name__}: {exc})")
            failures += 1
            continue
        print(("PASS" if ok else "FAIL") + f" {name}")
        failures += 0 if ok else 1
    print(f"{failures} failure(s)")
    return 0 if failures == 0 else 1


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="symfd",
        description="Compact finite-difference schemes with symmetry-preserving variants",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    for name, text in (
        ("run", "evolve one configuration and write its profile"),
        ("converge", "grid-refinement study with fitted slopes"),
        ("galilean", "boost study for the viscous Burgers schemes"),
    ):
        p = sub.add_parser(name, help=text)
        p.add_argument("--config", help="key=value configuration file")
        p.add_argument("overrides", nargs="*", help="key=value overrides, later wins")
    sub.add_parser("selftest", help="run the bundled example checks")
    return parser


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        if args.command == "selftest":
            return cmd_selftest()
        mapping = {}
        if args.config:
            mapping.update(parse_config_file(args.config))
        mapping = apply_overrides(mapping, args.overrides)
        if args.command == "run":
            return cmd_run(mapping)
        if args.command == "converge":
            return cmd_converge(mapping)
        return cmd_galilean(mapping)
    except (SymfdError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
