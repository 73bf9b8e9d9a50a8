"""Tests for the symmetry-preserving steps, frames, and equivariance."""

import math

import numpy as np
import pytest

from symfd import (
    FrameSingularity,
    Grid1D,
    Grid2D,
    MovingFrame,
    NonFinite,
    PdeParams,
    StepContext,
    ZeroState,
    comp_step_ade1d,
    comp_step_ade2d,
    evolve,
    galilean_exact,
    invariantize_check,
    sym_step_ade1d,
    sym_step_ade2d,
    sym_step_ibe,
    sym_step_vbe,
    vbe_exact,
)
from symfd.invariant_schemes import ade2d_frame, ibe_frame, vbe_frame

TAU = 1e-3
VBE_NU = 1.0 / 12.0


def rarefaction(t, x):
    return np.asarray(x, float) / (1.0 + t)


def make_ctx(grid, tau, t, provider, nu=0.0, mesh_velocity=0.0):
    return StepContext(grid, PdeParams(nu=nu), tau, t, provider, mesh_velocity)


class TestFrames:
    def test_zero_slope_gives_identity_frame(self):
        zeros = np.zeros(7)
        for frame_fn in (ibe_frame, vbe_frame):
            frame = frame_fn(zeros, TAU)
            assert isinstance(frame, MovingFrame)
            assert np.array_equal(frame.s1, zeros)
            assert np.array_equal(frame.lambda_next, np.ones(7))

    def test_plane_frame_normalizations(self):
        rng = np.random.default_rng(11)
        u = rng.uniform(0.5, 2.0, (6, 5))
        uxx = rng.normal(size=(6, 5))
        uyy = rng.normal(size=(6, 5))
        p = PdeParams(alpha=1.5, beta=-0.5, nu=0.2)
        f1 = ade2d_frame(u, uxx, uyy, "sym1", p, TAU)
        # the first variant cancels the streamwise curvature exactly
        assert np.abs(uxx - 2.0 * f1.s1 * u).max() <= 1e-13
        f2 = ade2d_frame(u, uxx, uyy, "sym2", p, TAU)
        # the second cancels the whole curvature sum
        assert np.abs((uxx + uyy) - 4.0 * f2.s1 * u).max() <= 1e-13
        for f in (f1, f2):
            assert f.gamma == pytest.approx(-p.alpha * TAU, abs=0)
            assert f.theta == pytest.approx(-p.beta * TAU, abs=0)
            assert np.allclose(f.lambda_next, 1.0 - 4.0 * p.nu * f.s1 * TAU, atol=0)

    def test_unknown_variant_rejected(self):
        with pytest.raises(ValueError):
            ade2d_frame(np.ones(3), np.zeros(3), np.zeros(3), "sym3", PdeParams(), TAU)


class TestFixedPointsAndExactness:
    def test_constants_are_fixed_points(self):
        grid = Grid1D(0.5, 0.25, 9)
        const = lambda t, x: np.full_like(np.asarray(x, float), 2.5)
        u = np.full(9, 2.5)
        for step, nu in ((sym_step_ibe, 0.0), (sym_step_ade1d, 0.1), (sym_step_vbe, 0.1)):
            out = step(u.copy(), make_ctx(grid, TAU, 0.0, const, nu=nu))
            assert np.abs(out - 2.5).max() <= 1e-13

    def test_constants_are_fixed_points_2d(self):
        grid = Grid2D(0.0, 0.0, 0.2, 0.2, 8, 8)
        const = lambda t, x, y: np.full(np.broadcast(np.asarray(x), np.asarray(y)).shape, 1.5)
        u = np.full((8, 8), 1.5)
        for variant in ("sym1", "sym2"):
            ctx = StepContext(grid, PdeParams(nu=0.1), TAU, 0.0, const)
            out = sym_step_ade2d(u.copy(), ctx, variant)
            assert np.abs(out - 1.5).max() <= 1e-13

    def test_one_step_exact_on_expanding_linear_profile(self):
        # u = x / (1 + t) solves both 1d Burgers problems; the frame turns
        # one invariant step into the exact update
        grid = Grid1D(1.0, 0.25, 9)
        for step, nu in ((sym_step_ibe, 0.0), (sym_step_vbe, VBE_NU)):
            for t0 in (0.0, 0.5):
                u0 = rarefaction(t0, grid.x)
                out = step(u0, make_ctx(grid, TAU, t0, rarefaction, nu=nu))
                assert np.abs(out - rarefaction(t0 + TAU, grid.x)).max() <= 1e-12

    def test_many_steps_stay_exact_on_expanding_profile(self):
        grid = Grid1D(1.0, 0.25, 9)
        steps = 50
        for pde, nu in (("ibe", 0.0), ("vbe", VBE_NU)):
            _, _, report = evolve(
                pde, "sym", grid, TAU, steps * TAU, PdeParams(nu=nu), exact=rarefaction
            )
            assert report.linf <= 1e-12

    def test_sliding_mesh_keeps_boosted_linear_profile_exact(self):
        c = 0.6
        grid = Grid1D(1.0, 0.25, 9)
        boosted = galilean_exact(rarefaction, c)
        u0 = boosted(0.0, grid.x)
        ctx = make_ctx(grid, TAU, 0.0, boosted, nu=VBE_NU, mesh_velocity=c)
        out = sym_step_vbe(u0, ctx)
        assert np.abs(out - boosted(TAU, grid.x + c * TAU)).max() <= 1e-12

    def test_advection_reduction_matches_base_scheme_on_linear_data(self):
        # with no curvature the drift frame is trivial and the invariant
        # update must agree with the plain compact step
        grid = Grid1D(0.0, 0.2, 13)
        linear = lambda t, x: 2.0 + 0.5 * np.asarray(x, float)
        u = linear(0.0, grid.x)
        p = PdeParams(alpha=1.0, nu=1.0 / 60.0)
        ctx = StepContext(grid, p, TAU, 0.0, linear)
        out_sym = sym_step_ade1d(u.copy(), ctx)
        out_comp = comp_step_ade1d(u.copy(), ctx)
        assert np.abs(out_sym - out_comp).max() <= 1e-12

    def test_advection_reduction_matches_base_scheme_on_linear_data_2d(self):
        grid = Grid2D(0.0, 0.0, 0.2, 0.2, 9, 9)
        plane = lambda t, x, y: 5.0 + np.asarray(x, float) + 2.0 * np.asarray(y, float)
        u = plane(0.0, grid.x[:, None], grid.y[None, :])
        p = PdeParams(alpha=1.0, beta=1.0, nu=1.0 / 60.0)
        ctx = StepContext(grid, p, TAU, 0.0, plane)
        out_comp = comp_step_ade2d(u.copy(), ctx)
        for variant in ("sym1", "sym2"):
            out_sym = sym_step_ade2d(u.copy(), ctx, variant)
            assert np.abs(out_sym - out_comp).max() <= 1e-12


class TestGuards:
    def test_projective_factor_blowup_is_detected(self):
        # slope -1/tau drives the factor to zero mid-domain
        grid = Grid1D(0.0, 0.25, 9)
        u = -10.0 * grid.x
        ctx = make_ctx(grid, 0.1, 0.0, lambda t, x: -10.0 * np.asarray(x, float))
        with pytest.raises(FrameSingularity):
            sym_step_ibe(u, ctx)
        with pytest.raises(FrameSingularity):
            sym_step_vbe(u, make_ctx(grid, 0.1, 0.0, lambda t, x: -10.0 * np.asarray(x, float), nu=VBE_NU))

    def test_positive_branch_violation_is_detected(self):
        # strong positive curvature with large diffusion flips the factor
        # sign; spacing 0.2 keeps the run below the stability screens
        grid = Grid1D(0.0, 0.2, 11)
        steep = lambda t, x: np.exp(8.0 * np.asarray(x, float))
        u = steep(0.0, grid.x)
        ctx = StepContext(grid, PdeParams(alpha=1.0, nu=1.0), 0.01, 0.0, steep)
        with pytest.raises(FrameSingularity):
            sym_step_ade1d(u, ctx)

    def test_positive_branch_violation_is_detected_2d(self):
        grid = Grid2D(0.0, 0.0, 0.2, 0.2, 11, 6)
        steep = lambda t, x, y: np.exp(8.0 * np.asarray(x, float)) + 0.0 * np.asarray(y, float)
        u = steep(0.0, grid.x[:, None], grid.y[None, :])
        ctx = StepContext(grid, PdeParams(alpha=1.0, beta=1.0, nu=1.0), 0.01, 0.0, steep)
        with pytest.raises(FrameSingularity):
            sym_step_ade2d(u, ctx, "sym1")

    def test_zero_state_is_detected(self):
        grid = Grid1D(-1.0, 0.2, 11)  # node 5 sits exactly at zero
        sign_change = lambda t, x: np.asarray(x, float)
        ctx = StepContext(grid, PdeParams(alpha=1.0, nu=0.01), TAU, 0.0, sign_change)
        with pytest.raises(ZeroState):
            sym_step_ade1d(grid.x.copy(), ctx)

    def test_zero_state_is_detected_2d(self):
        grid = Grid2D(0.0, 0.0, 0.2, 0.2, 8, 8)
        u = np.ones((8, 8))
        u[3, 4] = 0.0
        const = lambda t, x, y: np.full(np.broadcast(np.asarray(x), np.asarray(y)).shape, 1.0)
        ctx = StepContext(grid, PdeParams(nu=0.1), TAU, 0.0, const)
        with pytest.raises(ZeroState):
            sym_step_ade2d(u, ctx, "sym2")

    def test_non_finite_output_is_detected(self):
        grid = Grid1D(0.0, 0.25, 9)
        bad = np.ones(9)
        bad[4] = np.nan
        ctx = make_ctx(grid, TAU, 0.0, lambda t, x: np.ones_like(np.asarray(x, float)), nu=VBE_NU)
        with pytest.raises(NonFinite):
            sym_step_vbe(bad, ctx)


class TestEquivariance:
    def test_commutation_defect_is_roundoff(self):
        assert invariantize_check("vbe", [0.0, 0.5, 1.0]) <= 1e-12
        assert invariantize_check("ibe", [-0.3, 0.0, 0.4]) <= 1e-12

    def test_unknown_scheme_rejected(self):
        with pytest.raises(ValueError):
            invariantize_check("ade1d", [0.0])

    def test_multi_step_boost_commutation(self):
        # boost speeds chosen so c * t_final lands on a whole number of
        # cells: the boosted fixed-grid run can then be compared with the
        # node-shifted unboosted run without interpolation
        n, t_final, tau = 101, 0.25, 1e-3
        grid = Grid1D(0.0, 2.0 * math.pi / (n - 1), n)
        params = PdeParams(nu=VBE_NU)
        plain_exact = lambda t, x: vbe_exact(t, x, VBE_NU)
        plain = {
            s: evolve("vbe", s, grid, tau, t_final, params)[0]
            for s in ("ftcs", "comp", "sym")
        }
        defects = {"ftcs": [], "comp": [], "sym": []}
        for k in (1, 2, 4):
            c = k * grid.h / t_final
            boosted = galilean_exact(plain_exact, c)
            for s in defects:
                velocity = c if s == "sym" else 0.0
                shifted, _, _ = evolve(
                    "vbe", s, grid, tau, t_final, params, exact=boosted, mesh_velocity=velocity
                )
                if s == "sym":
                    # nodes slide with the boost: same index, same point
                    d = np.abs(shifted - (plain[s] + c)).max()
                else:
                    # fixed grid: the boost maps node i-k onto node i
                    d = np.abs(shifted[k:] - (plain[s][:-k] + c)).max()
                defects[s].append(float(d))
        assert max(defects["sym"]) <= 1e-10
        # the non-invariant schemes must fail the same test, more so for
        # faster boosts
        assert defects["ftcs"][0] > 1e-2
        assert defects["comp"][0] > 5e-3
        assert defects["ftcs"] == sorted(defects["ftcs"])
        assert defects["comp"] == sorted(defects["comp"])


class TestPublishedErrorLevels:
    def test_merging_front_errors_at_small_step(self):
        # frozen benchmark pair for the 101-node merging-front run with the
        # time step small enough that the spatial error dominates
        grid = Grid1D(0.0, 2.0 * math.pi / 100.0, 101)
        params = PdeParams(nu=VBE_NU)
        _, _, comp = evolve("vbe", "comp", grid, 1e-5, 0.25, params)
        _, _, sym = evolve("vbe", "sym", grid, 1e-5, 0.25, params)
        assert comp.linf == pytest.approx(0.0994, rel=0.02)
        assert comp.rmse == pytest.approx(0.0143, rel=0.02)
        assert sym.linf == pytest.approx(0.1060, rel=0.02)
        assert sym.rmse == pytest.approx(0.0140, rel=0.02)
