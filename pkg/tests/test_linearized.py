import numpy as np
import pytest

from convac.errors import SolvabilityViolated
from convac.potential import Potential
from convac.profile import (
    RadialFunction,
    ode_residual,
    sigma,
    solve_linearized,
    solve_profile,
)


@pytest.fixture(scope="module")
def prof():
    return solve_profile(Potential.quartic())


def interior(prof, margin=2.0):
    return np.abs(prof.rho) <= prof.half_width - margin


def test_second_derivative_source_identity(prof):
    # -u'' + f''(theta0) u = theta0'' is solved by u = -rho * theta0' / 2.
    g = RadialFunction.from_values(prof, prof.theta0_pp)
    u = solve_linearized(g, prof)
    target = -0.5 * prof.rho * prof.theta0_p
    assert np.max(np.abs(u.values - target)[interior(prof)]) <= 1e-6
    assert u.values[(prof.rho.size - 1) // 2] == 0.0


def test_kernel_source_rejected(prof):
    with pytest.raises(SolvabilityViolated):
        solve_linearized(RadialFunction.from_values(prof, prof.theta0_p), prof)


def test_zero_source_gives_zero(prof):
    u = solve_linearized(RadialFunction.from_values(prof, np.zeros_like(prof.rho)), prof)
    assert np.max(np.abs(u.values)) == 0.0


def test_resubstituted_residual(prof):
    g = RadialFunction.from_values(prof, -prof.rho * prof.theta0_p)
    u = solve_linearized(g, prof)
    assert ode_residual(prof, u, g) <= 1e-6


def test_odd_source_gives_odd_solution(prof):
    g = RadialFunction.from_values(prof, -prof.rho * prof.theta0_p)
    u = solve_linearized(g, prof)
    assert u.parity == "odd"
    scale = np.max(np.abs(u.values))
    assert np.max(np.abs(u.values + u.values[::-1])) <= 1e-10 * scale


def test_even_source_gives_even_solution(prof):
    # Even, compatible source: remove the kernel component of theta0'^2.
    base = prof.theta0_p**2
    h = prof.h
    from convac.numerics import integrate_simpson

    coeff = integrate_simpson(base * prof.theta0_p, dx=h) / sigma(prof)
    g_vals = base - coeff * prof.theta0_p
    u = solve_linearized(RadialFunction.from_values(prof, g_vals), prof)
    assert u.parity == "even"
    assert u.values[(prof.rho.size - 1) // 2] == 0.0
    scale = np.max(np.abs(u.values))
    assert np.max(np.abs(u.values - u.values[::-1])) <= 1e-10 * scale


def test_decay_metadata(prof):
    g = RadialFunction.from_values(prof, prof.theta0_pp)
    u = solve_linearized(g, prof)
    assert u.decay_verified


def test_grid_refinement_oracle():
    # Same problem on a quarter-step profile grid; solutions agree on shared nodes.
    coarse = solve_profile(Potential.quartic(), h_rho=0.05)
    fine = solve_profile(Potential.quartic(), h_rho=0.0125)
    g_c = RadialFunction.from_values(coarse, -coarse.rho * coarse.theta0_p)
    g_f = RadialFunction.from_values(fine, -fine.rho * fine.theta0_p)
    u_c = solve_linearized(g_c, coarse)
    u_f = solve_linearized(g_f, fine, refine=8)
    shared = u_f.values[::4]
    assert shared.shape == u_c.values.shape
    assert np.max(np.abs(shared - u_c.values)[interior(coarse)]) <= 1e-6
