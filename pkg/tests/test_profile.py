import numpy as np
import pytest
from scipy.integrate import quad
from scipy.optimize import brentq

from convac.errors import PotentialInvalid
from convac.numerics import integrate_simpson
from convac.potential import Potential
from convac.profile import apply_operator, sigma, solve_profile

EPS1 = np.finfo(float).eps  # representation floor for values rounded near +-1


@pytest.fixture(scope="module")
def prof():
    return solve_profile(Potential.quartic())


def test_matches_tanh_closed_form(prof):
    exact = np.tanh(prof.rho / np.sqrt(2.0))
    assert np.max(np.abs(prof.theta0 - exact)) <= 1e-8


def test_center_value_is_zero(prof):
    mid = (prof.rho.size - 1) // 2
    assert prof.theta0[mid] == 0.0


def test_profile_is_odd_and_increasing(prof):
    assert np.max(np.abs(prof.theta0 + prof.theta0[::-1])) <= 1e-11
    assert np.all(np.diff(prof.theta0) >= 0.0)


def test_tail_bound(prof):
    mask = prof.rho >= 5.0
    bound = 2.0 * np.exp(-np.sqrt(2.0) * prof.rho[mask])
    dev = np.abs(prof.theta0[mask] - 1.0)
    assert np.all(dev <= bound + EPS1)


@pytest.mark.filterwarnings("ignore::scipy.integrate.IntegrationWarning")
def test_quadrature_inversion_oracle():
    # Independent route: invert rho(theta) = int_0^theta ds / sqrt(2 f(s)).
    pot = Potential.quartic()
    prof = solve_profile(pot)

    def rho_of_theta(theta):
        val, _ = quad(lambda s: 1.0 / np.sqrt(2.0 * pot.f(s)), 0.0, theta,
                      epsabs=1e-14, epsrel=1e-13)
        return val

    for rho_star in [0.25, 1.0, 3.0, 7.5]:
        theta_star = brentq(lambda th: rho_of_theta(th) - rho_star,
                            0.0, 1.0 - 1e-13, xtol=1e-15)
        idx = np.argmin(np.abs(prof.rho - rho_star))
        assert prof.rho[idx] == pytest.approx(rho_star, abs=1e-12)
        assert prof.theta0[idx] == pytest.approx(theta_star, abs=1e-10)


def test_offgrid_evaluators(prof):
    rr = np.linspace(-38.0, 38.0, 977) + 0.0123
    assert np.max(np.abs(prof.theta(rr) - np.tanh(rr / np.sqrt(2)))) <= 1e-10
    exact_p = (1.0 / np.sqrt(2.0)) / np.cosh(rr / np.sqrt(2)) ** 2
    assert np.max(np.abs(prof.theta_prime(rr) - exact_p)) <= 1e-10
    assert prof.theta(0.0) == 0.0


def test_first_integral_consistency(prof):
    gap = prof.theta0_p**2 - 2.0 * prof.potential.f(prof.theta0)
    assert np.max(np.abs(gap)) <= 1e-14


def test_ode_identity_on_tabulated_second_derivative(prof):
    assert np.max(np.abs(-prof.theta0_pp + prof.potential.df(prof.theta0))) == 0.0


def test_kernel_identity(prof):
    res = apply_operator(prof, prof.theta0_p)
    interior = np.abs(prof.rho) <= prof.half_width - 2.0
    assert np.max(np.abs(res[interior])) <= 1e-8


def test_sigma_closed_form(prof):
    assert sigma(prof) == pytest.approx(2.0 * np.sqrt(2.0) / 3.0, abs=1e-8)
    assert sigma(prof) > 0.0


def test_sigma_stable_under_domain_doubling(prof):
    prof80 = solve_profile(Potential.quartic(), l_rho=80.0)
    assert abs(sigma(prof80) - sigma(prof)) <= 1e-12


def test_compatibility_moments_vanish(prof):
    # Odd integrands: the c1 right-hand side is automatically compatible.
    h = prof.h
    m1 = integrate_simpson(prof.theta0_pp * prof.theta0_p, dx=h)
    m2 = integrate_simpson(prof.rho * prof.theta0_p**2, dx=h)
    assert abs(m1) <= 1e-12
    assert abs(m2) <= 1e-12


def test_grid_contract():
    prof = solve_profile(Potential.quartic(), l_rho=30.0, h_rho=0.1)
    assert prof.rho.size == 601
    assert prof.rho[0] == -30.0 and prof.rho[-1] == 30.0
    with pytest.raises(ValueError):
        solve_profile(Potential.quartic(), l_rho=10.0)


def test_invalid_potential_rejected():
    flat = Potential(
        name="flat",
        f=lambda c: np.zeros_like(np.asarray(c, dtype=float)),
        df=lambda c: np.zeros_like(np.asarray(c, dtype=float)),
        d2f=lambda c: np.zeros_like(np.asarray(c, dtype=float)),
        d3f=lambda c: np.zeros_like(np.asarray(c, dtype=float)),
    )
    with pytest.raises(PotentialInvalid):
        solve_profile(flat)
