"""Transition profile of the layer and the linearized layer ODE.

The equilibrium profile ``theta0`` solves ``-theta0'' + f'(theta0) = 0`` with
``theta0(0) = 0`` and limits -1 / +1; its first integral is
``theta0' = sqrt(2 f(theta0))``.  Corrector profiles solve the linearized
two-point problem ``-u'' + f''(theta0) u = g`` on a truncated line with
outflow (Robin) conditions matching the decaying mode, a one-dimensional
deflation of the ``theta0'`` kernel, and the normalization ``u(0) = 0``.

Both solvers are potential-generic.  The integration switches to the
log-distance-from-the-well variable in the tail so the exponential approach
to +-1 is resolved in relative precision.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np
from scipy.integrate import solve_ivp
from scipy.interpolate import make_interp_spline
from scipy.linalg import solve_banded

from .errors import PotentialInvalid, SingularSystem, SolvabilityViolated
from .numerics import integrate_simpson, periodic_spectral_d
from .potential import Potential

_TAIL_SWITCH = 1e-4  # distance from the well where integration switches variable
_TAYLOR_SWITCH = 1e-6


@dataclass(frozen=True)
class Profile:
    """Sampled transition profile on a symmetric uniform grid."""

    rho: np.ndarray
    theta0: np.ndarray
    theta0_p: np.ndarray
    theta0_pp: np.ndarray
    alpha: float
    potential: Potential
    _eval_theta: object = field(repr=False, default=None)
    _eval_z: object = field(repr=False, default=None)
    _rho_switch: float = field(repr=False, default=0.0)

    @property
    def h(self):
        return float(self.rho[1] - self.rho[0])

    @property
    def half_width(self):
        return float(self.rho[-1])

    def theta(self, rho):
        """High-accuracy profile values at arbitrary rho (vectorized)."""
        rho = np.asarray(rho, dtype=float)
        flat = np.atleast_1d(rho).ravel()
        a = np.abs(flat)
        out = np.empty(a.shape)
        core = a <= self._rho_switch
        out[core] = self._eval_theta(a[core])
        tail = ~core
        if np.any(tail):
            out[tail] = -np.expm1(self._z_at(a[tail]))
        out = np.sign(flat) * out
        return out.reshape(rho.shape) if rho.ndim else float(out[0])

    def theta_prime(self, rho):
        """Profile slope at arbitrary rho; positive everywhere."""
        rho = np.asarray(rho, dtype=float)
        flat = np.atleast_1d(rho).ravel()
        a = np.abs(flat)
        out = np.empty(a.shape)
        core = a <= self._rho_switch
        out[core] = np.sqrt(np.maximum(2.0 * self.potential.f(self._eval_theta(a[core])), 0.0))
        tail = ~core
        if np.any(tail):
            y = np.exp(self._z_at(a[tail]))
            out[tail] = y * _well_rate(self.potential, np.maximum(y, 1e-300))
        return out.reshape(rho.shape) if rho.ndim else float(out[0])

    def _z_at(self, a):
        zmax = self._eval_z.t_max if hasattr(self._eval_z, "t_max") else self.half_width
        inside = np.minimum(a, zmax)
        z = self._eval_z(inside)
        # Beyond the grid: continue with the asymptotic slope -alpha.
        return z - self.alpha * (a - inside)


def _well_rate(potential, y):
    """G(y) = sqrt(2 f(1 - y)) / y, series-stabilized for tiny y."""
    y = np.asarray(y, dtype=float)
    a2 = potential.d2f(1.0)
    a3 = potential.d3f(1.0)
    out = np.empty(y.shape)
    small = y < _TAYLOR_SWITCH
    out[small] = np.sqrt(a2) * (1.0 - a3 * y[small] / (6.0 * a2))
    big = ~small
    yb = y[big]
    out[big] = np.sqrt(np.maximum(2.0 * potential.f(1.0 - yb), 0.0)) / yb
    return out


def solve_profile(potential, l_rho=40.0, h_rho=0.05):
    """Compute the transition profile on ``[-l_rho, l_rho]`` with step ``h_rho``.

    The first integral ``theta' = sqrt(2 f(theta))`` is integrated from
    ``theta(0) = 0``; once ``1 - theta`` drops below a switch level the
    integration continues in ``z = log(1 - theta)`` which stays accurate in
    the exponential tail.  The profile is odd by the evenness of f.
    """
    potential.validate()
    n_half = int(round(l_rho / h_rho))
    if abs(n_half * h_rho - l_rho) > 1e-12 * max(1.0, l_rho):
        raise ValueError("l_rho must be an integer multiple of h_rho")
    if l_rho < 20.0 or h_rho > 0.1:
        raise ValueError("need l_rho >= 20 and h_rho <= 0.1")
    rho = (np.arange(2 * n_half + 1) - n_half) * h_rho

    def rhs_theta(_, th):
        return np.sqrt(np.maximum(2.0 * potential.f(th), 0.0))

    switch_event = lambda _, th: (1.0 - th[0]) - _TAIL_SWITCH
    switch_event.terminal = True
    switch_event.direction = -1
    sol_a = solve_ivp(
        rhs_theta, (0.0, l_rho), [0.0], method="DOP853",
        rtol=1e-12, atol=1e-14, dense_output=True, events=switch_event,
    )
    if sol_a.t_events[0].size == 0:
        raise PotentialInvalid("profile did not approach the well on the grid")
    rho_switch = float(sol_a.t_events[0][0])

    def rhs_z(_, z):
        return -_well_rate(potential, np.exp(z))

    sol_b = solve_ivp(
        rhs_z, (rho_switch, l_rho), [np.log(_TAIL_SWITCH)], method="DOP853",
        rtol=1e-12, atol=1e-14, dense_output=True,
    )

    eval_theta = lambda a: sol_a.sol(np.minimum(a, rho_switch))[0]
    z_spline = sol_b.sol

    class _ZEval:
        t_max = l_rho

        def __call__(self, a):
            return z_spline(a)[0]

    pos = rho[n_half:]
    theta_pos = np.empty(pos.shape)
    core = pos <= rho_switch
    theta_pos[core] = eval_theta(pos[core])
    theta_pos[~core] = -np.expm1(z_spline(pos[~core])[0])
    theta0 = np.concatenate([-theta_pos[:0:-1], theta_pos])
    theta0[n_half] = 0.0

    theta0_p = np.sqrt(np.maximum(2.0 * potential.f(theta0), 0.0))
    tail_nodes = np.abs(rho) > rho_switch
    y = 1.0 - np.abs(theta0[tail_nodes])
    theta0_p[tail_nodes] = y * _well_rate(potential, np.maximum(y, 1e-300))
    theta0_pp = potential.df(theta0)

    alpha = potential.decay_rate()
    if np.any(np.diff(theta0) < 0.0):
        raise PotentialInvalid("profile is not monotone")
    return Profile(
        rho=rho, theta0=theta0, theta0_p=theta0_p, theta0_pp=theta0_pp,
        alpha=alpha, potential=potential,
        _eval_theta=eval_theta, _eval_z=_ZEval(), _rho_switch=rho_switch,
    )


@dataclass
class RadialFunction:
    """Layer-variable samples on a profile grid, with decay metadata."""

    rho: np.ndarray
    values: np.ndarray
    parity: str | None = None
    decay_verified: bool = False

    def __post_init__(self):
        if not np.all(np.isfinite(self.values)):
            raise ValueError("radial function has non-finite samples")

    @classmethod
    def from_values(cls, profile, values, **meta):
        values = np.asarray(values, dtype=float)
        if values.shape != profile.rho.shape:
            raise ValueError("samples do not match the profile grid")
        return cls(rho=profile.rho.copy(), values=values, **meta)

    def derivative(self):
        """Spectral derivative; valid because the samples decay at both ends."""
        return RadialFunction(
            rho=self.rho,
            values=periodic_spectral_d(self.values, order=1, period=_span(self.rho)),
        )


def _span(rho):
    return float(rho[-1] - rho[0] + (rho[1] - rho[0]))


def _detect_parity(rho, values):
    scale = np.max(np.abs(values))
    if scale == 0.0:
        return "even"
    flipped = values[::-1]
    if np.max(np.abs(values - flipped)) <= 1e-10 * scale:
        return "even"
    if np.max(np.abs(values + flipped)) <= 1e-10 * scale:
        return "odd"
    return None


def _check_decay(rho, values, alpha, power=1):
    """Tail envelope check against (1+|rho|)^power * exp(-alpha |rho|)."""
    scale = np.max(np.abs(values))
    if scale == 0.0:
        return True
    weight = (1.0 + np.abs(rho)) ** power * np.exp(-alpha * np.abs(rho))
    env = np.abs(values) / (scale * weight)
    core = np.abs(rho) <= 5.0
    tail = np.abs(rho) >= 0.5 * np.abs(rho[-1])
    return float(np.max(env[tail])) <= 4.0 * max(float(np.max(env[core])), 1e-30)


def solve_linearized(g, profile, refine=32, project_kernel=False):
    """Solve ``-u'' + f''(theta0) u = g`` with decaying-mode Robin conditions.

    The compatibility integral of ``g`` against ``theta0'`` must vanish
    (raises SolvabilityViolated otherwise, unless ``project_kernel`` removes
    the offending component, which basis builders use deliberately).  The
    discrete system is solved on a ``refine``-times finer grid with a
    second-order stencil, deflated against the kernel direction by a bordered
    solve, then shifted by a multiple of ``theta0'`` so that ``u(0) = 0``.
    """
    g_values = g.values if isinstance(g, RadialFunction) else np.asarray(g, dtype=float)
    rho = profile.rho
    if g_values.shape != rho.shape:
        raise ValueError("right-hand side does not match the profile grid")
    h = profile.h

    comp = integrate_simpson(g_values * profile.theta0_p, dx=h)
    g_norm = np.sqrt(max(integrate_simpson(g_values**2, dx=h), 0.0))
    if not project_kernel and abs(comp) > 1e-8 * max(g_norm, 1e-30):
        raise SolvabilityViolated(
            f"compatibility integral {comp:.3e} exceeds 1e-8 * ||g|| = {1e-8 * g_norm:.3e}"
        )

    hf = h / refine
    n_f = (rho.size - 1) * refine + 1
    rho_f = rho[0] + hf * np.arange(n_f)
    theta_f = profile.theta(rho_f)
    q = profile.potential.d2f(theta_f)
    psi = profile.theta_prime(rho_f)

    if np.max(np.abs(g_values)) == 0.0:
        g_f = np.zeros(n_f)
    elif refine == 1:
        g_f = g_values.copy()
    else:
        g_f = make_interp_spline(rho, g_values, k=5)(rho_f)
    if project_kernel:
        g_f = g_f - (np.dot(g_f, psi) / np.dot(psi, psi)) * psi

    a_minus = np.sqrt(profile.potential.d2f(-1.0))
    a_plus = np.sqrt(profile.potential.d2f(1.0))
    inv_h2 = 1.0 / (hf * hf)
    main = np.full(n_f, 2.0 * inv_h2) + q
    lower = np.full(n_f - 1, -inv_h2)
    upper = np.full(n_f - 1, -inv_h2)
    # Robin rows from ghost elimination: u' = +a_minus u (left), -a_plus u (right).
    main[0] = 2.0 * inv_h2 + 2.0 * a_minus / hf + q[0]
    upper[0] = -2.0 * inv_h2
    main[-1] = 2.0 * inv_h2 + 2.0 * a_plus / hf + q[-1]
    lower[-1] = -2.0 * inv_h2

    # Deflated solve of the bordered system [A psi; psi^T 0] [u; lam] = [g; 0]
    # by block elimination: two tridiagonal solves, then the kernel-direction
    # blow-up cancels in the combination u = y1 - lam * y2.
    ab = np.zeros((3, n_f))
    ab[0, 1:] = upper
    ab[1, :] = main
    ab[2, :-1] = lower
    psi_unit = psi / np.linalg.norm(psi)
    try:
        y1 = solve_banded((1, 1), ab, g_f)
        y2 = solve_banded((1, 1), ab, psi_unit)
    except np.linalg.LinAlgError as exc:  # pragma: no cover - defensive
        raise SingularSystem("deflated layer solve failed") from exc
    denom = np.dot(psi_unit, y2)
    if denom == 0.0 or not np.isfinite(denom):
        raise SingularSystem("kernel deflation is singular")
    lam = np.dot(psi_unit, y1) / denom
    u_f = y1 - lam * y2
    if not np.all(np.isfinite(u_f)):
        raise SingularSystem("deflated layer solve produced non-finite values")

    center = (n_f - 1) // 2
    slope0 = psi[center]
    u_f = u_f - (u_f[center] / slope0) * psi

    u = u_f[::refine].copy()
    u[(rho.size - 1) // 2] = 0.0
    return RadialFunction(
        rho=rho.copy(),
        values=u,
        parity=_detect_parity(rho, u),
        decay_verified=_check_decay(rho, u, profile.alpha),
    )


def sigma(profile):
    """Integral of (theta0')^2 over the line, tail-corrected analytically."""
    core = integrate_simpson(profile.theta0_p**2, dx=profile.h)
    tail = (profile.theta0_p[0] ** 2 + profile.theta0_p[-1] ** 2) / (2.0 * profile.alpha)
    return float(core + tail)


def apply_operator(profile, values):
    """Spectral application of ``-d^2/drho^2 + f''(theta0)`` to decaying samples."""
    values = np.asarray(values, dtype=float)
    second = periodic_spectral_d(values, order=2, period=_span(profile.rho))
    return -second + profile.potential.d2f(profile.theta0) * values


def ode_residual(profile, u, g, margin=2.0):
    """Max-norm residual of the layer ODE on the interior, high-order stencil."""
    u_values = u.values if isinstance(u, RadialFunction) else np.asarray(u)
    g_values = g.values if isinstance(g, RadialFunction) else np.asarray(g)
    res = apply_operator(profile, u_values) - g_values
    interior = np.abs(profile.rho) <= profile.half_width - margin
    return float(np.max(np.abs(res[interior])))
