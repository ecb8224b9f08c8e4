"""Closed-form velocity fields with derivatives up to second order.

Study fields come from a stream function (hence exactly divergence free, and
the reference field also vanishes on the boundary of the unit square).  A few
extra analytic fields exist purely to exercise the geometry: rigid rotation,
a linear shear, and a radial source (which is deliberately not divergence
free).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

import numpy as np

from .errors import ConfigError


@dataclass(frozen=True)
class VelocityField:
    """Analytic velocity field: value, Jacobian, and componentwise Hessians.

    ``velocity(points)`` -> (N, 2); ``grad(points)`` -> (N, 2, 2) with
    ``grad[:, i, j] = d v_i / d x_j``; ``hessian(points)`` -> (N, 2, 2, 2)
    with ``hessian[:, i, j, k] = d^2 v_i / (d x_j d x_k)``.  All fields here
    are steady; the optional time argument is accepted and ignored.
    """

    name: str
    velocity: Callable
    grad: Callable
    hessian: Callable
    psi: Callable | None = None
    divergence_free: bool = True
    boundary_compatible: bool = True

    def __call__(self, points, t=0.0):
        return self.velocity(points)

    def max_speed(self, n=201):
        xs = np.linspace(0.0, 1.0, n)
        xx, yy = np.meshgrid(xs, xs, indexing="ij")
        pts = np.column_stack([xx.ravel(), yy.ravel()])
        return float(np.max(np.linalg.norm(self.velocity(pts), axis=1)))


def _as_points(points):
    pts = np.atleast_2d(np.asarray(points, dtype=float))
    return pts


def zero_field():
    def velocity(points):
        return np.zeros_like(_as_points(points))

    def grad(points):
        n = _as_points(points).shape[0]
        return np.zeros((n, 2, 2))

    def hessian(points):
        n = _as_points(points).shape[0]
        return np.zeros((n, 2, 2, 2))

    return VelocityField("zero", velocity, grad, hessian, psi=lambda p: np.zeros(_as_points(p).shape[0]))


def stream_vortex(amplitude=0.02):
    """psi = A sin^2(pi x) sin^2(pi y); v = (d_y psi, -d_x psi).

    The gradient of psi vanishes on the boundary of the unit square, so the
    velocity itself is zero there.
    """
    a = float(amplitude)
    pi = np.pi

    def parts(points):
        pts = _as_points(points)
        u, w = pi * pts[:, 0], pi * pts[:, 1]
        return np.sin(u) ** 2, np.sin(2 * u), np.cos(2 * u), np.sin(w) ** 2, np.sin(2 * w), np.cos(2 * w)

    def psi(points):
        s2x, _, _, s2y, _, _ = parts(points)
        return a * s2x * s2y

    def velocity(points):
        s2x, sin2x, _, s2y, sin2y, _ = parts(points)
        psi_x = a * pi * sin2x * s2y
        psi_y = a * pi * s2x * sin2y
        return np.column_stack([psi_y, -psi_x])

    def grad(points):
        s2x, sin2x, cos2x, s2y, sin2y, cos2y = parts(points)
        psi_xx = 2 * a * pi**2 * cos2x * s2y
        psi_xy = a * pi**2 * sin2x * sin2y
        psi_yy = 2 * a * pi**2 * s2x * cos2y
        out = np.empty((s2x.size, 2, 2))
        out[:, 0, 0] = psi_xy
        out[:, 0, 1] = psi_yy
        out[:, 1, 0] = -psi_xx
        out[:, 1, 1] = -psi_xy
        return out

    def hessian(points):
        s2x, sin2x, cos2x, s2y, sin2y, cos2y = parts(points)
        psi_xxx = -4 * a * pi**3 * sin2x * s2y
        psi_xxy = 2 * a * pi**3 * cos2x * sin2y
        psi_xyy = 2 * a * pi**3 * sin2x * cos2y
        psi_yyy = -4 * a * pi**3 * s2x * sin2y
        out = np.empty((s2x.size, 2, 2, 2))
        out[:, 0, 0, 0] = psi_xxy
        out[:, 0, 0, 1] = psi_xyy
        out[:, 0, 1, 0] = psi_xyy
        out[:, 0, 1, 1] = psi_yyy
        out[:, 1, 0, 0] = -psi_xxx
        out[:, 1, 0, 1] = -psi_xxy
        out[:, 1, 1, 0] = -psi_xxy
        out[:, 1, 1, 1] = -psi_xyy
        return out

    return VelocityField(f"vortex(A={a:g})", velocity, grad, hessian, psi=psi)


def rigid_rotation(omega=1.0, center=(0.5, 0.5)):
    """v = omega * (-(y - yc), x - xc); divergence free, nonzero on the boundary."""
    w = float(omega)
    cx, cy = float(center[0]), float(center[1])

    def velocity(points):
        pts = _as_points(points)
        return np.column_stack([-w * (pts[:, 1] - cy), w * (pts[:, 0] - cx)])

    def grad(points):
        n = _as_points(points).shape[0]
        out = np.zeros((n, 2, 2))
        out[:, 0, 1] = -w
        out[:, 1, 0] = w
        return out

    def hessian(points):
        n = _as_points(points).shape[0]
        return np.zeros((n, 2, 2, 2))

    return VelocityField(
        f"rotation(omega={w:g})", velocity, grad, hessian,
        psi=lambda p: -0.5 * w * (((_as_points(p)[:, 0] - cx) ** 2) + (_as_points(p)[:, 1] - cy) ** 2),
        boundary_compatible=False,
    )


def linear_shear(rate=1.0):
    """v = (rate * y, 0) from the quadratic stream function rate * y^2 / 2."""
    a = float(rate)

    def velocity(points):
        pts = _as_points(points)
        return np.column_stack([a * pts[:, 1], np.zeros(pts.shape[0])])

    def grad(points):
        n = _as_points(points).shape[0]
        out = np.zeros((n, 2, 2))
        out[:, 0, 1] = a
        return out

    def hessian(points):
        n = _as_points(points).shape[0]
        return np.zeros((n, 2, 2, 2))

    return VelocityField(
        f"shear(rate={a:g})", velocity, grad, hessian,
        psi=lambda p: 0.5 * a * _as_points(p)[:, 1] ** 2,
        boundary_compatible=False,
    )


def radial_source(rate=1.0, center=(0.5, 0.5)):
    """v = rate * (x - c); not divergence free, geometry tests only."""
    a = float(rate)
    cx, cy = float(center[0]), float(center[1])

    def velocity(points):
        pts = _as_points(points)
        return np.column_stack([a * (pts[:, 0] - cx), a * (pts[:, 1] - cy)])

    def grad(points):
        n = _as_points(points).shape[0]
        out = np.zeros((n, 2, 2))
        out[:, 0, 0] = a
        out[:, 1, 1] = a
        return out

    def hessian(points):
        n = _as_points(points).shape[0]
        return np.zeros((n, 2, 2, 2))

    return VelocityField("radial", velocity, grad, hessian, psi=None,
                         divergence_free=False, boundary_compatible=False)


_REGISTRY = {
    "zero": lambda amplitude, **kw: zero_field(),
    "vortex": lambda amplitude, **kw: stream_vortex(amplitude),
    "rotation": lambda amplitude, **kw: rigid_rotation(amplitude, kw.get("center", (0.5, 0.5))),
    "shear": lambda amplitude, **kw: linear_shear(amplitude),
    "radial": lambda amplitude, **kw: radial_source(amplitude, kw.get("center", (0.5, 0.5))),
}


def by_name(name, amplitude=0.0, **kwargs):
    try:
        factory = _REGISTRY[name]
    except KeyError:
        raise ConfigError(f"unknown velocity field {name!r}") from None
    return factory(amplitude, **kwargs)
