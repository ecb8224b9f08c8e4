"""Small shared numerical kernels: stencils, quadrature, smooth cutoffs.

Everything here operates on plain numpy arrays and is deliberately free of
package types, so the heavier modules can share one implementation of the
finite-difference and interpolation building blocks.
"""

from __future__ import annotations

import numpy as np
from scipy.integrate import simpson
from scipy.interpolate import CubicSpline

# 4th-order central stencils (offsets -2..2).
_D1_4TH = np.array([1.0, -8.0, 0.0, 8.0, -1.0]) / 12.0
_D2_4TH = np.array([-1.0, 16.0, -30.0, 16.0, -1.0]) / 12.0
# 6th-order first derivative (offsets -3..3), used by independent oracles.
_D1_6TH = np.array([-1.0, 9.0, -45.0, 0.0, 45.0, -9.0, 1.0]) / 60.0


def central_d1(evaluate, x, h, order=4):
    """First derivative of a callable at points ``x`` by central differences.

    ``evaluate`` is called on shifted copies of ``x``; shapes broadcast.
    """
    if order == 4:
        coeffs, offs = _D1_4TH, range(-2, 3)
    elif order == 6:
        coeffs, offs = _D1_6TH, range(-3, 4)
    else:
        raise ValueError(f"unsupported stencil order {order}")
    acc = 0.0
    for c, j in zip(coeffs, offs):
        if c != 0.0:
            acc = acc + c * evaluate(x + j * h)
    return acc / h


def central_d2(evaluate, x, h):
    """4th-order second derivative of a callable at points ``x``."""
    acc = 0.0
    for c, j in zip(_D2_4TH, range(-2, 3)):
        acc = acc + c * evaluate(x + j * h)
    return acc / (h * h)


def stencil_d1(values, h, axis=-1):
    """4th-order first derivative of sampled values along ``axis``.

    Interior only; the four end nodes per side are filled with one-sided
    2nd-order differences (adequate for diagnostics).
    """
    v = np.moveaxis(np.asarray(values, dtype=float), axis, -1)
    out = np.empty_like(v)
    out[..., 2:-2] = (
        v[..., :-4] - 8.0 * v[..., 1:-3] + 8.0 * v[..., 3:-1] - v[..., 4:]
    ) / (12.0 * h)
    out[..., :2] = (v[..., 1:3] - v[..., 0:2]) / h
    out[..., -2:] = (v[..., -2:] - v[..., -3:-1]) / h
    return np.moveaxis(out, -1, axis)


def periodic_spectral_d(values, order=1, period=1.0, axis=-1):
    """Spectral derivative of uniformly sampled periodic data."""
    v = np.asarray(values, dtype=float)
    n = v.shape[axis]
    k = 2.0j * np.pi * np.fft.rfftfreq(n, d=period / n)
    vhat = np.fft.rfft(v, axis=axis)
    shape = [1] * v.ndim
    shape[axis] = k.size
    return np.fft.irfft(vhat * (k.reshape(shape) ** order), n=n, axis=axis)


def periodic_cubic(values, x, period=1.0):
    """Cubic-spline interpolation of periodic samples at points ``x``.

    ``values`` are samples at ``j * period / len(values)``.
    """
    v = np.asarray(values, dtype=float)
    m = v.size
    nodes = np.linspace(0.0, period, m + 1)
    spline = CubicSpline(nodes, np.append(v, v[0]), bc_type="periodic")
    return spline(np.mod(x, period))


def integrate_simpson(values, dx, axis=-1):
    """Composite Simpson rule on a uniform grid."""
    return simpson(values, dx=dx, axis=axis)


def smoothstep(x):
    """C-infinity step: 0 for x <= 0, 1 for x >= 1, built from exp(-1/x)."""
    x = np.asarray(x, dtype=float)
    with np.errstate(divide="ignore", over="ignore", invalid="ignore"):
        a = np.where(x > 0.0, np.exp(-1.0 / np.maximum(x, 1e-300)), 0.0)
        b = np.where(x < 1.0, np.exp(-1.0 / np.maximum(1.0 - x, 1e-300)), 0.0)
    return a / (a + b)


def bump(x):
    """C-infinity bump supported on (-1, 1), equal to exp(-1/(1-x^2)) inside."""
    x = np.asarray(x, dtype=float)
    inside = np.abs(x) < 1.0
    out = np.zeros_like(x)
    with np.errstate(divide="ignore", over="ignore"):
        out[inside] = np.exp(-1.0 / (1.0 - x[inside] ** 2))
    return out


def relative_l2(a, b):
    """Relative l2 distance max-normalized; convenience for tests."""
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    denom = max(np.linalg.norm(b), 1e-300)
    return np.linalg.norm(a - b) / denom
