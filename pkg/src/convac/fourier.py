"""Trigonometric interpolation of periodic samples on the unit circle T^1.

Samples live at ``s_j = j/m`` with period 1.  The interpolant supports
vector-valued data (shape ``(m, d)``), spectral derivatives, and evaluation at
arbitrary parameters.  Coefficients below a relative floor are dropped from
evaluation, which makes near-circular geometries cheap without changing
results beyond round-off.
"""

from __future__ import annotations

import numpy as np

_COEFF_FLOOR = 1e-15
_CHUNK = 1 << 16


class TrigInterpolant:
    """Real trigonometric interpolant of uniformly spaced periodic samples."""

    def __init__(self, coeffs, m):
        coeffs = np.atleast_2d(np.asarray(coeffs, dtype=complex))
        if coeffs.shape[0] != m // 2 + 1:
            coeffs = coeffs.T
        self.coeffs = coeffs  # (m//2+1, d)
        self.m = int(m)
        scale = np.max(np.abs(self.coeffs))
        if scale == 0.0:
            self._active = np.array([0])
        else:
            keep = np.any(np.abs(self.coeffs) > _COEFF_FLOOR * scale, axis=1)
            keep[0] = True
            self._active = np.nonzero(keep)[0]

    @classmethod
    def fit(cls, values):
        """Interpolate samples ``values[j] = f(j/m)``; shape (m,) or (m, d)."""
        values = np.asarray(values, dtype=float)
        m = values.shape[0]
        coeffs = np.fft.rfft(values, axis=0) / m
        return cls(coeffs, m)

    @property
    def dim(self):
        return self.coeffs.shape[1]

    def grid_values(self):
        """Values back on the sample grid ``j/m``."""
        out = np.fft.irfft(self.coeffs * self.m, n=self.m, axis=0)
        return out[:, 0] if self.dim == 1 else out

    def derivative(self, order=1):
        """Spectral derivative; the Nyquist mode is zeroed (odd-mode convention)."""
        k = np.fft.rfftfreq(self.m, d=1.0 / self.m)
        factor = (2.0j * np.pi * k) ** order
        coeffs = self.coeffs * factor[:, None]
        if self.m % 2 == 0:
            coeffs[-1] = 0.0
        return TrigInterpolant(coeffs, self.m)

    def evaluate_multi(self, s, orders=(0, 1, 2)):
        """Evaluate several derivative orders sharing one phase matrix."""
        s = np.asarray(s, dtype=float)
        flat = np.atleast_1d(s).ravel()
        idx = self._active
        k = idx.astype(float)
        weights = np.where(k == 0, 1.0, 2.0)
        nyquist = self.m % 2 == 0 and idx.size > 0 and idx[-1] == self.m // 2
        if nyquist:
            weights = weights.copy()
            weights[-1] = 1.0
        results = [np.empty((flat.size, self.dim)) for _ in orders]
        factor = {}
        for o in orders:
            f = (2.0j * np.pi * k) ** o
            if o > 0 and nyquist:
                f = f.copy()
                f[-1] = 0.0
            factor[o] = self.coeffs[idx] * (weights * f)[:, None]
        for lo in range(0, flat.size, _CHUNK):
            hi = min(lo + _CHUNK, flat.size)
            phase = np.exp(2.0j * np.pi * np.outer(flat[lo:hi], k))
            for out, o in zip(results, orders):
                out[lo:hi] = (phase @ factor[o]).real
        final = []
        for out in results:
            if self.dim == 1:
                final.append(out[:, 0].reshape(s.shape) if s.ndim else float(out[0, 0]))
            else:
                final.append(out.reshape(s.shape + (self.dim,)) if s.ndim else out[0])
        return final

    def __call__(self, s, order=0):
        """Evaluate (a derivative of) the interpolant at parameters ``s``."""
        s = np.asarray(s, dtype=float)
        flat = np.atleast_1d(s).ravel()
        idx = self._active
        k = idx.astype(float)
        coeffs = self.coeffs[idx]
        if order > 0:
            coeffs = coeffs * (2.0j * np.pi * k[:, None]) ** order
            if self.m % 2 == 0 and idx[-1] == self.m // 2:
                coeffs = coeffs.copy()
                coeffs[-1] = 0.0
        weights = np.where(k == 0, 1.0, 2.0)
        if self.m % 2 == 0 and idx[-1] == self.m // 2:
            # Nyquist cosine carries weight 1, not 2.
            weights = weights.copy()
            weights[-1] = 1.0
        wc = coeffs * weights[:, None]
        out = np.empty((flat.size, self.dim))
        for lo in range(0, flat.size, _CHUNK):
            hi = min(lo + _CHUNK, flat.size)
            phase = np.exp(2.0j * np.pi * np.outer(flat[lo:hi], k))
            out[lo:hi] = (phase @ wc).real
        if self.dim == 1:
            return out[:, 0].reshape(s.shape) if s.ndim else float(out[0, 0])
        return out.reshape(s.shape + (self.dim,)) if s.ndim else out[0]
