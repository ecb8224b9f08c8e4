"""Double-well potentials driving the phase separation.

The standing assumptions are an even well with nondegenerate minima at +-1:
``f'(+-1) = 0``, ``f''(+-1) > 0`` and ``f(s) = f(-s) > 0`` on (-1, 1).  The
default is the quartic ``f(c) = (1 - c^2)^2 / 4``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

import numpy as np

from .errors import PotentialInvalid


@dataclass(frozen=True)
class Potential:
    """Evaluators for f and its first three derivatives."""

    name: str
    f: Callable
    df: Callable
    d2f: Callable
    d3f: Callable

    @classmethod
    def quartic(cls, scale=0.25):
        """``f(c) = scale * (1 - c^2)^2``; scale 1/4 gives wells with f''= 2."""
        a = float(scale)
        return cls(
            name=f"quartic(scale={a:g})",
            f=lambda c: a * (1.0 - np.asarray(c) ** 2) ** 2,
            df=lambda c: 4.0 * a * (np.asarray(c) ** 3 - np.asarray(c)),
            d2f=lambda c: 4.0 * a * (3.0 * np.asarray(c) ** 2 - 1.0),
            d3f=lambda c: 24.0 * a * np.asarray(c),
        )

    @classmethod
    def by_name(cls, name, **params):
        if name == "quartic":
            return cls.quartic(**params)
        raise PotentialInvalid(f"unknown potential {name!r}")

    def validate(self, n_samples=401):
        """Check the standing assumptions by sampling; raise PotentialInvalid."""
        if abs(self.df(1.0)) > 1e-12 or abs(self.df(-1.0)) > 1e-12:
            raise PotentialInvalid("f' does not vanish at the wells +-1")
        if self.d2f(1.0) <= 0.0 or self.d2f(-1.0) <= 0.0:
            raise PotentialInvalid("wells at +-1 are degenerate (f'' <= 0)")
        s = np.linspace(-1.0, 1.0, n_samples)[1:-1]
        vals = self.f(s)
        if np.any(vals <= 0.0):
            raise PotentialInvalid("f must be positive on (-1, 1)")
        if np.max(np.abs(vals - self.f(-s))) > 1e-12 * max(1.0, np.max(np.abs(vals))):
            raise PotentialInvalid("f must be even")

    def decay_rate(self):
        """Tail rate of the transition profile: min of sqrt(f'') at the wells."""
        return float(min(np.sqrt(self.d2f(-1.0)), np.sqrt(self.d2f(1.0))))

    def max_curvature(self, lo=-1.2, hi=1.2, n=481):
        """max |f''| on [lo, hi]; used for the stabilized time stepping."""
        return float(np.max(np.abs(self.d2f(np.linspace(lo, hi, n)))))
