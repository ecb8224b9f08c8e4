import numpy as np
import pytest

from convac.errors import PotentialInvalid
from convac.potential import Potential


def test_quartic_values():
    pot = Potential.quartic()
    c = np.linspace(-1.5, 1.5, 31)
    assert np.allclose(pot.f(c), (1 - c**2) ** 2 / 4)
    assert np.allclose(pot.df(c), c**3 - c)
    assert np.allclose(pot.d2f(c), 3 * c**2 - 1)
    assert np.allclose(pot.d3f(c), 6 * c)


def test_quartic_satisfies_standing_assumptions():
    pot = Potential.quartic()
    pot.validate()
    assert pot.d2f(1.0) == pytest.approx(2.0)
    assert pot.decay_rate() == pytest.approx(np.sqrt(2.0))


def test_degenerate_well_rejected():
    bad = Potential(
        name="bad",
        f=lambda c: (1 - np.asarray(c) ** 2) ** 4,
        df=lambda c: -8 * np.asarray(c) * (1 - np.asarray(c) ** 2) ** 3,
        d2f=lambda c: -8 * (1 - np.asarray(c) ** 2) ** 3
        + 48 * np.asarray(c) ** 2 * (1 - np.asarray(c) ** 2) ** 2,
        d3f=lambda c: np.zeros_like(np.asarray(c, dtype=float)),
    )
    with pytest.raises(PotentialInvalid):
        bad.validate()


def test_asymmetric_potential_rejected():
    skew = Potential(
        name="skew",
        f=lambda c: (1 - np.asarray(c) ** 2) ** 2 / 4 + 0.01 * (np.asarray(c) + 1) ** 2 * (np.asarray(c) - 1) ** 2 * np.asarray(c),
        df=lambda c: np.zeros_like(np.asarray(c, dtype=float)),
        d2f=lambda c: np.full_like(np.asarray(c, dtype=float), 2.0),
        d3f=lambda c: np.zeros_like(np.asarray(c, dtype=float)),
    )
    with pytest.raises(PotentialInvalid):
        skew.validate()


def test_max_curvature_bound():
    pot = Potential.quartic()
    # On [-1.2, 1.2] the largest |f''| sits at the ends: 3*1.44 - 1.
    assert pot.max_curvature() == pytest.approx(3.32, abs=1e-9)


def test_unknown_name_rejected():
    with pytest.raises(PotentialInvalid):
        Potential.by_name("sextic")
