"""Shared fixtures: geometries, cached eigenpairs, and profile builders."""

import numpy as np
import pytest

from picone import Geometry, first_eigenpair
from picone.profiles import RadialProfile


@pytest.fixture(scope="session")
def unit_interval():
    return Geometry.interval(1.0)


@pytest.fixture(scope="session")
def disk():
    return Geometry.ball(2, 1.0)


@pytest.fixture(scope="session")
def eig2_interval(unit_interval):
    return first_eigenpair(2.0, unit_interval)


@pytest.fixture(scope="session")
def eig2_disk(disk):
    return first_eigenpair(2.0, disk)


@pytest.fixture(scope="session")
def eig_p22_disk(disk):
    return first_eigenpair(2.2, disk)


@pytest.fixture(scope="session")
def eig_q16_disk(disk):
    return first_eigenpair(1.6, disk)


def make_bump_profile(rng, geom, n=512):
    """Smooth positive radial profile vanishing at the boundary.

    w(r) = (1 - (r/R)^2) * (c0 + c1 (r/R)^2) with coefficients constrained
    so the polynomial factor stays positive on [0, R]; derivatives are
    analytic, so the profile is admissible for the monotonicity functional.
    """
    R = geom.radius
    c0 = rng.uniform(0.5, 2.0)
    c1 = rng.uniform(-0.4 * c0, 2.0 * c0)
    r = np.linspace(0.0, R, n)
    x = r / R
    vals = (1.0 - x**2) * (c0 + c1 * x**2)
    ders = (-2.0 * x * (c0 + c1 * x**2) + (1.0 - x**2) * 2.0 * c1 * x) / R
    return RadialProfile(grid=r, values=vals, derivs=ders, dimension=geom.dimension)
