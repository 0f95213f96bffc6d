"""First Dirichlet eigenpair of the radial r-Laplacian and the
nonexistence thresholds derived from it."""

from typing import Callable, Iterable, Optional

import numpy as np
from scipy.integrate import simpson

from . import _ode
from .errors import BadExponent, NoConvergence, NonPositiveWeightIntegral
from .profiles import Geometry, RadialProfile, WeightSpec

#: resampling resolution for profiles and quadrature
N_NODES = 4096


def _radial_integral(geom: Geometry, grid, f) -> float:
    return float(geom.sphere_measure * simpson(grid ** (geom.dimension - 1) * f, x=grid))


def first_eigenpair(r_exp: float, geom: Geometry, n_steps: int = N_NODES) -> RadialProfile:
    """First eigenvalue and positive eigenfunction, gradient-normalized.

    Shooting: bisection in lambda on whether the solution with unit center
    value stays positive up to the boundary radius.  The returned profile
    satisfies ||grad phi||_r = 1, hence lambda * ||phi||_r^r = 1.
    """
    if r_exp <= 1.0:
        raise BadExponent(f"r_exp must exceed 1, got {r_exp}")
    R = geom.radius
    N = float(geom.dimension)
    r_exp = float(r_exp)

    def residual(lam):
        return _ode.eigen_residual(r_exp, N, lam, R, n_steps)

    # bracket the first eigenvalue: residual > 0 below it, < 0 above
    lo = 1.0
    for _ in range(200):
        if residual(lo) > 0.0:
            break
        lo *= 0.5
    else:
        raise NoConvergence("could not bracket the eigenvalue from below")
    hi = 2.0 * lo
    for _ in range(200):
        if residual(hi) < 0.0:
            break
        lo = hi
        hi *= 2.0
    else:
        raise NoConvergence("could not bracket the eigenvalue from above")
    while hi - lo > 1e-13 * hi:
        mid = 0.5 * (lo + hi)
        if mid == lo or mid == hi:
            break
        if residual(mid) > 0.0:
            lo = mid
        else:
            hi = mid
    lam = 0.5 * (lo + hi)
    # integrate from the positive side so the stored profile is positive
    grid, vals, ders = _ode.eigen_profile(r_exp, N, lo, R, n_steps)
    vals[-1] = 0.0
    prof = RadialProfile(
        grid=grid, values=vals, derivs=ders, dimension=geom.dimension,
        r_exp=r_exp, eigenvalue=float(lam),
    )
    grad_norm = _radial_integral(geom, grid, np.abs(ders) ** r_exp) ** (1.0 / r_exp)
    prof = prof.scaled(1.0 / grad_norm)
    prof.grad_lr_norm = _radial_integral(geom, grid, np.abs(prof.derivs) ** r_exp) ** (1.0 / r_exp)
    prof.lr_norm = _radial_integral(geom, grid, np.abs(prof.values) ** r_exp) ** (1.0 / r_exp)
    return prof


def beta_star(p: float, q: float, geom: Geometry,
              profile: Optional[RadialProfile] = None) -> float:
    """Nonexistence threshold: the q-energy ratio of the p-eigenfunction."""
    if not (1.0 < q < p):
        raise BadExponent(f"requires 1 < q < p, got p={p}, q={q}")
    prof = profile if profile is not None else first_eigenpair(p, geom)
    num = _radial_integral(geom, prof.grid, np.abs(prof.derivs) ** q)
    den = _radial_integral(geom, prof.grid, prof.values ** q)
    return num / den


def beta_star_m(p: float, q: float, geom: Geometry, m: WeightSpec,
                profile: Optional[RadialProfile] = None) -> float:
    """Weighted variant; the weight is sampled on the profile grid."""
    if not (1.0 < q < p):
        raise BadExponent(f"requires 1 < q < p, got p={p}, q={q}")
    prof = profile if profile is not None else first_eigenpair(p, geom)
    if m.values.shape != prof.grid.shape:
        raise NonPositiveWeightIntegral(
            f"weight must be sampled on the {prof.grid.shape[0]}-node profile grid"
        )
    num = _radial_integral(geom, prof.grid, np.abs(prof.derivs) ** q)
    den = _radial_integral(geom, prof.grid, m.values * prof.values ** q)
    if den <= 0.0:
        raise NonPositiveWeightIntegral(f"weighted integral must be positive, got {den}")
    return num / den


def assumption_A_check(
    fmu: Callable[[float, float, np.ndarray, float], float],
    m: WeightSpec,
    mu_set: Iterable[float],
    geom: Geometry,
    p: float,
    q: float,
    s_values: Iterable[float] = (1e-3, 1e-2, 0.1, 0.5, 1.0, 2.0, 10.0, 100.0),
    xi_scales: Iterable[float] = (0.0, 1.0, 10.0),
    profile: Optional[RadialProfile] = None,
    n_radii: int = 32,
) -> bool:
    """Sampling audit of the strict lower-bound hypothesis on f_mu.

    Checks f_mu(x, s, xi) > lambda1(p) s^(p-1) + beta^m m(x) s^(q-1) at
    every sampled (radius, s, xi, mu) tuple.  A True verdict is
    necessary-condition screening, not a proof.
    """
    prof = profile if profile is not None else first_eigenpair(p, geom)
    lam1p = prof.eigenvalue
    bm = beta_star_m(p, q, geom, m, profile=prof)
    idx = np.linspace(0, len(prof.grid) - 1, n_radii).astype(int)
    for mu in mu_set:
        for i in idx:
            r = float(prof.grid[i])
            mx = float(m.values[i])
            for s in s_values:
                bound = lam1p * s ** (p - 1.0) + bm * mx * s ** (q - 1.0)
                for scale in xi_scales:
                    xi = np.zeros(geom.dimension)
                    xi[0] = scale
                    if not fmu(r, s, xi, mu) > bound:
                        return False
    return True
