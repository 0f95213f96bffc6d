"""Numerics for generalized Picone inequalities and the (p,q)-Laplacian.

Pointwise slack evaluation for the full family of Picone-type
inequalities, exact characterization of the admissible exponent region,
counterexample synthesis at its boundary, and radial eigenvalue /
nonexistence-threshold computations.
"""

from ._accel import USE_NUMBA
from .inequality import (
    ExponentPair,
    FuzzSummary,
    PiconePoint,
    SamplerConfig,
    SlackReport,
    bf_slack,
    bm_slacks,
    classic_slack,
    diaz_saa_functional,
    fuzz,
    general_slack,
    ilyas_slack,
    radial_pair_slack,
    tirani_q_slack,
    tirani_slack,
)
from .profiles import Geometry, RadialProfile, WeightSpec
from .region import (
    Counterexample,
    GapReport,
    RegionSample,
    counterexample,
    f_eval,
    g_eval,
    g_global_min,
    gap,
    in_I,
    p_tilde,
    q_tilde,
    region_grid,
    sufficient_I,
    sufficient_II,
)
from .spectrum import assumption_A_check, beta_star, beta_star_m, first_eigenpair
from .pqsolve import ExistenceMap, MuSweepRecord, find_positive_solution, flux_invert, mu_sweep, shoot

__version__ = "0.1.0"

__all__ = [
    "USE_NUMBA",
    "ExponentPair",
    "PiconePoint",
    "SlackReport",
    "SamplerConfig",
    "FuzzSummary",
    "classic_slack",
    "bf_slack",
    "ilyas_slack",
    "general_slack",
    "radial_pair_slack",
    "tirani_slack",
    "tirani_q_slack",
    "bm_slacks",
    "diaz_saa_functional",
    "fuzz",
    "Geometry",
    "RadialProfile",
    "WeightSpec",
    "RegionSample",
    "GapReport",
    "Counterexample",
    "g_eval",
    "f_eval",
    "g_global_min",
    "in_I",
    "p_tilde",
    "q_tilde",
    "gap",
    "sufficient_I",
    "sufficient_II",
    "region_grid",
    "counterexample",
    "first_eigenpair",
    "beta_star",
    "beta_star_m",
    "assumption_A_check",
    "ExistenceMap",
    "MuSweepRecord",
    "flux_invert",
    "shoot",
    "find_positive_solution",
    "mu_sweep",
]
