"""Radial shooting solver for the two-operator resonance problem.

Solves  -div(|grad u|^(p-2) grad u) - div(|grad u|^(q-2) grad u)
      = lambda1(p) u^(p-1) + mu u^(q-1)  on an N-ball with zero boundary
values, by shooting in the center value a.  Sweeps over mu estimate the
existence band and the supremum mu_tilde.
"""

import csv
import json
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from . import _ode, spectrum
from .errors import ExponentOrder, StepFailure
from .inequality import ExponentPair
from .profiles import Geometry, RadialProfile

#: integration steps for bracket scans and for final profiles
N_SCAN = 1024
N_FINE = 4096

#: boundary residual acceptance, relative to the shooting amplitude
RESIDUAL_RTOL = 1e-8


@dataclass
class MuSweepRecord:
    mu: float
    found: bool
    a: float
    profile: Optional[RadialProfile]
    gradient_p_norm: float
    diagnostics: dict = field(default_factory=dict)


@dataclass
class ExistenceMap:
    records: list
    lambda1_p: float
    lambda1_q: float
    beta_star: float
    mu_tilde_estimate: float
    p: float
    q: float
    dimension: int

    def write_csv(self, path) -> None:
        with open(path, "w", newline="") as fh:
            w = csv.writer(fh)
            w.writerow(["mu", "found", "a", "grad_p_norm", "residual"])
            for r in self.records:
                w.writerow(
                    [
                        repr(r.mu),
                        r.found,
                        repr(r.a),
                        repr(r.gradient_p_norm),
                        repr(r.diagnostics.get("boundary_residual", float("nan"))),
                    ]
                )

    def to_json(self) -> str:
        return json.dumps(
            {
                "p": self.p,
                "q": self.q,
                "N": self.dimension,
                "lambda1_p": self.lambda1_p,
                "lambda1_q": self.lambda1_q,
                "beta_star": self.beta_star,
                "mu_tilde_estimate": self.mu_tilde_estimate,
            }
        )


def flux_invert(w: float, pq: ExponentPair, p_coeff: float = 1.0) -> float:
    """Invert the combined flux |t|^(p-2)t + |t|^(q-2)t at w."""
    return float(_ode.flux_invert_kernel(float(w), pq.p, pq.q, float(p_coeff)))


def shoot(
    pq: ExponentPair,
    mu: float,
    a: float,
    lambda1_p: float,
    geom: Geometry,
    n_steps: int = N_FINE,
    p_coeff: float = 1.0,
) -> MuSweepRecord:
    """Single shot from center value a; reports the boundary residual.

    The residual is u(R) when the solution stays positive, otherwise the
    (negative) scaled distance of its first zero to the boundary.
    """
    if not pq.ordered:
        raise ExponentOrder(f"requires q < p, got {pq}")
    if not a > 0.0:
        raise StepFailure(f"center value must be positive, got {a}")
    res, r0 = _ode.pq_shoot(
        pq.p, pq.q, float(geom.dimension), mu, lambda1_p, a, geom.radius, n_steps, p_coeff
    )
    if not np.isfinite(res):
        raise StepFailure(f"integrator breakdown at mu={mu}, a={a}")
    found = res >= 0.0 and abs(res) <= RESIDUAL_RTOL * a
    profile = None
    grad_norm = float("nan")
    if found:
        profile = _make_profile(pq, mu, a, lambda1_p, geom, n_steps, p_coeff)
        grad_norm = profile.norm(pq.p, of_gradient=True)
    return MuSweepRecord(
        mu=mu,
        found=found,
        a=a,
        profile=profile,
        gradient_p_norm=grad_norm,
        diagnostics={"bisection_iters": 0, "boundary_residual": float(res)},
    )


def _make_profile(pq, mu, a, lambda1_p, geom, n_steps, p_coeff=1.0) -> RadialProfile:
    grid, vals, ders = _ode.pq_profile(
        pq.p, pq.q, float(geom.dimension), mu, lambda1_p, a, geom.radius, n_steps, p_coeff
    )
    vals[-1] = max(vals[-1], 0.0)
    return RadialProfile(grid=grid, values=vals, derivs=ders, dimension=geom.dimension)


def _residual(pq, mu, a, lambda1_p, geom, n_steps, p_coeff=1.0) -> float:
    res, _ = _ode.pq_shoot(
        pq.p, pq.q, float(geom.dimension), mu, lambda1_p, a, geom.radius, n_steps, p_coeff
    )
    return res


def find_positive_solution(
    pq: ExponentPair,
    mu: float,
    geom: Geometry,
    lambda1_p: Optional[float] = None,
    a_range: tuple = (1e-8, 1e8),
    n_scan_points: int = 200,
    p_coeff: float = 1.0,
) -> Optional[MuSweepRecord]:
    """Bisection in the center value over a log-scanned bracket.

    Returns None when the boundary residual never changes sign on the
    scanned amplitude range (no positive solution at this mu).
    """
    if not pq.ordered:
        raise ExponentOrder(f"requires q < p, got {pq}")
    if lambda1_p is None:
        lambda1_p = spectrum.first_eigenpair(pq.p, geom).eigenvalue
    a_vals = np.logspace(np.log10(a_range[0]), np.log10(a_range[1]), n_scan_points)
    res = np.array(
        [_residual(pq, mu, a, lambda1_p, geom, N_SCAN, p_coeff) for a in a_vals]
    )
    # residual is negative (overshoot) at small a, positive at large a
    sign_change = np.nonzero((res[:-1] < 0.0) & (res[1:] > 0.0))[0]
    if len(sign_change) == 0:
        return None
    i = int(sign_change[0])
    lo, hi = np.log(a_vals[i]), np.log(a_vals[i + 1])
    iters = 0
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        a = np.exp(mid)
        r = _residual(pq, mu, a, lambda1_p, geom, N_FINE, p_coeff)
        iters += 1
        if 0.0 <= r <= RESIDUAL_RTOL * a:
            break
        if r < 0.0:
            lo = mid
        else:
            hi = mid
        if hi - lo < 1e-14:
            a = np.exp(hi)
            r = _residual(pq, mu, a, lambda1_p, geom, N_FINE, p_coeff)
            break
    if not (0.0 <= r <= 1e-6 * a):
        return None
    profile = _make_profile(pq, mu, a, lambda1_p, geom, N_FINE, p_coeff)
    rec = MuSweepRecord(
        mu=mu,
        found=True,
        a=float(a),
        profile=profile,
        gradient_p_norm=profile.norm(pq.p, of_gradient=True),
        diagnostics={"bisection_iters": iters, "boundary_residual": float(r)},
    )
    return rec


def mu_sweep(
    pq: ExponentPair,
    geom: Geometry,
    mu_grid: np.ndarray,
    lambda1_p: Optional[float] = None,
    lambda1_q: Optional[float] = None,
    beta: Optional[float] = None,
) -> ExistenceMap:
    """Probe each mu on the grid and assemble the existence map."""
    prof_p = None
    if lambda1_p is None or beta is None:
        prof_p = spectrum.first_eigenpair(pq.p, geom)
        lambda1_p = prof_p.eigenvalue
    if lambda1_q is None:
        lambda1_q = spectrum.first_eigenpair(pq.q, geom).eigenvalue
    if beta is None:
        beta = spectrum.beta_star(pq.p, pq.q, geom, profile=prof_p)
    records = []
    for mu in sorted(float(m) for m in mu_grid):
        rec = find_positive_solution(pq, mu, geom, lambda1_p=lambda1_p)
        if rec is None:
            rec = MuSweepRecord(
                mu=mu, found=False, a=float("nan"), profile=None,
                gradient_p_norm=float("nan"),
                diagnostics={"bisection_iters": 0, "boundary_residual": float("nan")},
            )
        records.append(rec)
    found_mus = [r.mu for r in records if r.found]
    mu_tilde = max(found_mus) if found_mus else float("nan")
    return ExistenceMap(
        records=records,
        lambda1_p=lambda1_p,
        lambda1_q=lambda1_q,
        beta_star=beta,
        mu_tilde_estimate=mu_tilde,
        p=pq.p,
        q=pq.q,
        dimension=geom.dimension,
    )
