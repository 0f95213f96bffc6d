"""Admissible exponent region for the generalized Picone inequality.

The inequality with left exponent p and right exponent q holds
unconditionally exactly when the scalar function

    g(s; p, q) = (q-1) s^p + q s^(p-1) - (p-q) s + (q-p+1)

is nonnegative on s >= 0.  This module computes the global minimum of g,
membership in the admissible set, the threshold exponents p_tilde(q) and
q_tilde, the non-membership gap inside (q, 2) for small q, the two
closed-form sufficient conditions, dense (p, q) grids for plotting, and
explicit counterexample points outside the region.
"""

import csv
import json
from dataclasses import dataclass
from typing import Optional

import numpy as np

from ._accel import maybe_njit
from .errors import BadRange, NegativeS, NotOutsideRegion

#: membership tolerance on the global minimum of g
G_MIN_ATOL = 1e-12


@dataclass(frozen=True)
class RegionSample:
    """One cell of the (p, q) membership grid."""

    p: float
    q: float
    g_min: float
    s_argmin: float
    in_I: bool
    suff_I: bool
    suff_II: bool


@dataclass(frozen=True)
class Counterexample:
    """A point where the generalized inequality fails, with its slack."""

    p: float
    q: float
    s0: float
    alpha: float
    point: object
    slack: float

    def to_json(self) -> str:
        pt = self.point
        return json.dumps(
            {
                "p": self.p,
                "q": self.q,
                "s0": self.s0,
                "alpha": self.alpha,
                "point": {
                    "u": pt.u,
                    "v": pt.v,
                    "grad_u": list(pt.grad_u),
                    "grad_v": list(pt.grad_v),
                },
                "slack": self.slack,
            }
        )


@dataclass(frozen=True)
class GapReport:
    """p_tilde and the optional non-membership gap for a fixed q."""

    q: float
    p_tilde: float
    gap: Optional[tuple]

    def to_json(self) -> str:
        gap = list(self.gap) if self.gap is not None else None
        return json.dumps({"q": self.q, "p_tilde": self.p_tilde, "gap": gap})


@maybe_njit
def _g(s, p, q):
    # s^(p-1) -> 0 as s -> 0+ for every p > 1 (limit convention)
    if s == 0.0:
        return q - p + 1.0
    return (q - 1.0) * s ** p + q * s ** (p - 1.0) - (p - q) * s + (q - p + 1.0)


@maybe_njit
def _f(s, p, q):
    if s == 0.0:
        return q - p + 1.0
    return (q - 1.0) * s ** p - q * s ** (p - 1.0) + (p - q) * s + (q - p + 1.0)


@maybe_njit
def _g_prime(s, p, q):
    # valid only for s > 0 (the s^(p-2) term diverges at 0 when p < 2)
    return p * (q - 1.0) * s ** (p - 1.0) + q * (p - 1.0) * s ** (p - 2.0) - (p - q)


@maybe_njit
def _g_prime_root(lo, hi, p, q):
    # bisection for the unique root of the increasing g' on [lo, hi];
    # caller guarantees g'(lo) < 0 < g'(hi)
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        if mid == lo or mid == hi:
            break
        if _g_prime(mid, p, q) < 0.0:
            lo = mid
        else:
            hi = mid
        if hi - lo <= 1e-15 * hi:
            break
    return 0.5 * (lo + hi)


@maybe_njit
def _g_branch_min(lo, p, q):
    # minimum of g on [lo, inf) where g is convex; returns (s, g(s))
    if _g_prime(lo, p, q) >= 0.0:
        return lo, _g(lo, p, q)
    hi = lo if lo > 1.0 else 1.0
    while _g_prime(hi, p, q) <= 0.0:
        hi *= 2.0
        if hi > 1e12:
            break
    s = _g_prime_root(lo, hi, p, q)
    return s, _g(s, p, q)


@maybe_njit
def _g_min(p, q):
    """Global minimum of g(.; p, q) over s >= 0, as (s_argmin, g_min).

    g''(s) = s^(p-3) * [p(p-1)(q-1) s + q(p-1)(p-2)], so g is convex on
    (0, inf) for p >= 2, and for p < 2 concave up to the single inflection
    s_i = q(2-p)/(p(q-1)) and convex beyond.  On a concave stretch the
    minimum sits at an endpoint, which leaves s = 0 and the convex-branch
    minimizer as the only candidates.
    """
    g0 = q - p + 1.0
    if p >= 2.0:
        s, gs = _g_branch_min(1e-300, p, q)
        if g0 <= gs:
            return 0.0, g0
        return s, gs
    s_infl = q * (2.0 - p) / (p * (q - 1.0))
    s, gs = _g_branch_min(s_infl, p, q)
    if g0 <= gs:
        return 0.0, g0
    return s, gs


@maybe_njit
def _grid_g_min(p_vals, q_vals):
    np_, nq = p_vals.shape[0], q_vals.shape[0]
    g_min = np.empty((np_, nq))
    s_arg = np.empty((np_, nq))
    for i in range(np_):
        for j in range(nq):
            s, g = _g_min(p_vals[i], q_vals[j])
            s_arg[i, j] = s
            g_min[i, j] = g
    return s_arg, g_min


@maybe_njit
def _min_g_min_over_p(q, p_lo, p_hi, n):
    """Scan p in (p_lo, p_hi) and return (p_at_min, min over p of g_min)."""
    best_p = p_lo
    best = 1e300
    for k in range(n):
        p = p_lo + (p_hi - p_lo) * (k + 1.0) / (n + 1.0)
        _, g = _g_min(p, q)
        if g < best:
            best = g
            best_p = p
    return best_p, best


def _check_pq(p, q):
    if not (p > 1.0):
        raise BadRange(f"p must exceed 1, got {p}")
    if not (q > 1.0):
        raise BadRange(f"q must exceed 1, got {q}")


def g_eval(s: float, p: float, q: float) -> float:
    """Evaluate g(s; p, q) = (q-1)s^p + q s^(p-1) - (p-q)s + (q-p+1)."""
    _check_pq(p, q)
    if s < 0.0:
        raise NegativeS(f"s must be nonnegative, got {s}")
    return float(_g(float(s), float(p), float(q)))


def f_eval(s: float, p: float, q: float) -> float:
    """Evaluate f(s; p, q) = (q-1)s^p - q s^(p-1) + (p-q)s + (q-p+1)."""
    _check_pq(p, q)
    if s < 0.0:
        raise NegativeS(f"s must be nonnegative, got {s}")
    return float(_f(float(s), float(p), float(q)))


def g_global_min(p: float, q: float) -> tuple:
    """Global minimum of g(.; p, q) over s >= 0 as (s_argmin, g_min)."""
    _check_pq(p, q)
    s, g = _g_min(float(p), float(q))
    return float(s), float(g)


def in_I(p: float, q: float, atol: float = G_MIN_ATOL) -> bool:
    """Whether g(.; p, q) >= 0 on s >= 0, i.e. the inequality holds freely.

    Boundary points (g_min within atol of 0) count as members; the
    admissible set is closed on the right.
    """
    return g_global_min(p, q)[1] >= -atol


def sufficient_I(p: float, q: float) -> bool:
    """Closed-form sufficient condition for 1 < q < p <= 2.

    Returns False outside its range of applicability rather than raising.
    """
    _check_pq(p, q)
    if not (q < p <= 2.0):
        return False
    return p <= q + q ** (p - 1.0) * (q - 1.0) ** (2.0 - p)


def sufficient_II(p: float, q: float) -> bool:
    """Closed-form sufficient condition for 2 <= p < q + 1.

    Returns False outside its range of applicability rather than raising.
    """
    _check_pq(p, q)
    if not (2.0 <= p < q + 1.0):
        return False
    if p <= q:
        # (p - q)^(p-1) is undefined for a negative base; membership is
        # already guaranteed on p <= q, so the condition holds vacuously
        return True
    return (q + 1.0 - p) ** (p - 2.0) * q >= (p - q) ** (p - 1.0)


def p_tilde(q: float, tol: float = 1e-9) -> float:
    """Supremum of admissible p for fixed q, located by bisection.

    Membership is an interval [2, p_tilde] on [2, q+1]: 2 is always a
    member and q+1 never is, so the indicator flips exactly once there.
    """
    _check_pq(2.0, q)
    lo, hi = 2.0, q + 1.0
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        if in_I(mid, q):
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def _has_gap(q: float, n_scan: int = 2000) -> bool:
    """Whether some p in (q, 2) falls outside the admissible set.

    A coarse scan of min_s g is followed by a golden-section refinement in
    p around the scan minimizer; the non-membership lobe is thin near the
    threshold q_tilde.
    """
    if q >= 2.0:
        return False
    p_at, best = _min_g_min_over_p(q, q, 2.0, n_scan)
    if best < -G_MIN_ATOL:
        return True
    # refine: minimize p -> g_min(p, q) near the scan minimizer
    h = (2.0 - q) / (n_scan + 1.0)
    lo, hi = max(q + 1e-12, p_at - h), min(2.0 - 1e-12, p_at + h)
    invphi = (np.sqrt(5.0) - 1.0) / 2.0
    a, b = lo, hi
    c = b - invphi * (b - a)
    d = a + invphi * (b - a)
    fc = _g_min(c, q)[1]
    fd = _g_min(d, q)[1]
    for _ in range(80):
        if fc < fd:
            b, d, fd = d, c, fc
            c = b - invphi * (b - a)
            fc = _g_min(c, q)[1]
        else:
            a, c, fc = c, d, fd
            d = a + invphi * (b - a)
            fd = _g_min(d, q)[1]
        if min(fc, fd) < -G_MIN_ATOL:
            return True
    return min(fc, fd) < -G_MIN_ATOL


def q_tilde(tol: float = 1e-6) -> float:
    """Threshold q below which the admissible set has a gap inside (q, 2)."""
    lo, hi = 1.0001, 2.0
    if not _has_gap(lo):
        return lo
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        if _has_gap(mid):
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def gap(q: float, tol: float = 1e-9, n_scan: int = 2000) -> Optional[tuple]:
    """Maximal non-membership interval (p_low, p_high) inside (q, 2).

    Returns None when the set has no gap at this q.
    """
    _check_pq(2.0, q)
    if not _has_gap(q, n_scan):
        return None
    # locate one interior non-member, then bisect both edges
    p_at, best = _min_g_min_over_p(q, q, 2.0, n_scan)
    if best >= -G_MIN_ATOL:
        # thin lobe: reuse the refinement search to find a witness
        h = (2.0 - q) / (n_scan + 1.0)
        ps = np.linspace(p_at - h, p_at + h, 2001)
        for p in ps:
            if q < p < 2.0 and not in_I(p, q):
                p_at = p
                break
    lo, hi = q, p_at
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        if in_I(mid, q):
            lo = mid
        else:
            hi = mid
    p_low = 0.5 * (lo + hi)
    lo, hi = p_at, 2.0
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        if in_I(mid, q):
            hi = mid
        else:
            lo = mid
    p_high = 0.5 * (lo + hi)
    return (p_low, p_high)


def gap_report(q: float) -> GapReport:
    return GapReport(q=q, p_tilde=p_tilde(q), gap=gap(q))


def region_grid(p_range: tuple, q_range: tuple, resolution: int) -> list:
    """Dense membership grid over [p_range] x [q_range].

    Returns RegionSample cells in row-major (p outer, q inner) order.
    """
    p_lo, p_hi = p_range
    q_lo, q_hi = q_range
    if not (1.0 < p_lo < p_hi <= 6.0 and 1.0 < q_lo < q_hi <= 6.0):
        raise BadRange("ranges must lie within (1, 6]")
    if resolution < 2:
        raise BadRange("resolution must be at least 2")
    p_vals = np.linspace(p_lo, p_hi, resolution)
    q_vals = np.linspace(q_lo, q_hi, resolution)
    s_arg, g_min = _grid_g_min(p_vals, q_vals)
    out = []
    for i, p in enumerate(p_vals):
        for j, q in enumerate(q_vals):
            out.append(
                RegionSample(
                    p=float(p),
                    q=float(q),
                    g_min=float(g_min[i, j]),
                    s_argmin=float(s_arg[i, j]),
                    in_I=bool(g_min[i, j] >= -G_MIN_ATOL),
                    suff_I=sufficient_I(float(p), float(q)),
                    suff_II=sufficient_II(float(p), float(q)),
                )
            )
    return out


def write_grid_csv(samples: list, path) -> None:
    """RFC-4180 CSV export of a membership grid."""
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(["p", "q", "g_min", "s_argmin", "in_I", "suff_I", "suff_II"])
        for s in samples:
            w.writerow(
                [
                    repr(s.p),
                    repr(s.q),
                    repr(s.g_min),
                    repr(s.s_argmin),
                    s.in_I,
                    s.suff_I,
                    s.suff_II,
                ]
            )


def counterexample(p: float, q: float, dim: int = 2):
    """Explicit point violating the generalized inequality.

    For p outside the admissible set the witness is u = 1 - alpha*x1,
    v = 1 + x1 evaluated at the origin with alpha the minimizer of g; for
    p > q + 1 a constant u against any v with nonzero gradient suffices.
    """
    from .inequality import ExponentPair, PiconePoint, general_slack

    _check_pq(p, q)
    if dim < 1:
        raise BadRange("dim must be at least 1")
    pq = ExponentPair(p=p, q=q)
    if p > q + 1.0:
        grad_v = np.zeros(dim)
        grad_v[0] = 1.0
        pt = PiconePoint(u=1.0, v=1.0, grad_u=np.zeros(dim), grad_v=grad_v)
        rep = general_slack(pt, pq)
        return Counterexample(p=p, q=q, s0=0.0, alpha=0.0, point=pt, slack=rep.slack)
    if not in_I(p, q):
        s0, g0 = g_global_min(p, q)
        grad_u = np.zeros(dim)
        grad_u[0] = -s0
        grad_v = np.zeros(dim)
        grad_v[0] = 1.0
        pt = PiconePoint(u=1.0, v=1.0, grad_u=grad_u, grad_v=grad_v)
        rep = general_slack(pt, pq)
        return Counterexample(p=p, q=q, s0=s0, alpha=s0, point=pt, slack=rep.slack)
    raise NotOutsideRegion(f"p={p} is admissible for q={q} and p <= q+1")
