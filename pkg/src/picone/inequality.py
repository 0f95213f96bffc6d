"""Pointwise Picone-type inequality evaluators and a fuzzing harness.

Each evaluator returns a :class:`SlackReport` with both sides of the
inequality and their difference (rhs - lhs).  A nonnegative slack, up to
rounding noise, certifies the inequality at the given point.  Slacks are
computed even when the hypotheses fail; ``hypothesis_met`` records the
verdict so counterexample searches can evaluate outside the admissible
range.
"""

import json
from dataclasses import dataclass
from typing import Optional

import numpy as np

from . import _kernels as K
from . import region
from .errors import (
    BadExponent,
    ExponentOrder,
    GridMismatch,
    NegativeInnerProduct,
    NegativeV,
    NonPositiveCoefficient,
    NonPositiveF,
    NonPositiveU,
    NonPositiveV,
    PiconeError,
    UnboundedRatio,
)

#: violation threshold: slack < -(ATOL + RTOL * (|lhs| + |rhs|)) flags a point
ATOL = 1e-12
RTOL = 1e-10


@dataclass(frozen=True)
class ExponentPair:
    """Exponent pair (p, q), both exceeding 1."""

    p: float
    q: float

    def __post_init__(self):
        if not (self.p > 1.0 and self.q > 1.0):
            raise BadExponent(f"exponents must exceed 1, got p={self.p}, q={self.q}")

    @property
    def ordered(self) -> bool:
        """The standing 1 < q < p assumption of the eigenvalue problems."""
        return self.q < self.p


@dataclass
class PiconePoint:
    """Function values and gradients of the pair (u, v) at one point."""

    u: float
    v: float
    grad_u: np.ndarray
    grad_v: np.ndarray

    def __post_init__(self):
        self.grad_u = np.atleast_1d(np.asarray(self.grad_u, dtype=float))
        self.grad_v = np.atleast_1d(np.asarray(self.grad_v, dtype=float))
        if self.grad_u.shape != self.grad_v.shape or self.grad_u.ndim != 1:
            raise PiconeError("grad_u and grad_v must be 1-d of equal length")
        if not self.u > 0.0:
            raise NonPositiveU(f"u must be positive, got {self.u}")
        if self.v < 0.0:
            raise NegativeV(f"v must be nonnegative, got {self.v}")


@dataclass(frozen=True)
class SlackReport:
    lhs: float
    rhs: float
    slack: float
    hypothesis_met: bool
    reduction_value: Optional[float] = None


def _batch(pt: PiconePoint):
    u = np.array([pt.u])
    v = np.array([pt.v])
    gu = pt.grad_u.reshape(1, -1)
    gv = pt.grad_v.reshape(1, -1)
    return u, v, gu, gv


def _report(lhs, rhs, hypothesis_met=True, reduction_value=None):
    lhs = float(lhs)
    rhs = float(rhs)
    return SlackReport(
        lhs=lhs,
        rhs=rhs,
        slack=rhs - lhs,
        hypothesis_met=hypothesis_met,
        reduction_value=reduction_value,
    )


def classic_slack(pt: PiconePoint, p: float) -> SlackReport:
    """Classic p-Laplacian Picone slack; for p = 2 the slack equals the
    squared-residual identity exactly."""
    if p <= 1.0:
        raise BadExponent(f"p must exceed 1, got {p}")
    u, v, gu, gv = _batch(pt)
    lhs, rhs = K.classic_sides(u, v, gu, gv, float(p))
    red = float(K.classic_reduction(u, v, gu, gv)[0]) if p == 2.0 else None
    return _report(lhs[0], rhs[0], reduction_value=red)


def bf_slack(pt: PiconePoint, pq: ExponentPair) -> SlackReport:
    """Split-form slack with rhs (q/p)|grad v|^p + ((p-q)/p)|grad u|^p."""
    if pq.q > pq.p:
        raise ExponentOrder(f"requires q <= p, got p={pq.p}, q={pq.q}")
    u, v, gu, gv = _batch(pt)
    lhs, rhs = K.bf_sides(u, v, gu, gv, pq.p, pq.q)
    return _report(lhs[0], rhs[0])


def ilyas_slack(pt: PiconePoint, pq: ExponentPair, form: str = "original") -> SlackReport:
    """Swapped-gradient-pairing slack.

    ``original`` requires p <= q; ``rewritten`` is the same inequality with
    the roles of p and q exchanged and requires q <= p.
    """
    if form == "original":
        if pq.p > pq.q:
            raise ExponentOrder(f"original form requires p <= q, got {pq}")
        p_op, q_test = pq.p, pq.q
    elif form == "rewritten":
        if pq.q > pq.p:
            raise ExponentOrder(f"rewritten form requires q <= p, got {pq}")
        p_op, q_test = pq.q, pq.p
    else:
        raise PiconeError(f"unknown form {form!r}")
    if q_test - p_op + 1.0 < 0.0 and pt.v <= 0.0:
        raise NonPositiveV("v must be positive for negative test exponents")
    u, v, gu, gv = _batch(pt)
    lhs, rhs = K.general_sides(u, v, gu, gv, p_op, q_test)
    return _report(lhs[0], rhs[0])


def general_slack(pt: PiconePoint, pq: ExponentPair) -> SlackReport:
    """Slack of the generalized inequality valid for admissible (p, q).

    ``hypothesis_met`` is true iff p is in the admissible set for q, or
    p <= q+1 with aligned gradients at this point.  ``reduction_value``
    carries the scalar-form residual scaled back by v^q u^(p-q) whenever
    both gradients are nonzero; it matches the slack to rounding noise.
    """
    if pt.v <= 0.0:
        raise NonPositiveV(f"v must be positive, got {pt.v}")
    u, v, gu, gv = _batch(pt)
    lhs, rhs = K.general_sides(u, v, gu, gv, pq.p, pq.q)
    dot = float(np.dot(pt.grad_u, pt.grad_v))
    hyp = region.in_I(pq.p, pq.q) or (pq.p <= pq.q + 1.0 and dot >= 0.0)
    red = float(K.general_reduction(u, v, gu, gv, pq.p, pq.q)[0])
    if np.isnan(red):
        red = None
    return _report(lhs[0], rhs[0], hypothesis_met=hyp, reduction_value=red)


def radial_pair_slack(pt: PiconePoint, p: float) -> SlackReport:
    """Aligned-gradient pair slack; the inequality direction flips at p = 2,
    so the report swaps sides for p > 2 to keep slack = rhs - lhs >= 0."""
    if p <= 1.0:
        raise BadExponent(f"p must exceed 1, got {p}")
    if pt.v <= 0.0:
        raise NonPositiveV(f"v must be positive, got {pt.v}")
    dot = float(np.dot(pt.grad_u, pt.grad_v))
    if dot < 0.0:
        raise NegativeInnerProduct(f"requires grad u . grad v >= 0, got {dot}")
    u, v, gu, gv = _batch(pt)
    a, b = K.radial_pair_sides(u, v, gu, gv, float(p))
    if p <= 2.0:
        return _report(a[0], b[0])
    return _report(b[0], a[0])


def tirani_slack(pt: PiconePoint, p: float, f_val: float, f_deriv: float) -> SlackReport:
    """General-denominator slack with caller-supplied f(u) and f'(u)."""
    if p <= 1.0:
        raise BadExponent(f"p must exceed 1, got {p}")
    if f_val <= 0.0 or f_deriv <= 0.0:
        raise NonPositiveF(f"f(u) and f'(u) must be positive, got {f_val}, {f_deriv}")
    u, v, gu, gv = _batch(pt)
    fv = np.array([float(f_val)])
    fd = np.array([float(f_deriv)])
    lhs, rhs = K.tirani_sides(u, v, gu, gv, float(p), fv, fd)
    return _report(lhs[0], rhs[0])


def tirani_q_slack(
    pt: PiconePoint,
    pq: ExponentPair,
    variant: str = "eq12",
    f_val: Optional[float] = None,
    f_deriv: Optional[float] = None,
) -> SlackReport:
    """q-operator variants of the general-denominator inequality.

    ``eq11`` takes a user-supplied f; ``eq12``/``eq13`` use the power
    instance f(s) = s^(p-1); ``eq13`` additionally requires q < p.
    """
    p, q = pq.p, pq.q
    if q > p and pt.v <= 0.0:
        raise NonPositiveV("v must be positive when q > p")
    u, v, gu, gv = _batch(pt)
    if variant == "eq11":
        if f_val is None or f_deriv is None:
            raise PiconeError("eq11 requires f_val and f_deriv")
        if f_val <= 0.0 or f_deriv <= 0.0:
            raise NonPositiveF("f(u) and f'(u) must be positive")
        lhs, rhs = K.tirani_q11_sides(
            u, v, gu, gv, p, q, np.array([float(f_val)]), np.array([float(f_deriv)])
        )
    elif variant == "eq12":
        lhs, rhs = K.tirani_q12_sides(u, v, gu, gv, p, q)
    elif variant == "eq13":
        if q >= p:
            raise ExponentOrder(f"eq13 requires q < p, got {pq}")
        lhs, rhs = K.tirani_q13_sides(u, v, gu, gv, p, q)
    else:
        raise PiconeError(f"unknown variant {variant!r}")
    return _report(lhs[0], rhs[0])


def bm_constant(p: float, q: float) -> float:
    """Constant C of the two-term-denominator inequality."""
    if p <= q + 1.0:
        return 1.0
    return (q - 1.0) ** (p - 2.0) * (p - q) / (p - 2.0) ** (p - 2.0)


def bm_slacks(pt: PiconePoint, pq: ExponentPair, alpha: float, beta: float):
    """Both operator slacks against the denominator alpha*u^(p-1) + beta*u^(q-1)."""
    if pq.q >= pq.p:
        raise ExponentOrder(f"requires q < p, got {pq}")
    if alpha <= 0.0 or beta <= 0.0:
        raise NonPositiveCoefficient(f"alpha, beta must be positive, got {alpha}, {beta}")
    u, v, gu, gv = _batch(pt)
    C = bm_constant(pq.p, pq.q)
    lhs1, rhs1, lhs2, rhs2 = K.bm_sides(u, v, gu, gv, pq.p, pq.q, float(alpha), float(beta), C)
    return _report(lhs1[0], rhs1[0]), _report(lhs2[0], rhs2[0])


# ---------------------------------------------------------------------------
# Diaz-Saa type functional on radial profiles
# ---------------------------------------------------------------------------


def diaz_saa_functional(w1, w2, pq: ExponentPair, mu: float, homogeneity: float,
                        ratio_floor: float = 1e-10) -> float:
    """Weak-form monotonicity functional for the two-operator problem.

    Integrates A(w1') T1' - A(w2') T2' over the radial domain, where
    A(t) = |t|^(p-2) t + mu |t|^(q-2) t and Ti is the h-homogeneous
    difference quotient (w1^h - w2^h) / wi^(h-1), expanded analytically.
    mu = 0 with h = p gives the single-operator functional; mu > 0 with
    h = q gives the two-operator one.  The integrand is pointwise
    nonnegative, so the value is nonnegative up to quadrature noise.
    """
    if mu < 0.0:
        raise NonPositiveCoefficient(f"mu must be nonnegative, got {mu}")
    r1, r2 = np.asarray(w1.grid), np.asarray(w2.grid)
    if r1.shape != r2.shape or not np.array_equal(r1, r2):
        raise GridMismatch("profiles must share a common radial grid")
    if w1.dimension != w2.dimension:
        raise GridMismatch("profiles must share the ambient dimension")
    a1, a2 = np.asarray(w1.values), np.asarray(w2.values)
    d1, d2 = np.asarray(w1.derivs), np.asarray(w2.derivs)
    for a in (a1, a2):
        interior = a[:-1]
        if interior.size and np.min(interior) <= ratio_floor * max(np.max(a), 1e-300):
            raise UnboundedRatio("profile too close to zero on interior nodes")
    p, q, h = pq.p, pq.q, float(homogeneity)
    n = w1.dimension
    sigma = 2.0 * np.pi ** (n / 2.0) / _gamma_half(n)

    def A(t):
        # |t|^(e) t with e < 0 must evaluate to 0 at t = 0 (limit convention)
        mag = np.abs(t)
        safe = np.where(mag > 0.0, mag, 1.0)
        return (safe ** (p - 2.0) + mu * safe ** (q - 2.0)) * t

    # exclude the boundary node (w = 0 there makes the quotient singular);
    # the integrand has a finite limit, approximated by extrapolation
    s = slice(0, len(r1) - 1)
    t1 = d1[s] - h * a2[s] ** (h - 1.0) * d2[s] * a1[s] ** (1.0 - h) \
        - (1.0 - h) * a2[s] ** h * a1[s] ** (-h) * d1[s]
    t2 = h * a1[s] ** (h - 1.0) * d1[s] * a2[s] ** (1.0 - h) \
        + (1.0 - h) * a1[s] ** h * a2[s] ** (-h) * d2[s] - d2[s]
    integrand = np.empty_like(r1)
    integrand[s] = sigma * r1[s] ** (n - 1.0) * (A(d1[s]) * t1 - A(d2[s]) * t2)
    integrand[-1] = 2.0 * integrand[-2] - integrand[-3]
    return float(np.trapezoid(integrand, r1))


def _gamma_half(n: int) -> float:
    from math import gamma

    return gamma(n / 2.0)


# ---------------------------------------------------------------------------
# Fuzzing harness
# ---------------------------------------------------------------------------

INEQUALITIES = (
    "classic",
    "bf",
    "ilyas",
    "general",
    "radial",
    "tirani",
    "eq12",
    "eq13",
    "bm",
)


@dataclass(frozen=True)
class SamplerConfig:
    """Random-point sampling configuration for one inequality."""

    inequality: str
    n_samples: int
    p: float
    q: Optional[float] = None
    dim: int = 2
    value_range: tuple = (1e-3, 1e3)
    grad_range: tuple = (1e-3, 1e3)
    regime: str = "random"  # aligned | anti | random
    alpha: float = 1.0
    beta: float = 1.0

    def __post_init__(self):
        if self.inequality not in INEQUALITIES:
            raise PiconeError(f"unknown inequality {self.inequality!r}")
        if self.inequality != "classic" and self.inequality != "radial" and self.q is None:
            raise PiconeError(f"{self.inequality} requires q")
        if self.regime not in ("aligned", "anti", "random"):
            raise PiconeError(f"unknown regime {self.regime!r}")
        if self.inequality == "radial" and self.regime == "anti":
            raise PiconeError("radial pair requires grad u . grad v >= 0")
        if self.n_samples < 1 or self.dim < 1:
            raise PiconeError("n_samples and dim must be positive")
        if self.p <= 1.0 or (self.q is not None and self.q <= 1.0):
            raise BadExponent("exponents must exceed 1")


@dataclass
class FuzzSummary:
    inequality: str
    p: float
    q: Optional[float]
    samples: int
    min_slack: float
    argmin: dict
    violations: int
    seed: int
    hypothesis_met_all: bool = True

    def to_json(self) -> str:
        return json.dumps(
            {
                "inequality": self.inequality,
                "p": self.p,
                "q": self.q,
                "samples": self.samples,
                "min_slack": self.min_slack,
                "argmin": self.argmin,
                "violations": self.violations,
                "seed": self.seed,
            }
        )


def _sample_chunk(rng, cfg: SamplerConfig, n: int):
    lo_v, hi_v = np.log10(cfg.value_range[0]), np.log10(cfg.value_range[1])
    lo_g, hi_g = np.log10(cfg.grad_range[0]), np.log10(cfg.grad_range[1])
    u = 10.0 ** rng.uniform(lo_v, hi_v, n)
    v = 10.0 ** rng.uniform(lo_v, hi_v, n)
    mu = 10.0 ** rng.uniform(lo_g, hi_g, n)
    mv = 10.0 ** rng.uniform(lo_g, hi_g, n)
    du = rng.normal(size=(n, cfg.dim))
    du /= np.linalg.norm(du, axis=1, keepdims=True)
    if cfg.regime == "aligned":
        dv = du
    elif cfg.regime == "anti":
        dv = -du
    else:
        dv = rng.normal(size=(n, cfg.dim))
        dv /= np.linalg.norm(dv, axis=1, keepdims=True)
    gu = du * mu[:, None]
    gv = dv * mv[:, None]
    if cfg.inequality == "radial":
        dot = np.einsum("ij,ij->i", gu, gv)
        gv = np.where((dot < 0.0)[:, None], -gv, gv)
    return u, v, gu, gv


def _eval_batch(cfg: SamplerConfig, u, v, gu, gv):
    """Returns (lhs, rhs, slack) arrays for the configured inequality."""
    p = cfg.p
    q = cfg.q
    name = cfg.inequality
    if name == "classic":
        lhs, rhs = K.classic_sides(u, v, gu, gv, p)
    elif name == "bf":
        if q > p:
            raise ExponentOrder("bf requires q <= p")
        lhs, rhs = K.bf_sides(u, v, gu, gv, p, q)
    elif name == "ilyas":
        if p <= q:
            lhs, rhs = K.general_sides(u, v, gu, gv, p, q)
        else:
            lhs, rhs = K.general_sides(u, v, gu, gv, q, p)
    elif name == "general":
        lhs, rhs = K.general_sides(u, v, gu, gv, p, q)
    elif name == "radial":
        a, b = K.radial_pair_sides(u, v, gu, gv, p)
        if p <= 2.0:
            lhs, rhs = a, b
        else:
            lhs, rhs = b, a
    elif name == "tirani":
        fv = u ** (p - 1.0)
        fd = (p - 1.0) * u ** (p - 2.0)
        lhs, rhs = K.tirani_sides(u, v, gu, gv, p, fv, fd)
    elif name == "eq12":
        lhs, rhs = K.tirani_q12_sides(u, v, gu, gv, p, q)
    elif name == "eq13":
        if q >= p:
            raise ExponentOrder("eq13 requires q < p")
        lhs, rhs = K.tirani_q13_sides(u, v, gu, gv, p, q)
    elif name == "bm":
        if q >= p:
            raise ExponentOrder("bm requires q < p")
        C = bm_constant(p, q)
        l1, r1, l2, r2 = K.bm_sides(u, v, gu, gv, p, q, cfg.alpha, cfg.beta, C)
        s1, s2 = r1 - l1, r2 - l2
        take1 = s1 <= s2
        lhs = np.where(take1, l1, l2)
        rhs = np.where(take1, r1, r2)
    else:  # pragma: no cover
        raise PiconeError(name)
    return lhs, rhs, rhs - lhs


def is_violation(lhs, rhs, atol: float = ATOL, rtol: float = RTOL):
    return (rhs - lhs) < -(atol + rtol * (np.abs(lhs) + np.abs(rhs)))


def fuzz(config: SamplerConfig, seed: int, chunk: int = 10000) -> FuzzSummary:
    """Seeded random sampling of one inequality; deterministic per seed.

    The sample space is split into fixed-size chunks with seed-derived
    sub-streams, so parallel or reordered chunk evaluation cannot change
    the result.
    """
    n_chunks = (config.n_samples + chunk - 1) // chunk
    children = np.random.SeedSequence(seed).spawn(n_chunks)
    min_slack = np.inf
    argmin = None
    violations = 0
    hyp_all = True
    remaining = config.n_samples
    for child in children:
        n = min(chunk, remaining)
        remaining -= n
        rng = np.random.default_rng(child)
        u, v, gu, gv = _sample_chunk(rng, config, n)
        lhs, rhs, slack = _eval_batch(config, u, v, gu, gv)
        violations += int(np.count_nonzero(is_violation(lhs, rhs)))
        i = int(np.argmin(slack))
        if slack[i] < min_slack:
            min_slack = float(slack[i])
            argmin = {
                "u": float(u[i]),
                "v": float(v[i]),
                "grad_u": [float(x) for x in gu[i]],
                "grad_v": [float(x) for x in gv[i]],
            }
        if config.inequality == "general":
            dot = np.einsum("ij,ij->i", gu, gv)
            if not (region.in_I(config.p, config.q)
                    or (config.p <= config.q + 1.0 and np.all(dot >= 0.0))):
                hyp_all = False
    return FuzzSummary(
        inequality=config.inequality,
        p=config.p,
        q=config.q,
        samples=config.n_samples,
        min_slack=min_slack,
        argmin=argmin,
        violations=violations,
        seed=seed,
        hypothesis_met_all=hyp_all,
    )
