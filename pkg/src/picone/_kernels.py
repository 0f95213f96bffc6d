"""Vectorized evaluators for both sides of each Picone-type inequality.

Every kernel takes batches ``u, v`` of shape (n,) and gradients
``gu, gv`` of shape (n, d), plus scalar exponents, and returns the two
sides as arrays.  The gradients of the composite test functions are
expanded analytically (product/quotient rule); no numerical
differentiation happens here, so slacks carry only rounding noise.

Kernels are numba-compiled unless ``PICONE_NO_NUMBA`` is set, in which
case the same source runs as plain numpy.
"""

import numpy as np

from ._accel import maybe_njit, rowdot


@maybe_njit
def _pow_mag(mag, e):
    # mag**e with the 0**negative case forced to 0: the factor always
    # multiplies the corresponding (zero) gradient
    safe = np.where(mag > 0.0, mag, 1.0)
    return np.where(mag > 0.0, safe ** e, 0.0)


@maybe_njit
def classic_sides(u, v, gu, gv, p):
    """eq-form: |grad u|^(p-2) grad u . grad(v^p / u^(p-1))  vs  |grad v|^p."""
    nu = np.sqrt(rowdot(gu, gu))
    nv = np.sqrt(rowdot(gv, gv))
    duv = rowdot(gu, gv)
    r = v / u
    lhs = _pow_mag(nu, p - 2.0) * (p * r ** (p - 1.0) * duv - (p - 1.0) * r ** p * nu ** 2)
    rhs = nv ** p
    return lhs, rhs


@maybe_njit
def classic_reduction(u, v, gu, gv):
    """p = 2 residual identity: |grad v - (v/u) grad u|^2."""
    n = u.shape[0]
    out = np.empty(n)
    for i in range(n):
        s = 0.0
        for j in range(gu.shape[1]):
            d = gv[i, j] - (v[i] / u[i]) * gu[i, j]
            s += d * d
        out[i] = s
    return out


@maybe_njit
def bf_sides(u, v, gu, gv, p, q):
    """q <= p split form with rhs (q/p)|grad v|^p + ((p-q)/p)|grad u|^p."""
    nu = np.sqrt(rowdot(gu, gu))
    nv = np.sqrt(rowdot(gv, gv))
    duv = rowdot(gu, gv)
    r = v / u
    lhs = _pow_mag(nu, p - 2.0) * (q * r ** (q - 1.0) * duv - (q - 1.0) * r ** q * nu ** 2)
    rhs = (q / p) * nv ** p + ((p - q) / p) * nu ** p
    return lhs, rhs


@maybe_njit
def general_sides(u, v, gu, gv, p, q):
    """Two-exponent form: p-operator against v^q/u^(q-1), rhs the swapped
    gradient pairing against v^(q-p+1)/u^(q-p)."""
    nu = np.sqrt(rowdot(gu, gu))
    nv = np.sqrt(rowdot(gv, gv))
    duv = rowdot(gu, gv)
    r = v / u
    lhs = _pow_mag(nu, p - 2.0) * (q * r ** (q - 1.0) * duv - (q - 1.0) * r ** q * nu ** 2)
    rhs = _pow_mag(nv, p - 2.0) * (
        (q - p + 1.0) * r ** (q - p) * nv ** 2 + (p - q) * r ** (q - p + 1.0) * duv
    )
    return lhs, rhs


@maybe_njit
def general_reduction(u, v, gu, gv, p, q):
    """Scalar-form residual scaled back by v^q u^(p-q).

    NaN where either gradient vanishes (the reduction divides by both
    magnitudes).
    """
    nu = np.sqrt(rowdot(gu, gu))
    nv = np.sqrt(rowdot(gv, gv))
    duv = rowdot(gu, gv)
    n = u.shape[0]
    out = np.empty(n)
    for i in range(n):
        if nu[i] <= 0.0 or nv[i] <= 0.0:
            out[i] = np.nan
            continue
        a = nu[i] / u[i]
        b = nv[i] / v[i]
        lhs = (duv[i] / (u[i] * v[i])) * (q * a ** (p - 2.0) - (p - q) * b ** (p - 2.0))
        rhs = (q - 1.0) * a ** p + (q - p + 1.0) * b ** p
        out[i] = v[i] ** q * u[i] ** (p - q) * (rhs - lhs)
    return out


@maybe_njit
def radial_pair_sides(u, v, gu, gv, p):
    """|grad u|^(p-2) grad u . grad v  vs  |grad v|^(p-2) grad v . grad(u^(p-1) v^(2-p))."""
    nu = np.sqrt(rowdot(gu, gu))
    nv = np.sqrt(rowdot(gv, gv))
    duv = rowdot(gu, gv)
    lhs = _pow_mag(nu, p - 2.0) * duv
    rhs = _pow_mag(nv, p - 2.0) * (
        (p - 1.0) * u ** (p - 2.0) * v ** (2.0 - p) * duv
        + (2.0 - p) * u ** (p - 1.0) * v ** (1.0 - p) * nv ** 2
    )
    return lhs, rhs


@maybe_njit
def tirani_sides(u, v, gu, gv, p, fv, fd):
    """General-denominator form with caller-supplied f(u), f'(u)."""
    nu = np.sqrt(rowdot(gu, gu))
    nv = np.sqrt(rowdot(gv, gv))
    duv = rowdot(gu, gv)
    lhs = _pow_mag(nu, p - 2.0) * (
        p * v ** (p - 1.0) * duv / fv - fd * v ** p * nu ** 2 / (fv * fv)
    )
    rhs = (p - 1.0) ** (p - 1.0) * fv ** (p - 2.0) / fd ** (p - 1.0) * nv ** p
    return lhs, rhs


@maybe_njit
def tirani_q11_sides(u, v, gu, gv, p, q, fv, fd):
    """q-operator variant of the general-denominator form."""
    nu = np.sqrt(rowdot(gu, gu))
    nv = np.sqrt(rowdot(gv, gv))
    duv = rowdot(gu, gv)
    lhs = _pow_mag(nu, q - 2.0) * (
        p * v ** (p - 1.0) * duv / fv - fd * v ** p * nu ** 2 / (fv * fv)
    )
    rhs = (
        (q - 1.0) ** (q - 1.0)
        * fv ** (q - 2.0)
        / fd ** (q - 1.0)
        * (p / q) ** q
        * v ** (p - q)
        * nv ** q
    )
    return lhs, rhs


@maybe_njit
def _tirani_q_lhs(u, v, gu, gv, p, q):
    nu = np.sqrt(rowdot(gu, gu))
    duv = rowdot(gu, gv)
    r = v / u
    return _pow_mag(nu, q - 2.0) * (p * r ** (p - 1.0) * duv - (p - 1.0) * r ** p * nu ** 2)


@maybe_njit
def tirani_q12_sides(u, v, gu, gv, p, q):
    """Power-function instance of the q-operator variant."""
    nv = np.sqrt(rowdot(gv, gv))
    lhs = _tirani_q_lhs(u, v, gu, gv, p, q)
    coef = ((q - 1.0) / (p - 1.0)) ** (q - 1.0) * (p / q) ** q
    rhs = coef * (v / u) ** (p - q) * nv ** q
    return lhs, rhs


@maybe_njit
def tirani_q13_sides(u, v, gu, gv, p, q):
    """Young-split majorant of the q12 right-hand side (requires q < p)."""
    nv = np.sqrt(rowdot(gv, gv))
    lhs = _tirani_q_lhs(u, v, gu, gv, p, q)
    coef = ((q - 1.0) / (p - 1.0)) ** (q - 1.0) * (p / q) ** q
    rhs = coef * (((p - q) / p) * (v / u) ** p + (q / p) * nv ** p)
    return lhs, rhs


@maybe_njit
def bm_sides(u, v, gu, gv, p, q, alpha, beta, C):
    """Two-term denominator alpha*u^(p-1) + beta*u^(q-1), both operators."""
    nu = np.sqrt(rowdot(gu, gu))
    nv = np.sqrt(rowdot(gv, gv))
    duv = rowdot(gu, gv)
    den = alpha * u ** (p - 1.0) + beta * u ** (q - 1.0)
    dden = alpha * (p - 1.0) * u ** (p - 2.0) + beta * (q - 1.0) * u ** (q - 2.0)
    bracket = p * v ** (p - 1.0) * duv / den - dden * v ** p * nu ** 2 / (den * den)
    lhs1 = _pow_mag(nu, p - 2.0) * bracket
    rhs1 = nv ** p / (alpha * C)
    lhs2 = _pow_mag(nu, q - 2.0) * bracket
    rhs2 = (p / q) ** q * v ** (p - q) * nv ** q / beta
    return lhs1, rhs1, lhs2, rhs2
