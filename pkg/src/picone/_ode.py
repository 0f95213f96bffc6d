"""Radial shooting integrators for the r-Laplacian and two-operator ODEs.

Both problems are integrated in flux form: w = r^(N-1) Phi(u') with Phi
the (possibly two-term) flux nonlinearity, so the singular coefficient
|u'|^(r-2) never appears.  u' is recovered by inverting Phi, which is
strictly increasing and odd.  Integration is classical RK4 on a uniform
grid, started a step off the center with the leading asymptotic term
(the r^(N-1) factor vanishes at the origin).

These loops dominate the runtime of eigenvalue bisection and mu-sweeps;
they compile under numba unless PICONE_NO_NUMBA is set.
"""

import numpy as np

from ._accel import maybe_njit

#: offset from the coordinate singularity at the center, relative to R
CENTER_OFFSET = 1e-6


@maybe_njit
def _sgnpow(x, e):
    if x > 0.0:
        return x ** e
    if x < 0.0:
        return -((-x) ** e)
    return 0.0


@maybe_njit
def _pinv(y, rexp):
    # inverse of t -> |t|^(rexp-2) t
    return _sgnpow(y, 1.0 / (rexp - 1.0))


@maybe_njit
def flux_invert_kernel(y, p, q, cp):
    """Unique t with cp*|t|^(p-2)t + |t|^(q-2)t = y (safeguarded Newton)."""
    if y == 0.0:
        return 0.0
    s = 1.0 if y > 0.0 else -1.0
    w = abs(y)
    if cp == 0.0:
        return s * w ** (1.0 / (q - 1.0))
    # bracket: each monotone term alone bounds the root
    hi = w ** (1.0 / (q - 1.0))
    other = (w / cp) ** (1.0 / (p - 1.0))
    if other < hi:
        hi = other
    lo = (w / (cp + 1.0)) ** (1.0 / (p - 1.0))
    other = (w / (cp + 1.0)) ** (1.0 / (q - 1.0))
    if other < lo:
        lo = other
    t = 0.5 * (lo + hi)
    for _ in range(100):
        ft = cp * t ** (p - 1.0) + t ** (q - 1.0) - w
        if ft > 0.0:
            hi = t
        else:
            lo = t
        dft = cp * (p - 1.0) * t ** (p - 2.0) + (q - 1.0) * t ** (q - 2.0)
        t_new = t - ft / dft
        if not (lo < t_new < hi):
            t_new = 0.5 * (lo + hi)
        if abs(ft) <= 1e-15 * w and hi - lo <= 1e-14 * hi:
            t = t_new
            break
        t = t_new
    return s * t


@maybe_njit
def eigen_residual(rexp, N, lam, R, n):
    """Shoot the r-Laplacian eigen-ODE from the center with u(0) = 1.

    Returns u(R) when u stays positive on (0, R); otherwise the signed
    distance -(R - r0)/R of the first zero r0 to the boundary.
    """
    h0 = CENTER_OFFSET * R
    c = (lam / N) ** (1.0 / (rexp - 1.0))
    kappa = rexp / (rexp - 1.0)
    u = 1.0 - c * h0 ** kappa / kappa
    w = -lam * h0 ** N / N
    r = h0
    dr = (R - h0) / n
    for _ in range(n):
        u_prev = u
        r_prev = r
        # RK4 on (u, w)
        k1u = _pinv(w / r ** (N - 1.0), rexp)
        k1w = -lam * r ** (N - 1.0) * _sgnpow(u, rexp - 1.0)
        r2 = r + 0.5 * dr
        k2u = _pinv((w + 0.5 * dr * k1w) / r2 ** (N - 1.0), rexp)
        k2w = -lam * r2 ** (N - 1.0) * _sgnpow(u + 0.5 * dr * k1u, rexp - 1.0)
        k3u = _pinv((w + 0.5 * dr * k2w) / r2 ** (N - 1.0), rexp)
        k3w = -lam * r2 ** (N - 1.0) * _sgnpow(u + 0.5 * dr * k2u, rexp - 1.0)
        r3 = r + dr
        k4u = _pinv((w + dr * k3w) / r3 ** (N - 1.0), rexp)
        k4w = -lam * r3 ** (N - 1.0) * _sgnpow(u + dr * k3u, rexp - 1.0)
        u += dr * (k1u + 2.0 * k2u + 2.0 * k3u + k4u) / 6.0
        w += dr * (k1w + 2.0 * k2w + 2.0 * k3w + k4w) / 6.0
        r += dr
        if u <= 0.0:
            r0 = r_prev + dr * u_prev / (u_prev - u)
            return -(R - r0) / R
    return u


@maybe_njit
def eigen_profile(rexp, N, lam, R, n):
    """Integrate at a fixed lambda and sample (r, u, u') on n+1 nodes."""
    grid = np.empty(n + 1)
    vals = np.empty(n + 1)
    ders = np.empty(n + 1)
    grid[0] = 0.0
    vals[0] = 1.0
    ders[0] = 0.0
    h0 = CENTER_OFFSET * R
    c = (lam / N) ** (1.0 / (rexp - 1.0))
    kappa = rexp / (rexp - 1.0)
    u = 1.0 - c * h0 ** kappa / kappa
    w = -lam * h0 ** N / N
    r = h0
    for k in range(1, n + 1):
        target = k * R / n
        m = 64 if k == 1 else 1
        dr = (target - r) / m
        for _ in range(m):
            k1u = _pinv(w / r ** (N - 1.0), rexp)
            k1w = -lam * r ** (N - 1.0) * _sgnpow(u, rexp - 1.0)
            r2 = r + 0.5 * dr
            k2u = _pinv((w + 0.5 * dr * k1w) / r2 ** (N - 1.0), rexp)
            k2w = -lam * r2 ** (N - 1.0) * _sgnpow(u + 0.5 * dr * k1u, rexp - 1.0)
            k3u = _pinv((w + 0.5 * dr * k2w) / r2 ** (N - 1.0), rexp)
            k3w = -lam * r2 ** (N - 1.0) * _sgnpow(u + 0.5 * dr * k2u, rexp - 1.0)
            r3 = r + dr
            k4u = _pinv((w + dr * k3w) / r3 ** (N - 1.0), rexp)
            k4w = -lam * r3 ** (N - 1.0) * _sgnpow(u + dr * k3u, rexp - 1.0)
            u += dr * (k1u + 2.0 * k2u + 2.0 * k3u + k4u) / 6.0
            w += dr * (k1w + 2.0 * k2w + 2.0 * k3w + k4w) / 6.0
            r += dr
        grid[k] = target
        vals[k] = u
        ders[k] = _pinv(w / target ** (N - 1.0), rexp)
    return grid, vals, ders


@maybe_njit
def pq_shoot(p, q, N, mu, lam1p, a, R, n, cp):
    """Shoot the two-operator ODE with center value a.

    Returns (residual, r0, iters_unused): residual is u(R) when u stays
    positive, else -a*(R - r0)/R with r0 the first zero.
    """
    h0 = CENTER_OFFSET * R
    u = a
    w = -(cp * lam1p * _sgnpow(a, p - 1.0) + mu * _sgnpow(a, q - 1.0)) * h0 ** N / N
    r = h0
    dr = (R - h0) / n
    for _ in range(n):
        u_prev = u
        r_prev = r
        k1u = flux_invert_kernel(w / r ** (N - 1.0), p, q, cp)
        k1w = -r ** (N - 1.0) * (cp * lam1p * _sgnpow(u, p - 1.0) + mu * _sgnpow(u, q - 1.0))
        r2 = r + 0.5 * dr
        u2 = u + 0.5 * dr * k1u
        k2u = flux_invert_kernel((w + 0.5 * dr * k1w) / r2 ** (N - 1.0), p, q, cp)
        k2w = -r2 ** (N - 1.0) * (cp * lam1p * _sgnpow(u2, p - 1.0) + mu * _sgnpow(u2, q - 1.0))
        u3 = u + 0.5 * dr * k2u
        k3u = flux_invert_kernel((w + 0.5 * dr * k2w) / r2 ** (N - 1.0), p, q, cp)
        k3w = -r2 ** (N - 1.0) * (cp * lam1p * _sgnpow(u3, p - 1.0) + mu * _sgnpow(u3, q - 1.0))
        r3 = r + dr
        u4 = u + dr * k3u
        k4u = flux_invert_kernel((w + dr * k3w) / r3 ** (N - 1.0), p, q, cp)
        k4w = -r3 ** (N - 1.0) * (cp * lam1p * _sgnpow(u4, p - 1.0) + mu * _sgnpow(u4, q - 1.0))
        u += dr * (k1u + 2.0 * k2u + 2.0 * k3u + k4u) / 6.0
        w += dr * (k1w + 2.0 * k2w + 2.0 * k3w + k4w) / 6.0
        r += dr
        if u <= 0.0:
            r0 = r_prev + dr * u_prev / (u_prev - u)
            return -a * (R - r0) / R, r0
    return u, R


@maybe_njit
def pq_profile(p, q, N, mu, lam1p, a, R, n, cp):
    """Integrate the two-operator ODE and sample (r, u, u') on n+1 nodes."""
    grid = np.empty(n + 1)
    vals = np.empty(n + 1)
    ders = np.empty(n + 1)
    grid[0] = 0.0
    vals[0] = a
    ders[0] = 0.0
    h0 = CENTER_OFFSET * R
    u = a
    w = -(cp * lam1p * _sgnpow(a, p - 1.0) + mu * _sgnpow(a, q - 1.0)) * h0 ** N / N
    r = h0
    for k in range(1, n + 1):
        target = k * R / n
        m = 64 if k == 1 else 1
        dr = (target - r) / m
        for _ in range(m):
            k1u = flux_invert_kernel(w / r ** (N - 1.0), p, q, cp)
            k1w = -r ** (N - 1.0) * (cp * lam1p * _sgnpow(u, p - 1.0) + mu * _sgnpow(u, q - 1.0))
            r2 = r + 0.5 * dr
            u2 = u + 0.5 * dr * k1u
            k2u = flux_invert_kernel((w + 0.5 * dr * k1w) / r2 ** (N - 1.0), p, q, cp)
            k2w = -r2 ** (N - 1.0) * (cp * lam1p * _sgnpow(u2, p - 1.0) + mu * _sgnpow(u2, q - 1.0))
            u3 = u + 0.5 * dr * k2u
            k3u = flux_invert_kernel((w + 0.5 * dr * k2w) / r2 ** (N - 1.0), p, q, cp)
            k3w = -r2 ** (N - 1.0) * (cp * lam1p * _sgnpow(u3, p - 1.0) + mu * _sgnpow(u3, q - 1.0))
            r3 = r + dr
            u4 = u + dr * k3u
            k4u = flux_invert_kernel((w + dr * k3w) / r3 ** (N - 1.0), p, q, cp)
            k4w = -r3 ** (N - 1.0) * (cp * lam1p * _sgnpow(u4, p - 1.0) + mu * _sgnpow(u4, q - 1.0))
            u += dr * (k1u + 2.0 * k2u + 2.0 * k3u + k4u) / 6.0
            w += dr * (k1w + 2.0 * k2w + 2.0 * k3w + k4w) / 6.0
            r += dr
        grid[k] = target
        vals[k] = u
        ders[k] = flux_invert_kernel(w / target ** (N - 1.0), p, q, cp)
    return grid, vals, ders
