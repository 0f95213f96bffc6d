"""Tests for the admissible exponent region: the scalar functions f and g,
global minimization, membership, thresholds, gaps, and counterexamples."""

import csv
import json
import math

import numpy as np
import pytest

from picone import (
    Counterexample,
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
from picone.errors import BadRange, NegativeS, NotOutsideRegion
from picone.region import gap_report, write_grid_csv


# ---------------------------------------------------------------------------
# g and f point values
# ---------------------------------------------------------------------------


def g_ref(s, p, q):
    """Direct transliteration oracle for g."""
    sp1 = 0.0 if s == 0.0 else s ** (p - 1.0)
    return (q - 1.0) * s**p + q * sp1 - (p - q) * s + (q - p + 1.0)


def f_ref(s, p, q):
    sp1 = 0.0 if s == 0.0 else s ** (p - 1.0)
    return (q - 1.0) * s**p - q * sp1 + (p - q) * s + (q - p + 1.0)


def test_g_known_negative_value():
    assert g_eval(60.0, 1.3, 1.05) == pytest.approx(-0.417508, abs=1e-5)


def test_g_at_zero_is_constant_term():
    for p, q in [(1.3, 1.05), (2.5, 1.6), (3.5, 2.0)]:
        assert g_eval(0.0, p, q) == pytest.approx(q - p + 1.0, abs=1e-15)


def test_g_quadratic_case():
    # at p = 2 the function collapses to (q-1)(s+1)^2
    q = 1.5
    for s in [0.0, 0.5, 1.0, 3.0, 60.0]:
        assert g_eval(s, 2.0, q) == pytest.approx((q - 1.0) * (s + 1.0) ** 2, rel=1e-13)
    assert g_eval(1.0, 2.0, 1.5) == pytest.approx(2.0, abs=1e-14)


def test_g_matches_transliteration_oracle():
    rng = np.random.default_rng(7)
    for _ in range(200):
        s = float(10.0 ** rng.uniform(-3, 3))
        p = float(rng.uniform(1.01, 5.0))
        q = float(rng.uniform(1.01, 4.0))
        assert g_eval(s, p, q) == pytest.approx(g_ref(s, p, q), rel=1e-12, abs=1e-12)
        assert f_eval(s, p, q) == pytest.approx(f_ref(s, p, q), rel=1e-12, abs=1e-12)


def test_negative_s_rejected():
    with pytest.raises(NegativeS):
        g_eval(-0.1, 2.0, 1.5)
    with pytest.raises(NegativeS):
        f_eval(-1.0, 2.0, 1.5)


def test_f_vanishes_to_second_order_at_one():
    for p, q in [(1.3, 1.05), (2.5, 1.6), (3.0, 2.0), (1.7, 2.4)]:
        assert f_eval(1.0, p, q) == pytest.approx(0.0, abs=1e-13)
        h = 1e-6
        central = (f_eval(1.0 + h, p, q) - f_eval(1.0 - h, p, q)) / (2.0 * h)
        analytic = p * (q - 1.0) - q * (p - 1.0) + (p - q)  # = 0 identically
        assert analytic == pytest.approx(0.0, abs=1e-12)
        assert central == pytest.approx(0.0, abs=1e-6)


def test_f_point_values():
    assert f_eval(0.0, 3.0, 2.0) == pytest.approx(0.0, abs=1e-15)  # q - p + 1 = 0
    assert f_eval(0.0, 2.5, 1.6) == pytest.approx(0.1, abs=1e-13)
    assert f_eval(2.0, 3.0, 2.0) == pytest.approx(2.0, abs=1e-12)


# ---------------------------------------------------------------------------
# global minimization of g
# ---------------------------------------------------------------------------


def dense_min_oracle(p, q, n=200_000, s_hi=1e4):
    """Dense log-spaced grid scan plus golden-section refinement."""
    s = np.concatenate(([0.0], np.logspace(-6, np.log10(s_hi), n)))
    sp1 = np.where(s > 0.0, s ** (p - 1.0), 0.0)
    vals = (q - 1.0) * s**p + q * sp1 - (p - q) * s + (q - p + 1.0)
    i = int(np.argmin(vals))
    if i == 0 or i == len(s) - 1:
        return float(s[i]), float(vals[i])
    lo, hi = s[i - 1], s[i + 1]
    invphi = (math.sqrt(5.0) - 1.0) / 2.0
    a, b = lo, hi
    c, d = b - invphi * (b - a), a + invphi * (b - a)
    fc, fd = g_ref(c, p, q), g_ref(d, p, q)
    for _ in range(200):
        if fc < fd:
            b, d, fd = d, c, fc
            c = b - invphi * (b - a)
            fc = g_ref(c, p, q)
        else:
            a, c, fc = c, d, fd
            d = a + invphi * (b - a)
            fd = g_ref(d, p, q)
        if b - a < 1e-13 * max(1.0, b):
            break
    s_star = 0.5 * (a + b)
    g_star = g_ref(s_star, p, q)
    return (s_star, g_star) if g_star < vals[i] else (float(s[i]), float(vals[i]))


def test_g_global_min_closed_forms():
    s_star, g_min = g_global_min(2.0, 1.5)
    assert s_star == pytest.approx(0.0, abs=1e-12)
    assert g_min == pytest.approx(0.5, abs=1e-13)

    _, g_min = g_global_min(1.3, 1.05)
    assert g_min < -0.41  # at least as deep as the known interior value

    _, g_min = g_global_min(3.5, 2.0)
    assert g_min <= g_eval(0.0, 3.5, 2.0) + 1e-15
    assert g_min < -0.49


def test_g_global_min_against_dense_oracle():
    p_vals = np.linspace(1.05, 4.0, 15)
    q_vals = np.linspace(1.02, 3.0, 15)
    for p in p_vals:
        for q in q_vals:
            _, g_min = g_global_min(float(p), float(q))
            _, g_oracle = dense_min_oracle(float(p), float(q))
            assert g_min == pytest.approx(g_oracle, abs=1e-8), (p, q)


def test_g_min_is_a_lower_bound_on_samples():
    rng = np.random.default_rng(3)
    for _ in range(50):
        p = float(rng.uniform(1.05, 4.5))
        q = float(rng.uniform(1.02, 3.5))
        _, g_min = g_global_min(p, q)
        s = 10.0 ** rng.uniform(-4, 4, 500)
        vals = [g_ref(float(x), p, q) for x in s]
        assert g_min <= min(vals) + 1e-10


# ---------------------------------------------------------------------------
# membership, thresholds, gap
# ---------------------------------------------------------------------------


def test_membership_facts():
    assert in_I(2.0, 1.2)
    assert not in_I(1.3, 1.05)
    assert in_I(1.8, 2.0)  # p <= q is always inside


def test_p_tilde_bounds_and_flip():
    for q in [1.2, 1.5, 2.0, 2.5]:
        pt = p_tilde(q)
        assert max(2.0, q) < pt < q + 1.0
        assert in_I(pt - 1e-6, q)
        assert not in_I(pt + 1e-6, q)


def test_p_tilde_monotone():
    qs = [1.2, 1.5, 2.0, 2.5]
    pts = [p_tilde(q) for q in qs]
    assert all(a <= b + 1e-9 for a, b in zip(pts, pts[1:]))


def test_p_tilde_specific_ranges():
    assert 2.0 < p_tilde(2.0) < 3.0
    assert 2.0 < p_tilde(1.5) < 2.5


def test_q_tilde_value():
    qt = q_tilde()
    assert qt == pytest.approx(1.051634, abs=1e-3)


def test_gap_structure():
    g105 = gap(1.05)
    assert g105 is not None
    lo, hi = g105
    assert 1.05 < lo < 1.3 < hi < 2.0
    assert not in_I(0.5 * (lo + hi), 1.05)
    assert gap(1.5) is None
    assert gap(2.0) is None


def test_gap_report_json():
    rep = gap_report(1.05)
    data = json.loads(rep.to_json())
    assert data["q"] == 1.05
    assert max(2.0, 1.05) < data["p_tilde"] < 2.05
    assert data["gap"] is not None and len(data["gap"]) == 2
    data2 = json.loads(gap_report(1.5).to_json())
    assert data2["gap"] is None


def test_sufficiency_implies_membership():
    rng = np.random.default_rng(11)
    hits_I = hits_II = 0
    for _ in range(400):
        p = float(rng.uniform(1.01, 3.5))
        q = float(rng.uniform(1.01, 3.0))
        if sufficient_I(p, q):
            hits_I += 1
            assert in_I(p, q), (p, q)
        if sufficient_II(p, q):
            hits_II += 1
            assert in_I(p, q), (p, q)
    assert hits_I > 0 and hits_II > 0


def test_sufficiency_examples():
    assert sufficient_I(1.6, 1.5)
    assert in_I(1.6, 1.5)
    assert sufficient_II(2.2, 1.6)
    # out-of-range inputs are "not applicable", not errors
    assert not sufficient_I(2.5, 1.5)
    assert not sufficient_II(1.5, 1.2)


def test_nesting_in_q():
    p_vals = np.linspace(1.05, 3.5, 40)
    q_pairs = [(1.05, 1.2), (1.2, 1.5), (1.5, 2.0), (2.0, 2.5)]
    for q1, q2 in q_pairs:
        for p in p_vals:
            if in_I(float(p), q1):
                assert in_I(float(p), q2), (p, q1, q2)


# ---------------------------------------------------------------------------
# grid export
# ---------------------------------------------------------------------------


def test_region_grid_qualitative_shape():
    samples = region_grid((1.05, 3.5), (1.05, 2.5), 30)
    assert len(samples) == 900
    for s in samples:
        if s.p <= s.q:
            assert s.in_I, (s.p, s.q)
        if s.p > s.q + 1.0:
            assert not s.in_I, (s.p, s.q)
        if s.suff_I or s.suff_II:
            assert s.in_I, (s.p, s.q)
        assert s.in_I == (s.g_min >= -1e-12)


def test_region_grid_p_equal_two_column():
    for q in np.linspace(1.05, 3.0, 25):
        assert in_I(2.0, float(q))


def test_region_grid_bad_ranges():
    with pytest.raises(BadRange):
        region_grid((0.5, 3.0), (1.1, 2.0), 10)
    with pytest.raises(BadRange):
        region_grid((1.1, 3.0), (1.1, 2.0), 1)
    with pytest.raises(BadRange):
        region_grid((1.1, 7.0), (1.1, 2.0), 10)


def test_grid_csv_roundtrip(tmp_path):
    samples = region_grid((1.1, 2.5), (1.1, 2.0), 5)
    path = tmp_path / "grid.csv"
    write_grid_csv(samples, path)
    with open(path, newline="") as fh:
        rows = list(csv.reader(fh))
    assert rows[0] == ["p", "q", "g_min", "s_argmin", "in_I", "suff_I", "suff_II"]
    assert len(rows) == 26
    first = rows[1]
    assert float(first[0]) == samples[0].p
    assert float(first[2]) == samples[0].g_min  # repr round-trips exactly


# ---------------------------------------------------------------------------
# counterexamples
# ---------------------------------------------------------------------------


def test_counterexample_interior_branch():
    cex = counterexample(1.3, 1.05)
    assert isinstance(cex, Counterexample)
    assert cex.slack < -1e-12
    assert cex.s0 > 0.0
    assert g_eval(cex.s0, 1.3, 1.05) < 0.0
    # the construction takes a tilted pair with slope ratio s0
    assert cex.point.grad_u[0] == pytest.approx(-cex.s0)
    assert cex.point.grad_v[0] == pytest.approx(1.0)


def test_counterexample_constant_branch():
    cex = counterexample(3.2, 2.0)
    assert cex.slack < -1e-12
    assert np.all(cex.point.grad_u == 0.0)
    assert np.linalg.norm(cex.point.grad_v) > 0.0


def test_counterexample_rejects_admissible_pairs():
    with pytest.raises(NotOutsideRegion):
        counterexample(2.0, 1.5)


def test_counterexample_json(tmp_path):
    cex = counterexample(1.3, 1.05, dim=3)
    data = json.loads(cex.to_json())
    assert data["slack"] < 0.0
    assert len(data["point"]["grad_u"]) == 3
