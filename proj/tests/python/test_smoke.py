# Apache License, Version 2.0, refer to LICENSE.txt

import math

import pytest

import tiltpy as tp


def test_restriction_equals_conditioning():
    prior = tp.DiscreteMeasure([1, 2, 3, 4, 5, 6], [1] * 6)
    rep = tp.tilt(prior, tp.restriction_loss([1, 2, 3]))
    assert rep.posterior.weights[:3] == pytest.approx([1 / 3] * 3, abs=1e-12)
    assert rep.posterior.weights[3:] == [0, 0, 0]
    assert rep.log_normalizer == pytest.approx(math.log(0.5), abs=1e-12)


def test_bayes_recovery():
    joint = tp.JointTable(["x0", "x1"], ["y0", "y1"], [[0.1, 0.2], [0.3, 0.4]])
    prior = tp.marginals(joint)[1]
    rep = tp.tilt(prior, tp.self_information_loss(joint, 0))
    exact = tp.conditional_from_joint(joint, 0)
    for a, b in zip(rep.posterior.weights, exact.weights):
        assert a == pytest.approx(b, abs=1e-12)


def test_minimize_matches_tilt_under_kl():
    prior = tp.DiscreteMeasure([0, 1, 2], [0.2, 0.3, 0.5])
    h = tp.tabular_loss({0: 0.5, 1: 1.5, 2: 0.1})
    num = tp.minimize_simplex(prior, h, tp.generator("kl"))
    exact = tp.tilt(prior, h)
    for a, b in zip(num.posterior.weights, exact.posterior.weights):
        assert a == pytest.approx(b, abs=1e-8)


def test_constraint_projection():
    prior = tp.DiscreteMeasure([-1, 0, 1], [1, 1, 1])
    rep = tp.kl_constraint_project(prior, lambda y: y, 0.5)
    w = rep.posterior.weights
    assert -w[0] + w[2] == pytest.approx(0.5, abs=1e-10)
    assert rep.multiplier == pytest.approx(0.834115, abs=1e-5)


def test_coherence_and_counterexample():
    out = tp.search_counterexample(tp.generator("kl"), 100, 0)
    assert out.result.gap <= 1e-8
    out = tp.search_counterexample(tp.generator("chi2"), 100, 0)
    assert out.result.gap > 1e-3


def test_grid_tilt_variance():
    n, lo, hi = 1001, -8.0, 8.0
    dx = (hi - lo) / n
    dens = [
        math.exp(-0.5 * (lo + (i + 0.5) * dx) ** 2) for i in range(n)
    ]
    rep = tp.tilt_grid(tp.GridMeasure(lo, hi, dens), tp.quadratic_loss(0.5))
    disc = rep.posterior.to_discrete()
    pts, w = disc.points, disc.weights
    mean = sum(p * wi for p, wi in zip(pts, w))
    var = sum((p - mean) ** 2 * wi for p, wi in zip(pts, w))
    assert var == pytest.approx(0.5, abs=2e-3)


def test_errors_surface_as_exceptions():
    with pytest.raises(tp.TiltError):
        tp.DiscreteMeasure([0, 1], [1.0, -0.5])
    prior = tp.DiscreteMeasure([0, 1], [1, 1])
    with pytest.raises(tp.TiltError):
        tp.tilt(prior, tp.restriction_loss([9]))
