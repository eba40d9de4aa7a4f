"""Generic path tracking on hand-built homotopies with known answers."""
from __future__ import annotations

import numpy as np
import pytest

from waringvec.homotopy.tracker import PathResult, TrackerOptions, track


def _scalar_homotopy(c0, c1):
    # H(u, t) = u^2 - ((1-t) c0 + t c1)
    def hfun(u, t):
        return u * u - ((1 - t) * c0 + t * c1)

    def jfun(u, t):
        return np.diag(2 * u)

    def tfun(u, t):
        return np.full_like(u, c0 - c1)

    return hfun, jfun, tfun


def test_tracks_square_root_continuation():
    c0, c1 = 1.0 + 0j, 4.0 + 3.0j
    hfun, jfun, tfun = _scalar_homotopy(c0, c1)
    res = track(hfun, jfun, tfun, np.array([1.0 + 0j]))
    assert res.ok and res.t == 1.0
    assert res.u[0] ** 2 == pytest.approx(c1, rel=1e-11)
    # the branch through -1 lands on the other square root
    res2 = track(hfun, jfun, tfun, np.array([-1.0 + 0j]))
    assert res2.ok
    assert res2.u[0] == pytest.approx(-res.u[0], rel=1e-9)


def test_final_point_is_sharpened():
    hfun, jfun, tfun = _scalar_homotopy(2.0 + 0j, 5.0 - 2.0j)
    res = track(hfun, jfun, tfun, np.array([np.sqrt(2) + 0j]))
    assert res.ok
    assert abs(hfun(res.u, 1.0)[0]) < 1e-12


def test_divergence_is_detected():
    # u(t) = 1 / (1 - t) blows up at the endpoint
    def hfun(u, t):
        return (1 - t) * u - 1.0

    def jfun(u, t):
        return np.array([[(1 - t) + 0j]])

    def tfun(u, t):
        return -u

    res = track(hfun, jfun, tfun, np.array([1.0 + 0j]))
    assert res.status == "diverged"
    assert res.u is None


def test_unavoidable_collision_hits_min_step():
    # solutions +-(0.5 - t) collide at t = 0.5 for every path
    def hfun(u, t):
        return u * u - (0.5 - t) ** 2

    def jfun(u, t):
        return np.diag(2 * u)

    def tfun(u, t):
        return np.full_like(u, 2 * (0.5 - t))

    res = track(hfun, jfun, tfun, np.array([0.5 + 0j]))
    assert res.status in ("min_step", "max_steps")
    assert not res.ok
    assert res.t < 1.0


def test_max_steps_budget():
    hfun, jfun, tfun = _scalar_homotopy(1.0 + 0j, 2.0 + 1.0j)
    res = track(hfun, jfun, tfun, np.array([1.0 + 0j]),
                TrackerOptions(initial_step=1e-6, min_step=1e-7, max_step=1e-6,
                               growth_factor=1.0 + 1e-12, max_steps=50))
    assert res.status == "max_steps"
    assert res.steps == 50


def test_random_phase_avoids_real_collision():
    # straight segment from c0=1 to c1=-1 passes through 0, where the two
    # square roots collide; a random phase factor on the start value's
    # homotopy bends the parameter path off the singularity.  This is the
    # reason every tracked segment draws a random gamma.
    fail_fast = TrackerOptions(min_step=1e-5)
    failures_straight = 0
    successes_bent = 0
    trials = 30

    def make(g):
        def hfun(u, t):
            w = (1 - t) * g + t
            return u * u - ((1 - t) * g * 1.0 + t * (-1.0)) / w

        def jfun(u, t):
            return np.diag(2 * u)

        def tfun(u, t):
            w = (1 - t) * g + t
            return np.full_like(u, -(g * 1.0 - (-1.0)) * g / w ** 2)

        return hfun, jfun, tfun

    for s in range(trials):
        rng = np.random.default_rng(s)
        gamma = np.exp(2j * np.pi * rng.uniform())
        res = track(*make(gamma), np.array([1.0 + 0j]))
        if res.ok and abs(res.u[0] ** 2 - (-1.0)) < 1e-9:
            successes_bent += 1
        res_straight = track(*make(1.0), np.array([1.0 + 0j]), fail_fast)
        if not res_straight.ok:
            failures_straight += 1
    assert successes_bent == trials
    assert failures_straight == trials   # the unbent path always pinches


def test_options_validation():
    with pytest.raises(ValueError):
        TrackerOptions(initial_step=0.5, max_step=0.1)
    with pytest.raises(ValueError):
        TrackerOptions(min_step=0.0)
    with pytest.raises(ValueError):
        TrackerOptions(newton_iters=0)


def test_path_result_ok_property():
    assert PathResult("success", np.zeros(1), 1.0, 3).ok
    assert not PathResult("min_step", None, 0.4, 9).ok
