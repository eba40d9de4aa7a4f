"""Predictor-corrector path tracking for square polynomial homotopies.

The tracker follows a solution curve u(t) of H(u, t) = 0 from t = 0 to
t = 1.  The predictor integrates the Davidenko equation

    du/dt = -J_u(u, t)^{-1} H_t(u, t)

with one classical Runge-Kutta step; the corrector is plain Newton at the
new t.  Steps halve on corrector failure and grow after a run of successes;
a path ends in success (with the endpoint sharpened by extra Newton
iterations) or in one of the failure tags min_step, max_steps, diverged.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

__all__ = ["TrackerOptions", "PathResult", "track"]


@dataclass(frozen=True)
class TrackerOptions:
    initial_step: float = 0.05
    min_step: float = 1e-7
    max_step: float = 0.1
    newton_iters: int = 3
    newton_tol: float = 1e-11
    growth_after: int = 4
    growth_factor: float = 1.5
    max_steps: int = 10000
    sharpen_tol: float = 1e-13
    divergence: float = 1e8

    def __post_init__(self):
        if not (0 < self.min_step < self.initial_step <= self.max_step):
            raise ValueError("need 0 < min_step < initial_step <= max_step")
        if min(self.newton_iters, self.max_steps) < 1 or self.newton_tol <= 0:
            raise ValueError("iteration limits must be positive")


@dataclass(frozen=True)
class PathResult:
    status: str                 # "success" | "min_step" | "max_steps" | "diverged"
    u: np.ndarray | None
    t: float
    steps: int

    @property
    def ok(self) -> bool:
        return self.status == "success"


def _solve(J, rhs):
    try:
        du = np.linalg.solve(J, rhs)
    except np.linalg.LinAlgError:
        return None
    if not np.all(np.isfinite(du)):
        return None
    return du


def _newton(hfun, jfun, u, t, tol, max_iters):
    """Newton iterations at fixed t; returns (u, converged)."""
    for _ in range(max_iters):
        du = _solve(jfun(u, t), -hfun(u, t))
        if du is None:
            return u, False
        u = u + du
        if np.max(np.abs(du)) <= tol:
            return u, True
    return u, False


def _sharpen(hfun, jfun, u, t, tol, max_iters=12):
    """Polish to `tol` on the update norm; keeps the best iterate on plateau."""
    best = u
    best_norm = np.inf
    for _ in range(max_iters):
        du = _solve(jfun(u, t), -hfun(u, t))
        if du is None:
            break
        u = u + du
        step = float(np.max(np.abs(du)))
        if step < best_norm:
            best, best_norm = u, step
        if step <= tol:
            break
    return best


def track(hfun, jfun, tfun, u0, options: TrackerOptions | None = None) -> PathResult:
    """Track one path of H(u, t) = 0 from (u0, 0) to t = 1.

    hfun(u, t) evaluates H, jfun(u, t) its Jacobian in u, tfun(u, t) its
    derivative in t.  u0 must solve H(., 0).
    """
    opts = options or TrackerOptions()
    u = np.asarray(u0, dtype=np.complex128)
    t = 0.0
    h = opts.initial_step
    streak = 0
    steps = 0

    def velocity(v, s):
        return _solve(jfun(v, s), -tfun(v, s))

    while t < 1.0:
        if steps >= opts.max_steps:
            return PathResult("max_steps", None, t, steps)
        hc = min(h, 1.0 - t)

        # RK4 predictor on the Davidenko field
        ok = True
        k1 = velocity(u, t)
        ok = k1 is not None
        if ok:
            k2 = velocity(u + 0.5 * hc * k1, t + 0.5 * hc)
            ok = k2 is not None
        if ok:
            k3 = velocity(u + 0.5 * hc * k2, t + 0.5 * hc)
            ok = k3 is not None
        if ok:
            k4 = velocity(u + hc * k3, t + hc)
            ok = k4 is not None
        if ok:
            pred = u + (hc / 6.0) * (k1 + 2 * k2 + 2 * k3 + k4)
            unew, ok = _newton(hfun, jfun, pred, t + hc, opts.newton_tol,
                               opts.newton_iters)
            ok = ok and np.all(np.isfinite(unew))

        steps += 1
        if not ok:
            streak = 0
            h *= 0.5
            if h < opts.min_step:
                return PathResult("min_step", None, t, steps)
            continue
        if np.max(np.abs(unew)) > opts.divergence:
            return PathResult("diverged", None, t, steps)

        u, t = unew, t + hc
        streak += 1
        if streak >= opts.growth_after:
            h = min(h * opts.growth_factor, opts.max_step)
            streak = 0

    u = _sharpen(hfun, jfun, u, 1.0, opts.sharpen_tol)
    return PathResult("success", u, 1.0, steps)
