"""Intersecting two plane curves by a total-degree homotopy.

Used to cut out base loci: the common zeros in P^2 of two homogeneous
polynomials without common factor.  The curves are moved into a random
unitary coordinate frame, dehomogenized on the chart y2 = 1 (the random
frame keeps all intersection points affine with probability one), and the
resulting square 2x2 system is solved by continuation from the start system
(y0^d1 - 1, y1^d2 - 1), whose d1*d2 solutions are pairs of roots of unity.
"""
from __future__ import annotations

import numpy as np

from .. import rand
from ..polycore import HomogeneousPoly, compose_linear, monomial_basis
from ..decomposition import canonical_point
from .tracker import TrackerOptions, track

__all__ = ["intersect_plane_curves"]

_POINT_DEDUP_TOL = 1e-8


class _AffinePair:
    """Two dehomogenized plane curves with analytic Jacobian."""

    def __init__(self, polys: list[HomogeneousPoly]):
        self.exps = []
        self.coeffs = []
        for p in polys:
            E = np.array(monomial_basis(p.degree, 3), dtype=np.int64)
            self.exps.append(E[:, :2])        # y2 = 1 kills the third exponent
            self.coeffs.append(p.coeffs)

    def value(self, u: np.ndarray) -> np.ndarray:
        out = np.empty(2, dtype=np.complex128)
        for i in range(2):
            E, c = self.exps[i], self.coeffs[i]
            out[i] = np.sum(c * u[0] ** E[:, 0] * u[1] ** E[:, 1])
        return out

    def jacobian(self, u: np.ndarray) -> np.ndarray:
        J = np.empty((2, 2), dtype=np.complex128)
        for i in range(2):
            E, c = self.exps[i], self.coeffs[i]
            for v in range(2):
                e = E[:, v]
                mask = e > 0
                J[i, v] = np.sum(c[mask] * e[mask]
                                 * u[0] ** (E[mask, 0] - (v == 0))
                                 * u[1] ** (E[mask, 1] - (v == 1)))
        return J


def intersect_plane_curves(p1: HomogeneousPoly, p2: HomogeneousPoly,
                           rng: np.random.Generator,
                           options: TrackerOptions | None = None) -> np.ndarray:
    """Isolated common zeros of two plane curves, as projective points.

    Returns an array of shape (num_points, 3); each row is normalized by its
    pivot coordinate (see canonical_point).  An unlucky chart can lose paths
    to divergence or to near-singular intersections, so on a shortfall the
    tracking is repeated in fresh random frames, accumulating distinct
    points, until the Bezout number d1*d2 is reached or the attempts run
    out.  A persistent shortfall is returned as-is; the caller knows the
    expected count.
    """
    if p1.num_vars != 3 or p2.num_vars != 3:
        raise ValueError("plane curves need exactly 3 variables")
    d1, d2 = p1.degree, p2.degree

    def gval(u):
        return np.array([u[0] ** d1 - 1.0, u[1] ** d2 - 1.0])

    def gjac(u):
        return np.array([[d1 * u[0] ** (d1 - 1), 0.0],
                         [0.0, d2 * u[1] ** (d2 - 1)]], dtype=np.complex128)

    points: list[np.ndarray] = []
    for _ in range(3):
        Q = rand.random_unitary(rng, 3)
        pair = _AffinePair([compose_linear(p1, Q), compose_linear(p2, Q)])
        gamma = complex(np.exp(2j * np.pi * rng.uniform()))

        def hfun(u, t):
            return (1.0 - t) * gamma * gval(u) + t * pair.value(u)

        def jfun(u, t):
            return (1.0 - t) * gamma * gjac(u) + t * pair.jacobian(u)

        def tfun(u, t):
            return pair.value(u) - gamma * gval(u)

        for a in range(d1):
            for b in range(d2):
                u0 = np.array([np.exp(2j * np.pi * a / d1),
                               np.exp(2j * np.pi * b / d2)])
                res = track(hfun, jfun, tfun, u0, options)
                if not res.ok:
                    continue
                x = Q @ np.array([res.u[0], res.u[1], 1.0])
                rep, _ = canonical_point(x)
                if not any(np.max(np.abs(rep - q)) <= _POINT_DEDUP_TOL
                           for q in points):
                    points.append(rep)
        if len(points) == d1 * d2:
            break
    return np.array(points) if points else np.zeros((0, 3), dtype=np.complex128)
