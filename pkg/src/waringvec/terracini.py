"""Secant dimensions by random tangent frames.

The variety of rank-one vectors (lambda_1 ell^{a_1}, ..., lambda_r ell^{a_r})
has, at a point with all lambda_j nonzero, the affine tangent space spanned by

    r rows    e_j tensor ell^{a_j}                 (move one coefficient)
    n+1 rows  (lambda_j a_j x_h ell^{a_j - 1})_j   (move the linear form)

These r + n + 1 rows carry one linear relation (substituting x_h -> ell_h in
the second group lands in the span of the first), so a generic frame has rank
r + n.  Stacking the frames of k random points gives the tangent space of the
k-th secant at a generic point; its rank decides defectivity.

The k-th secant is expected to fill dimension min(k (r + n), N); the defect
is the gap between that and the observed rank.  Random points make this a
probabilistic certificate: a full-rank outcome is a proof of nondefectivity
up to floating point, while a rank drop is strong evidence of a defect.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import rand
from .combinatorics import CaseSpec
from .linalg import GAP_AMBIGUOUS, equilibrate_rows, svd_rank
from .polycore import basis_size, powers_of_linear_rows, _shift_table

__all__ = ["tangent_frame", "DefectResult", "secant_defect"]


def tangent_frame(point, lambdas, case: CaseSpec) -> np.ndarray:
    """The (r + n + 1) x N tangent frame at one rank-one point.

    `point` is the coefficient vector of the linear form (length n + 1),
    `lambdas` the r component coefficients.
    """
    point = np.asarray(point, dtype=np.complex128)
    lambdas = np.asarray(lambdas, dtype=np.complex128)
    m = case.num_vars
    degs = case.degrees
    r = case.r
    sizes = [basis_size(a, m) for a in degs]
    offs = np.concatenate([[0], np.cumsum(sizes)])
    N = int(offs[-1])
    rows = np.zeros((r + m, N), dtype=np.complex128)
    for j, a in enumerate(degs):
        pw = powers_of_linear_rows(point[None, :], a)[0]
        rows[j, offs[j]:offs[j + 1]] = pw
        pw1 = powers_of_linear_rows(point[None, :], a - 1)[0]
        for h in range(m):
            idx = _shift_table(a - 1, h, m)
            rows[r + h, offs[j] + idx] += lambdas[j] * a * pw1
    return rows


@dataclass(frozen=True)
class DefectResult:
    k: int
    dim: int
    expected: int
    defect: int
    gap: float
    attempts: int
    status: str  # "ok" or "inconclusive"
    confidence: str = "probabilistic"

    def to_json(self) -> dict:
        gap = self.gap if np.isfinite(self.gap) else None
        return {"k": self.k, "dim": self.dim, "expected": self.expected,
                "defect": self.defect, "gap": gap, "attempts": self.attempts,
                "status": self.status, "confidence": self.confidence}


def secant_defect(case: CaseSpec, k: int, seed: int = 0, retries: int = 3) -> DefectResult:
    """Defect of the k-th secant of the rank-one variety, by random frames.

    Draws k random points, stacks their tangent frames, and compares the
    numerical rank with min(k (r + n), N).  When the singular-value gap at
    the rank boundary is ambiguous the draw is repeated with a fresh stream
    (up to `retries` attempts) before reporting an inconclusive status.
    """
    if k < 1:
        raise ValueError("need k >= 1")
    m = case.num_vars
    N = case.N
    expected = min(k * (case.r + case.n), N)
    last = None
    for attempt in range(retries):
        rng = rand.rng_for(seed, rand.DEFECT, attempt)
        pts = rng.uniform(-1, 1, (k, m)) + 1j * rng.uniform(-1, 1, (k, m))
        lams = rng.uniform(-1, 1, (k, case.r)) + 1j * rng.uniform(-1, 1, (k, case.r))
        stacked = np.vstack([tangent_frame(pts[i], lams[i], case) for i in range(k)])
        _, _, _, rank, gap = svd_rank(equilibrate_rows(stacked))
        result = DefectResult(k, rank, expected, expected - rank, gap, attempt + 1, "ok")
        if gap >= GAP_AMBIGUOUS:
            return result
        last = result
    return DefectResult(last.k, last.dim, last.expected, last.defect, last.gap,
                        last.attempts, "inconclusive")
