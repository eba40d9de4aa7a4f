"""Numerical rank decisions shared across the package.

Rank is read off the singular values after equilibration: values above
rel_tol times the largest singular value count.  The gap between the last
counted and first discarded singular value measures how clear-cut the
decision was; callers treat gaps under 1e2 as ambiguous and retry with
fresh random data.
"""
from __future__ import annotations

import numpy as np

RANK_REL_TOL = 1e-10
GAP_AMBIGUOUS = 1e2
GAP_CLEAR = 1e4


def equilibrate_rows(M: np.ndarray) -> np.ndarray:
    """Scale each nonzero row to unit Euclidean norm."""
    norms = np.linalg.norm(M, axis=1)
    safe = np.where(norms > 0, norms, 1.0)
    return M / safe[:, None]


def equilibrate_cols(M: np.ndarray) -> np.ndarray:
    norms = np.linalg.norm(M, axis=0)
    safe = np.where(norms > 0, norms, 1.0)
    return M / safe[None, :]


def svd_rank(M: np.ndarray, rel_tol: float = RANK_REL_TOL):
    """Full SVD together with the numerical rank and the rank-boundary gap.

    Returns (U, s, Vh, rank, gap).  gap is infinite when every singular
    value counts (the boundary falls outside the spectrum).
    """
    if M.size == 0:
        m, n = M.shape
        return np.eye(m), np.zeros(0), np.eye(n), 0, np.inf
    U, s, Vh = np.linalg.svd(M)
    if s[0] == 0.0:
        return U, s, Vh, 0, np.inf
    rank = int(np.sum(s > rel_tol * s[0]))
    if 0 < rank < s.size and s[rank] > 0:
        gap = float(s[rank - 1] / s[rank])
    else:
        gap = np.inf
    return U, s, Vh, rank, gap


def numerical_rank(M: np.ndarray, rel_tol: float = RANK_REL_TOL):
    """(rank, gap) of a matrix, rows equilibrated first."""
    _, _, _, rank, gap = svd_rank(equilibrate_rows(np.asarray(M)), rel_tol)
    return rank, gap
