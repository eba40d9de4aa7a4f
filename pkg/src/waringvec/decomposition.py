"""Waring decompositions as values: gauge fixing, comparison, serialization.

A decomposition of a polynomial vector (f_1, ..., f_r) is a set of k linear
forms ell_i and coefficients lambda_i^j with f_j = sum_i lambda_i^j ell_i^{a_j}.
Two decompositions are the same when they agree up to reordering the summands
and rescaling each ell_i (with the matching rescaling absorbed into the
lambdas).  `canonical` quotients out both symmetries so that equality becomes
a coordinatewise comparison.
"""
from __future__ import annotations

import functools
import json
from dataclasses import dataclass

import numpy as np

from .polycore import PolyVector

__all__ = ["canonical_point", "WaringDecomposition"]

_TOL = 1e-7


def canonical_point(c: np.ndarray, tol: float = _TOL):
    """Scale-invariant representative of a nonzero point, plus the divisor used.

    Divides by the coordinate of largest modulus.  When several coordinates
    tie (within relative `tol`), prefers the divisor that puts the argument
    of the first nonzero coordinate of the result in (-pi/2, pi/2]; first
    such candidate wins, falling back to the first candidate.
    """
    c = np.asarray(c, dtype=np.complex128)
    mags = np.abs(c)
    mx = mags.max()
    if mx == 0.0:
        raise ValueError("cannot normalize the zero point")
    candidates = np.nonzero(mags >= mx * (1.0 - tol))[0]
    pivot = int(candidates[0])
    if candidates.size > 1:
        first_nonzero = int(np.nonzero(mags > tol * mx)[0][0])
        for h in candidates:
            lead = c[first_nonzero] / c[h]
            if lead.real > 0 or (lead.real == 0 and lead.imag > 0):
                pivot = int(h)
                break
    scale = c[pivot]
    return c / scale, scale


def _cmp_with_tol(u: np.ndarray, v: np.ndarray, tol: float) -> int:
    for a, b in zip(u, v):
        if a < b - tol:
            return -1
        if a > b + tol:
            return 1
    return 0


@dataclass(frozen=True, eq=False)
class WaringDecomposition:
    """k summands: rows of `forms` are the linear forms, rows of `lambdas`
    the per-component coefficients.  `residual` records the max relative
    reconstruction error against the vector it was computed from."""

    degrees: tuple[int, ...]
    forms: np.ndarray      # (k, num_vars)
    lambdas: np.ndarray    # (k, r)
    residual: float | None = None

    def __post_init__(self):
        F = np.asarray(self.forms, dtype=np.complex128).copy()
        L = np.asarray(self.lambdas, dtype=np.complex128).copy()
        degs = tuple(int(d) for d in self.degrees)
        if F.ndim != 2 or L.ndim != 2 or F.shape[0] != L.shape[0]:
            raise ValueError("forms and lambdas must be 2-d with matching row counts")
        if L.shape[1] != len(degs):
            raise ValueError("lambdas must have one column per degree")
        F.flags.writeable = False
        L.flags.writeable = False
        object.__setattr__(self, "degrees", degs)
        object.__setattr__(self, "forms", F)
        object.__setattr__(self, "lambdas", L)

    @property
    def k(self) -> int:
        return self.forms.shape[0]

    @property
    def num_vars(self) -> int:
        return self.forms.shape[1]

    # -- gauge fixing ------------------------------------------------------

    def canonical(self, tol: float = _TOL) -> "WaringDecomposition":
        """Fix the scaling gauge of every summand and sort the summands.

        Each form is divided by its pivot coordinate (see canonical_point) and
        the divisor's degree-th powers are absorbed into the lambdas; the
        summands are then sorted lexicographically on the interleaved real
        and imaginary parts of the form coordinates (lambdas as tiebreak),
        comparing with tolerance `tol`.
        """
        k = self.k
        F = np.empty_like(self.forms)
        L = np.empty_like(self.lambdas)
        degs = np.array(self.degrees)
        for i in range(k):
            F[i], scale = canonical_point(self.forms[i], tol)
            L[i] = self.lambdas[i] * scale ** degs
        keys = [np.concatenate([
            np.column_stack([F[i].real, F[i].imag]).ravel(),
            np.column_stack([L[i].real, L[i].imag]).ravel()]) for i in range(k)]
        order = sorted(range(k), key=functools.cmp_to_key(
            lambda a, b: _cmp_with_tol(keys[a], keys[b], tol)))
        return WaringDecomposition(self.degrees, F[order], L[order], self.residual)

    # -- reconstruction ----------------------------------------------------

    def reconstruct(self) -> PolyVector:
        return PolyVector.from_summands(self.forms, self.lambdas, self.degrees)

    def residual_against(self, f: PolyVector) -> float:
        """Max over components of the relative coefficient error, sup norms."""
        rec = self.reconstruct()
        worst = 0.0
        for p, q in zip(rec.parts, f.parts):
            scale = max(float(np.max(np.abs(q.coeffs))), 1e-300)
            worst = max(worst, float(np.max(np.abs(p.coeffs - q.coeffs))) / scale)
        return worst

    def with_residual(self, f: PolyVector) -> "WaringDecomposition":
        return WaringDecomposition(self.degrees, self.forms, self.lambdas,
                                   self.residual_against(f))

    # -- comparison --------------------------------------------------------

    def invariant(self, tol: float = _TOL) -> np.ndarray:
        """A permutation-invariant fingerprint of the canonical form, used to
        prefilter comparisons; equal decompositions have fingerprints within
        k * tol coordinatewise."""
        c = self.canonical(tol)
        return np.concatenate([c.forms.sum(axis=0), c.lambdas.sum(axis=0)])

    def same_as(self, other: "WaringDecomposition", tol: float = _TOL) -> bool:
        """Equality up to summand order and per-summand rescaling."""
        if (self.degrees != other.degrees or self.k != other.k
                or self.num_vars != other.num_vars):
            return False
        a, b = self.canonical(tol), other.canonical(tol)
        ka = np.concatenate([a.forms, a.lambdas], axis=1)
        kb = np.concatenate([b.forms, b.lambdas], axis=1)
        # tolerance-safe bipartite match, independent of sort order
        used = np.zeros(self.k, dtype=bool)
        for i in range(self.k):
            diff = np.max(np.abs(kb[:, None, :] - ka[i][None, None, :]), axis=2).ravel()
            diff[used] = np.inf
            j = int(np.argmin(diff))
            if diff[j] > tol:
                return False
            used[j] = True
        return True

    # -- serialization -----------------------------------------------------

    def to_json(self) -> dict:
        def enc(M):
            return [[[float(z.real), float(z.imag)] for z in row] for row in M]
        return {"degrees": list(self.degrees), "forms": enc(self.forms),
                "lambdas": enc(self.lambdas), "residual": self.residual}

    @classmethod
    def from_json(cls, obj: dict) -> "WaringDecomposition":
        def dec(rows):
            return np.array([[complex(re, im) for re, im in row] for row in rows])
        return cls(tuple(obj["degrees"]), dec(obj["forms"]), dec(obj["lambdas"]),
                   obj.get("residual"))

    def save(self, path) -> None:
        with open(path, "w") as fh:
            json.dump(self.to_json(), fh, indent=1)

    @classmethod
    def load(cls, path) -> "WaringDecomposition":
        with open(path) as fh:
            return cls.from_json(json.load(fh))
