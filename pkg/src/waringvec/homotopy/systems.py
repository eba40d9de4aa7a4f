"""The square polynomial system behind simultaneous Waring decomposition.

For a perfect case with k summands, the unknowns are, per summand i, the
affine-chart coordinates of the linear form ell_i = x0 + l_1^i x_1 + ... +
l_n^i x_n followed by the component coefficients lambda_i^1, ..., lambda_i^r:

    u = [ l_1^1..l_n^1, lambda_1^1..lambda_1^r,  l_1^2.., ... ]      (k blocks)

The residual map stacks, component by component and monomial by monomial in
graded-lex order, the coefficients of sum_i lambda_i^j ell_i^{a_j} - f_j.
Since the parameters p (the coefficients of f) enter affinely, F(u; p) =
phi(u) - p, and parameter homotopies have constant dF/dp = -I.

Parameter segments use the gamma trick in normalized form

    q(t) = ((1-t) gamma p0 + t p1) / ((1-t) gamma + t)

which starts exactly at p0, ends exactly at p1, and for random unit-modulus
gamma avoids the discriminant (a cone, so scaling a parameter vector does
not change solvability, and the scalar path (1-t)gamma + t stays away from
the real degenerations a straight segment can hit).
"""
from __future__ import annotations

import threading
from dataclasses import dataclass

import numpy as np

from .. import rand
from ..combinatorics import CaseSpec
from ..decomposition import WaringDecomposition
from ..errors import DegenerateCaseError
from ..polycore import PolyVector, basis_size, powers_of_linear_rows, _shift_table
from .tracker import PathResult, TrackerOptions, track

__all__ = ["SquareSystem", "build_square_system", "generate_startpoint",
           "ParameterSegment", "track_path"]

_COND_LIMIT = 1e8
_STARTPOINT_ATTEMPTS = 10


class SquareSystem:
    """Residual and Jacobian evaluators for one perfect case."""

    def __init__(self, case: CaseSpec):
        if case.k is None:
            raise ValueError(f"case {case.degrees} with n={case.n} is not perfect")
        self.case = case
        self.k = case.k
        self.n = case.n
        self.r = case.r
        self.size = self.k * (self.r + self.n)
        self.block = self.n + self.r
        m = case.num_vars
        self._sizes = [basis_size(a, m) for a in case.degrees]
        self._offs = np.concatenate([[0], np.cumsum(self._sizes)]).astype(int)
        # x_h shift tables per component, h = 1..n
        self._shifts = [[np.asarray(_shift_table(a - 1, h, m))
                         for h in range(1, m)] for a in case.degrees]
        # one-slot power cache: Newton evaluates residual and Jacobian at the
        # same point, and the linear-form powers are the shared expensive part.
        # Thread-local so concurrent paths stay independent.
        self._tls = threading.local()

    def _powers(self, u: np.ndarray, ells: np.ndarray, degree: int) -> np.ndarray:
        tls = self._tls
        if getattr(tls, "u", None) is None or not np.array_equal(tls.u, u):
            tls.u = u.copy()
            tls.pows = {}
        P = tls.pows.get(degree)
        if P is None:
            P = powers_of_linear_rows(ells, degree)
            tls.pows[degree] = P
        return P

    # -- unknown layout ------------------------------------------------------

    def unpack(self, u: np.ndarray):
        """(ells, lams): chart linear forms (k, n+1) with first column 1,
        and coefficients (k, r)."""
        B = np.asarray(u, dtype=np.complex128).reshape(self.k, self.block)
        ells = np.concatenate([np.ones((self.k, 1)), B[:, :self.n]], axis=1)
        return ells, B[:, self.n:]

    def pack(self, ells: np.ndarray, lams: np.ndarray) -> np.ndarray:
        """Inverse of unpack; rescales forms into the x0 = 1 chart."""
        ells = np.asarray(ells, dtype=np.complex128)
        lams = np.asarray(lams, dtype=np.complex128).copy()
        lead = ells[:, 0]
        if np.any(np.abs(lead) < 1e-12 * np.max(np.abs(ells), axis=1)):
            raise ValueError("a form has (numerically) zero x0 coefficient; "
                             "chart does not apply")
        scaled = ells / lead[:, None]
        degs = np.array(self.case.degrees)
        lams *= lead[:, None] ** degs[None, :]
        return np.concatenate([scaled[:, 1:], lams], axis=1).ravel()

    # -- evaluators ----------------------------------------------------------

    def phi(self, u: np.ndarray) -> np.ndarray:
        """Coefficient vector of (sum_i lambda_i^j ell_i^{a_j})_j."""
        u = np.asarray(u, dtype=np.complex128)
        ells, lams = self.unpack(u)
        out = np.empty(self.size, dtype=np.complex128)
        for j, a in enumerate(self.case.degrees):
            P = self._powers(u, ells, a)
            out[self._offs[j]:self._offs[j + 1]] = lams[:, j] @ P
        return out

    def residual(self, u: np.ndarray, p: np.ndarray) -> np.ndarray:
        return self.phi(u) - np.asarray(p, dtype=np.complex128)

    def jacobian(self, u: np.ndarray) -> np.ndarray:
        """d phi / du, block column order matching the unknown layout."""
        u = np.asarray(u, dtype=np.complex128)
        ells, lams = self.unpack(u)
        J = np.zeros((self.size, self.size), dtype=np.complex128)
        for j, a in enumerate(self.case.degrees):
            rows = slice(self._offs[j], self._offs[j + 1])
            P = self._powers(u, ells, a)
            P1 = self._powers(u, ells, a - 1)
            for i in range(self.k):
                base = i * self.block
                for h in range(self.n):
                    col = np.zeros(self._sizes[j], dtype=np.complex128)
                    col[self._shifts[j][h]] = P1[i]
                    J[rows, base + h] = a * lams[i, j] * col
                J[rows, base + self.n + j] = P[i]
        return J

    # -- conversions ---------------------------------------------------------

    def poly_vector(self, p: np.ndarray) -> PolyVector:
        return PolyVector.from_concat(self.case.degrees, self.case.num_vars, p)

    def decomposition(self, u: np.ndarray) -> WaringDecomposition:
        ells, lams = self.unpack(u)
        return WaringDecomposition(self.case.degrees, ells, lams)


def build_square_system(case: CaseSpec) -> SquareSystem:
    return SquareSystem(case)


def generate_startpoint(system: SquareSystem | CaseSpec, seed: int = 0):
    """Random solved instance: returns (parameters, unknown vector).

    Draws the chart coordinates and coefficients with independent standard
    complex Gaussian entries and takes p = phi(u), so F(u; p) = 0 exactly by
    construction.  Draws with an ill-conditioned Jacobian (condition number
    above 1e8) are rejected; ten rejections in a row mean the case has no
    well-posed square system (typically a defective case).
    """
    sys = system if isinstance(system, SquareSystem) else SquareSystem(system)
    for attempt in range(_STARTPOINT_ATTEMPTS):
        rng = rand.rng_for(seed, rand.STARTPOINT, attempt)
        u = rand.crandn(rng, sys.size)
        J = sys.jacobian(u)
        s = np.linalg.svd(J, compute_uv=False)
        if s[-1] > 0 and s[0] / s[-1] <= _COND_LIMIT:
            return sys.phi(u), u
    raise DegenerateCaseError(
        f"degenerate case: {_STARTPOINT_ATTEMPTS} random startpoints in a row "
        f"had Jacobian condition number > {_COND_LIMIT:.0e} "
        f"(n={sys.case.n}, degrees={sys.case.degrees}); "
        "the case is likely defective")


@dataclass(frozen=True)
class ParameterSegment:
    """The normalized gamma-trick segment between two parameter vectors."""

    p0: np.ndarray
    p1: np.ndarray
    gamma: complex

    def at(self, t: float) -> np.ndarray:
        if t == 0.0:
            return self.p0      # exact: the tracked start must solve H(., 0)
        if t == 1.0:
            return self.p1
        c = (1.0 - t) * self.gamma + t
        return ((1.0 - t) * self.gamma * self.p0 + t * self.p1) / c

    def velocity(self, t: float) -> np.ndarray:
        c = (1.0 - t) * self.gamma + t
        num = (1.0 - t) * self.gamma * self.p0 + t * self.p1
        dnum = self.p1 - self.gamma * self.p0
        dc = 1.0 - self.gamma
        return (dnum * c - num * dc) / (c * c)


def track_path(system: SquareSystem, start_params, target_params, start_solution,
               options: TrackerOptions | None = None, *,
               gamma: complex | None = None,
               rng: np.random.Generator | None = None) -> PathResult:
    """Track one solution from start parameters to target parameters.

    gamma defaults to a random point on the unit circle drawn from `rng`
    (callers that need determinism pass gamma explicitly or hand over a
    dedicated stream).
    """
    p0 = np.asarray(start_params, dtype=np.complex128)
    p1 = np.asarray(target_params, dtype=np.complex128)
    u0 = np.asarray(start_solution, dtype=np.complex128)
    startres = np.max(np.abs(system.residual(u0, p0)))
    if startres > 1e-9:
        raise ValueError(f"start solution does not solve the start system "
                         f"(residual {startres:.2e})")
    if gamma is None:
        g = rng if rng is not None else np.random.default_rng()
        gamma = complex(np.exp(2j * np.pi * g.uniform()))
    seg = ParameterSegment(p0, p1, complex(gamma))

    def hfun(u, t):
        return system.residual(u, seg.at(t))

    def jfun(u, t):
        return system.jacobian(u)

    def tfun(u, t):
        return -seg.velocity(t)

    return track(hfun, jfun, tfun, u0, options)
