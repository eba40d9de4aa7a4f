"""Monodromy loops: discovering and counting decompositions.

Starting from one solved random instance (the base), each loop draws two
auxiliary parameter vectors and tracks every known solution around the
triangle base -> p1 -> p2 -> base.  Permuting the summand blocks of a
solution gives a solution of the same instance, so endpoints are compared
as canonicalized decompositions; genuinely new ones enter the registry and
re-seed later loops.  When no loop has found anything new for `stall`
consecutive rounds, the count has stabilized (a probabilistic statement:
monodromy reaches every decomposition of a generic instance with
probability one, but no certificate of completeness is produced).
"""
from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from .. import rand
from ..combinatorics import CaseSpec
from ..decomposition import WaringDecomposition
from ..errors import DefectiveCaseError, InconclusiveError
from ..polycore import PolyVector
from ..terracini import secant_defect
from .systems import SquareSystem, TrackerOptions, generate_startpoint, track_path

__all__ = ["LoopRecord", "SolutionRegistry", "monodromy_loop",
           "CountResult", "count_decompositions", "decompositions_of"]

_RESIDUAL_LIMIT = 1e-9
_DEDUP_TOL = 1e-7
_GAMMA_RETRIES = 5
DEFAULT_STALL = 15
DEFAULT_BUDGET_LOOPS = 400


@dataclass(frozen=True)
class LoopRecord:
    paths: int
    failures: int
    new: int


class SolutionRegistry:
    """Canonicalized solutions of one base instance, with loop statistics."""

    def __init__(self, system: SquareSystem, base_params: np.ndarray,
                 tol: float = _DEDUP_TOL):
        self.system = system
        self.base_params = np.asarray(base_params, dtype=np.complex128)
        self.tol = tol
        self.unknowns: list[np.ndarray] = []
        self.solutions: list[WaringDecomposition] = []
        self.loop_log: list[LoopRecord] = []
        self.stall_counter = 0
        self._fingerprints: list[np.ndarray] = []

    def __len__(self) -> int:
        return len(self.solutions)

    def residual(self, u: np.ndarray) -> float:
        return float(np.max(np.abs(self.system.residual(u, self.base_params))))

    def try_insert(self, u: np.ndarray) -> bool:
        """Verify the residual, canonicalize, insert if new. Returns newness."""
        if self.residual(u) >= _RESIDUAL_LIMIT:
            return False
        dec = self.system.decomposition(u).canonical(self.tol)
        fp = np.concatenate([dec.forms.sum(axis=0), dec.lambdas.sum(axis=0)])
        bound = 2.0 * dec.k * self.tol
        for i, known in enumerate(self._fingerprints):
            if np.max(np.abs(known - fp)) <= bound and dec.same_as(self.solutions[i], self.tol):
                return False
        self.unknowns.append(np.asarray(u, dtype=np.complex128))
        self.solutions.append(dec)
        self._fingerprints.append(fp)
        return True


def _run_loop_path(args):
    system, base, p1, p2, u, opts, seed, loop_index, path_index = args
    rng = rand.rng_for(seed, rand.PATH_GAMMA, loop_index, path_index)
    # a failed segment is retried with a fresh gamma: the new arc usually
    # clears whatever discriminant passage killed the old one
    for pa, pb in [(base, p1), (p1, p2), (p2, base)]:
        for _ in range(_GAMMA_RETRIES):
            g = complex(np.exp(2j * np.pi * rng.uniform()))
            res = track_path(system, pa, pb, u, opts, gamma=g)
            if res.ok:
                break
        if not res.ok:
            return None
        u = res.u
    return u


def monodromy_loop(system: SquareSystem, registry: SolutionRegistry, seed: int,
                   loop_index: int, options: TrackerOptions | None = None,
                   workers: int = 1) -> LoopRecord:
    """One three-segment loop over every currently known solution."""
    if len(registry) == 0:
        raise ValueError("registry must hold at least one solution")
    rng = rand.rng_for(seed, rand.LOOP_PARAMS, loop_index)
    p1 = rand.crandn(rng, system.size)
    p2 = rand.crandn(rng, system.size)
    snapshot = list(registry.unknowns)
    jobs = [(system, registry.base_params, p1, p2, u, options, seed, loop_index, i)
            for i, u in enumerate(snapshot)]
    if workers > 1 and len(jobs) > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            endpoints = list(pool.map(_run_loop_path, jobs))
    else:
        endpoints = [_run_loop_path(j) for j in jobs]

    new = 0
    failures = 0
    for end in endpoints:
        if end is None:
            failures += 1
        elif registry.try_insert(end):
            new += 1
    record = LoopRecord(len(snapshot), failures, new)
    registry.loop_log.append(record)
    if failures == record.paths:
        # total loss: no evidence either way, do not count toward stalling
        return record
    registry.stall_counter = 0 if new else registry.stall_counter + 1
    return record


@dataclass(frozen=True)
class CountResult:
    k: int
    count: int
    status: str         # "stabilized" | "budget-exhausted"
    loops: int
    path_failures: int
    registry: SolutionRegistry = field(repr=False)

    def to_json(self) -> dict:
        return {"k": self.k, "count": self.count, "status": self.status,
                "loops": self.loops, "path_failures": self.path_failures}


def _check_not_defective(case: CaseSpec, seed: int) -> None:
    report = secant_defect(case, case.k, seed)
    if report.status != "ok":
        raise InconclusiveError(
            f"secant dimension check stayed ambiguous (gap {report.gap:.1e}); "
            "cannot certify the case as non-defective")
    if report.defect > 0:
        raise DefectiveCaseError(report)


def count_decompositions(case: CaseSpec, seed: int = 0,
                         budget_loops: int = DEFAULT_BUDGET_LOOPS,
                         stall: int = DEFAULT_STALL,
                         options: TrackerOptions | None = None,
                         workers: int = 1,
                         check_defect: bool = True) -> CountResult:
    """Count decompositions of a generic instance by monodromy saturation.

    Runs loops until `stall` consecutive rounds find nothing new
    ("stabilized") or the loop budget runs out ("budget-exhausted", count
    is then only a lower bound).  Defective cases are refused up front.
    """
    if case.k is None:
        raise ValueError(f"case {case.degrees} with n={case.n} is not perfect")
    if check_defect:
        _check_not_defective(case, seed)
    system = SquareSystem(case)
    base_params, u0 = generate_startpoint(system, seed)
    registry = SolutionRegistry(system, base_params)
    if not registry.try_insert(u0):
        raise RuntimeError("startpoint failed its own residual check")

    loops = 0
    while registry.stall_counter < stall and loops < budget_loops:
        monodromy_loop(system, registry, seed, loops, options, workers)
        loops += 1
    status = "stabilized" if registry.stall_counter >= stall else "budget-exhausted"
    failures = sum(rec.failures for rec in registry.loop_log)
    return CountResult(case.k, len(registry), status, loops, failures, registry)


def decompositions_of(f: PolyVector, seed: int = 0,
                      budget_loops: int = DEFAULT_BUDGET_LOOPS,
                      stall: int = DEFAULT_STALL,
                      options: TrackerOptions | None = None,
                      workers: int = 1,
                      unitary_mitigation: bool = True,
                      check_defect: bool = True) -> list[WaringDecomposition]:
    """All decompositions of a concrete vector f, by monodromy plus one
    final parameter homotopy from the solved random instance to f.

    The affine chart ell = x0 + ... excludes summands whose linear form has
    zero first coordinate; a random unitary change of variables applied to f
    first (and undone on the results) makes that loss generic-safe.
    """
    case = CaseSpec(f.num_vars - 1, f.degrees)
    U = None
    g = f
    if unitary_mitigation:
        U = rand.random_unitary(rand.rng_for(seed, rand.UNITARY), f.num_vars)
        g = f.compose_linear(U)

    base = count_decompositions(case, seed, budget_loops, stall, options,
                                workers, check_defect)
    system = base.registry.system
    target = g.coeffs_concat()
    found: list[WaringDecomposition] = []
    fingerprints: list[np.ndarray] = []
    for i, u in enumerate(base.registry.unknowns):
        rng = rand.rng_for(seed, rand.TARGET, i)
        for _ in range(_GAMMA_RETRIES):
            gamma = complex(np.exp(2j * np.pi * rng.uniform()))
            res = track_path(system, base.registry.base_params, target, u,
                             options, gamma=gamma)
            if res.ok:
                break
        if not res.ok:
            continue
        if np.max(np.abs(system.residual(res.u, target))) >= _RESIDUAL_LIMIT:
            continue
        dec = system.decomposition(res.u)
        if U is not None:
            # pull the summands back through the change of variables
            dec = WaringDecomposition(dec.degrees, dec.forms @ np.linalg.inv(U),
                                      dec.lambdas)
        dec = dec.with_residual(f).canonical()
        fp = np.concatenate([dec.forms.sum(axis=0), dec.lambdas.sum(axis=0)])
        bound = 2.0 * dec.k * _DEDUP_TOL
        dup = any(np.max(np.abs(kfp - fp)) <= bound and dec.same_as(kd, _DEDUP_TOL)
                  for kfp, kd in zip(fingerprints, found))
        if not dup:
            found.append(dec)
            fingerprints.append(fp)
    return found
