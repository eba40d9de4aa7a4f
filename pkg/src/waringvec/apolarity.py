"""Contraction matrices and identifiable decompositions.

For a vector f = (f_1, ..., f_r) the catalecticant in degree e is the
contraction map from degree-e dual polynomials to the direct sum of the
Sym^(a_j - e); its kernel consists of dual forms vanishing at every point of
a decomposition of f, because contracting a power (c.x)^d by g leaves
d!/(d-e)! g(c) (c.x)^(d-e).  Rank is therefore bounded by the rank of f,
and in favorable cases the kernel cuts out exactly the k points.

When the kernel of a catalecticant is too small to cut points, sections of
the twisted quotient bundle Q(e) on the plane take over.  A section is
presented by a lift: a triple of degree-e forms modulo the Euler subspace
{(x0 h, x1 h, x2 h)}.  Two sections pair into a single form of degree
e + e' + 1 through the determinant

    det [[x0, x1, x2], [g0, g1, g2], [h0, h1, h2]]

which vanishes identically when either argument is an Euler lift (repeated
row).  The induced bilinear form B(G, H) = sum_j <f_j, pairing(G, H_j)>
has rank at most 2k for f of rank k, and its kernel section vanishes
(as a section of Q) exactly at the decomposition points: the lift becomes
proportional to the point there, so all three 2x2 minors of [[x], [G(x)]]
vanish.  The zero counts come out of Chern classes: e points on the line,
e^2 for two plane curves of degree e, and 1 + e + e^2 for Q(e) on the plane.
"""
from __future__ import annotations

import math
import re
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from . import rand
from .combinatorics import CaseSpec, binary_identifiable
from .decomposition import WaringDecomposition
from .errors import DegenerateInputError, InconclusiveError
from .homotopy.smallsolve import intersect_plane_curves
from .homotopy.tracker import TrackerOptions
from .linalg import GAP_AMBIGUOUS, equilibrate_cols, equilibrate_rows, svd_rank
from .polycore import (HomogeneousPoly, PolyVector, apolar_pair, basis_size,
                       monomial_basis, multiply, powers_of_linear_rows,
                       _product_table, _weight_vector, zero_poly)

__all__ = [
    "BundleSpec", "line_bundle", "quotient_twist", "default_bundle", "parse_bundle",
    "QuotientSection", "euler_presented_basis", "quotient_pairing",
    "ContractionMatrix", "catalecticant", "nonabelian_matrix",
    "base_locus", "decompose",
]

_EQ_RESIDUAL = 1e-8
_POINT_SEP = 1e-8
_LAMBDA_COND_LIMIT = 1e10


# ---------------------------------------------------------------------------
# bundles


@dataclass(frozen=True)
class BundleSpec:
    """A choice of vector bundle driving the contraction.

    kind "line" means the plain catalecticant in degree `twist`; kind
    "quotient" means the twisted quotient bundle Q(twist) on the plane.
    expected_kernel_dim and expected_points record what a generic vector of
    the case must produce: source dimension minus k times the bundle rank,
    and the top Chern number of the bundle (the number of zeros of a
    generic section), which must equal k for recovery to make sense.
    """

    kind: str
    twist: int
    rank: int
    expected_kernel_dim: int
    expected_points: int

    def label(self) -> str:
        return f"{self.kind}({self.twist})"


def _line_source_dim(e: int, n: int) -> int:
    return basis_size(e, n + 1)


def _quotient_source_dim(e: int) -> int:
    # triples of degree-e forms modulo Euler lifts of degree e-1 forms
    return 3 * math.comb(e + 2, 2) - math.comb(e + 1, 2)


def line_bundle(case: CaseSpec, e: int) -> BundleSpec:
    if case.k is None:
        raise ValueError("bundle setup needs a perfect case")
    if e < 1 or e > case.degrees[-1]:
        raise ValueError(f"twist {e} out of range for degrees {case.degrees}")
    kdim = _line_source_dim(e, case.n) - case.k
    if case.n == 1:
        if kdim != 1:
            raise ValueError(f"line bundle on the line needs kernel dim 1, got {kdim}")
        points = e
    elif case.n == 2:
        if kdim != 2:
            raise ValueError(f"line bundle on the plane needs kernel dim 2, got {kdim}")
        points = e * e
    else:
        raise ValueError("line-bundle recovery implemented for n = 1 and n = 2 only")
    return BundleSpec("line", e, 1, kdim, points)


def quotient_twist(case: CaseSpec, e: int) -> BundleSpec:
    if case.k is None:
        raise ValueError("bundle setup needs a perfect case")
    if case.n != 2:
        raise ValueError("the quotient bundle construction lives on the plane")
    if e < 1 or e > case.degrees[0] - 1:
        raise ValueError(f"twist {e} out of range for degrees {case.degrees}")
    kdim = _quotient_source_dim(e) - 2 * case.k
    if kdim != 1:
        raise ValueError(f"quotient twist needs kernel dim 1, got {kdim}")
    return BundleSpec("quotient", e, 2, kdim, 1 + e + e * e)


def default_bundle(case: CaseSpec) -> BundleSpec:
    """The bundle that identifies the case, when one is known."""
    k = case.k
    if k is None:
        raise ValueError("no bundle for a non-perfect case")
    if case.n == 1 and binary_identifiable(case.degrees):
        return line_bundle(case, k)
    if case.n == 2:
        for builder, e in ((line_bundle, 2), (quotient_twist, 2)):
            try:
                bundle = builder(case, e)
            except ValueError:
                continue
            if bundle.expected_points == k:
                return bundle
    raise ValueError(f"no identifiable bundle known for n={case.n}, "
                     f"degrees {case.degrees}")


def parse_bundle(case: CaseSpec, text: str) -> BundleSpec:
    """Parse 'auto', 'line(E)' or 'quotient(E)'."""
    if text == "auto":
        return default_bundle(case)
    m = re.fullmatch(r"(line|quotient)\((\d+)\)", text.strip())
    if not m:
        raise ValueError(f"cannot parse bundle {text!r}; "
                         "expected auto, line(E) or quotient(E)")
    builder = line_bundle if m.group(1) == "line" else quotient_twist
    return builder(case, int(m.group(2)))


# ---------------------------------------------------------------------------
# quotient-bundle sections


@dataclass(frozen=True, eq=False)
class QuotientSection:
    """A section of Q(e) on the plane, held as a lift of three degree-e forms."""

    lift: tuple[HomogeneousPoly, HomogeneousPoly, HomogeneousPoly]

    def __post_init__(self):
        g0, g1, g2 = self.lift
        if not (g0.num_vars == g1.num_vars == g2.num_vars == 3):
            raise ValueError("quotient sections live on 3 variables")
        if not (g0.degree == g1.degree == g2.degree):
            raise ValueError("lift components must share one degree")

    @property
    def twist(self) -> int:
        return self.lift[0].degree

    def as_vector(self) -> np.ndarray:
        return np.concatenate([g.coeffs for g in self.lift])

    @classmethod
    def from_vector(cls, e: int, vec) -> "QuotientSection":
        vec = np.asarray(vec, dtype=np.complex128)
        m = basis_size(e, 3)
        if vec.shape != (3 * m,):
            raise ValueError("lift vector has the wrong length")
        return cls(tuple(HomogeneousPoly(e, 3, vec[v * m:(v + 1) * m])
                         for v in range(3)))

    @classmethod
    def euler_lift(cls, h: HomogeneousPoly) -> "QuotientSection":
        """(x0 h, x1 h, x2 h): the zero section of Q(deg h + 1)."""
        if h.num_vars != 3:
            raise ValueError("quotient sections live on 3 variables")
        xs = [HomogeneousPoly(1, 3, np.eye(3)[v]) for v in range(3)]
        return cls(tuple(multiply(x, h) for x in xs))

    def __add__(self, other: "QuotientSection") -> "QuotientSection":
        return QuotientSection(tuple(a + b for a, b in zip(self.lift, other.lift)))

    def minors(self) -> tuple[HomogeneousPoly, HomogeneousPoly, HomogeneousPoly]:
        """The 2x2 minors x_a g_b - x_b g_a of [[x], [G]], degree e + 1.

        Their common zeros are the points where the section vanishes in Q:
        the lift is there proportional to the point itself.
        """
        xs = [HomogeneousPoly(1, 3, np.eye(3)[v]) for v in range(3)]
        g = self.lift
        return tuple(multiply(xs[a], g[b]) - multiply(xs[b], g[a])
                     for a, b in ((0, 1), (0, 2), (1, 2)))


@lru_cache(maxsize=None)
def _euler_complement(e: int) -> np.ndarray:
    """Orthonormal basis (columns) of the complement of the Euler subspace
    inside triples of degree-e forms."""
    m = basis_size(e, 3)
    if e == 0:
        return np.eye(3)
    me = basis_size(e - 1, 3)
    E = np.zeros((3 * m, me))
    for t, hmon in enumerate(monomial_basis(e - 1, 3)):
        h = HomogeneousPoly(e - 1, 3, np.eye(me)[t])
        E[:, t] = QuotientSection.euler_lift(h).as_vector().real
    U, _, _ = np.linalg.svd(E)
    C = U[:, me:]
    C.flags.writeable = False
    return C


def euler_presented_basis(e: int) -> list[QuotientSection]:
    """A basis of H0(Q(e)): one section per column of the Euler complement."""
    C = _euler_complement(e)
    return [QuotientSection.from_vector(e, C[:, i]) for i in range(C.shape[1])]


def quotient_pairing(G: QuotientSection, H: QuotientSection) -> HomogeneousPoly:
    """det [[x], [G], [H]], a form of degree twist(G) + twist(H) + 1."""
    xs = [HomogeneousPoly(1, 3, np.eye(3)[v]) for v in range(3)]
    g, h = G.lift, H.lift
    out = zero_poly(G.twist + H.twist + 1, 3)
    for a, b, c, sign in ((0, 1, 2, 1.0), (1, 0, 2, -1.0), (2, 0, 1, 1.0)):
        cross = multiply(g[b], h[c]) - multiply(g[c], h[b])
        out = out + sign * multiply(xs[a], cross)
    return out


# ---------------------------------------------------------------------------
# contraction matrices


@dataclass(frozen=True, eq=False)
class ContractionMatrix:
    """A contraction matrix with named source and target spaces.

    source_axis says which matrix axis indexes the source basis (1 for the
    catalecticant, whose columns are dual monomials; 0 for the quotient
    bilinear form, whose rows are source sections).  Rank decisions
    equilibrate the target axis, which leaves the source-side kernel intact.
    """

    entries: np.ndarray
    case: CaseSpec | None
    bundle: BundleSpec | None
    source_basis: str
    target_basis: str
    source_axis: int

    @property
    def source_dim(self) -> int:
        return self.entries.shape[self.source_axis]

    def _equilibrated(self) -> np.ndarray:
        if self.source_axis == 1:
            return equilibrate_rows(self.entries)
        return equilibrate_cols(self.entries)

    def numerical_rank(self):
        """(rank, gap) with the shared threshold on equilibrated entries."""
        _, _, _, rank, gap = svd_rank(self._equilibrated())
        return rank, gap

    def kernel(self):
        """Columns spanning the source-side null space: vectors v with
        M v = 0 (source_axis 1) or v^T M = 0 (source_axis 0; the pairing is
        bilinear, so the left null vectors are conjugated)."""
        U, s, Vh, rank, _ = svd_rank(self._equilibrated())
        if self.source_axis == 1:
            return Vh[rank:, :].conj().T
        return U[:, rank:].conj()


def catalecticant(f: PolyVector, e: int) -> ContractionMatrix:
    """Matrix of g -> (contraction of each f_j by g) in graded-lex bases.

    Rows run over the target monomials of all components (degree a_j - e,
    components with a_j < e contributing nothing), columns over the degree-e
    dual monomials.  Entry ((j, beta), alpha) = f_{alpha+beta} (alpha+beta)!/beta!.
    """
    if e < 1 or e > max(f.degrees):
        raise ValueError(f"contraction degree {e} out of range for degrees {f.degrees}")
    m = f.num_vars
    cols = basis_size(e, m)
    blocks = []
    for p in f.parts:
        if p.degree < e:
            continue
        d_out = p.degree - e
        T = _product_table(e, d_out, m)            # (cols, rows_j)
        factors = _weight_vector(p.degree, m)[T] / _weight_vector(d_out, m)[None, :]
        blocks.append((p.coeffs[T] * factors).T)   # (rows_j, cols)
    M = np.vstack(blocks)
    case = None
    try:
        case = CaseSpec(m - 1, f.degrees)
    except ValueError:
        pass
    out_degs = [a - e for a in f.degrees if a >= e]
    return ContractionMatrix(M, case, None,
                             source_basis=f"Sym^{e} dual",
                             target_basis="(+) " + " ".join(f"Sym^{d}" for d in out_degs),
                             source_axis=1)


def nonabelian_matrix(f: PolyVector, bundle: BundleSpec) -> ContractionMatrix:
    """Contraction matrix of f for the given bundle.

    Line bundles reduce to the catalecticant.  For the quotient twist the
    matrix represents B(G, (H_j)_j) = sum_j <f_j, pairing(G, H_j)> over
    Euler-presented bases; rows index source sections G of Q(e), columns
    index the target sections H_j of Q(a_j - e - 1) component by component.
    """
    if bundle.kind == "line":
        C = catalecticant(f, bundle.twist)
        return ContractionMatrix(C.entries, C.case, bundle, C.source_basis,
                                 C.target_basis, C.source_axis)
    if f.num_vars != 3:
        raise ValueError("the quotient bundle construction lives on the plane")
    e = bundle.twist
    if e > min(f.degrees) - 1:
        raise ValueError(f"twist {e} too large for degrees {f.degrees}")
    source = euler_presented_basis(e)
    targets = [euler_presented_basis(a - e - 1) for a in f.degrees]
    M = np.empty((len(source), sum(len(t) for t in targets)), dtype=np.complex128)
    for si, G in enumerate(source):
        col = 0
        for j, p in enumerate(f.parts):
            for H in targets[j]:
                M[si, col] = apolar_pair(p, quotient_pairing(G, H))
                col += 1
    case = CaseSpec(2, f.degrees)
    return ContractionMatrix(
        M, case, bundle,
        source_basis=f"H0(Q({e})) Euler-presented",
        target_basis="(+) " + " ".join(f"H0(Q({a - e - 1}))" for a in f.degrees),
        source_axis=0)


# ---------------------------------------------------------------------------
# base locus


def _normalize_last_nonzero(p: np.ndarray, tol: float = _EQ_RESIDUAL) -> np.ndarray:
    mags = np.abs(p)
    nz = np.nonzero(mags > tol * mags.max())[0]
    return p / p[nz[-1]]


def _poly_residual_at(p: HomogeneousPoly, point: np.ndarray) -> float:
    """|p(point)| at the unit-normalized point, relative to the coefficient size."""
    x = point / np.linalg.norm(point)
    return abs(p(x)) / max(p.norm, 1e-300)


def _binary_roots(g: HomogeneousPoly) -> np.ndarray:
    """Zeros in P^1 of a binary form, via the companion matrix of np.roots."""
    v = g.coeffs           # index m carries exponents (d - m, m)
    d = g.degree
    scale = np.max(np.abs(v))
    # affine polynomial in z = x1/x0 has coefficient v[m] on z^m; leading
    # near-zeros are roots at infinity, i.e. the point (0, 1)
    eff = d
    while eff > 0 and abs(v[eff]) < 1e-10 * scale:
        eff -= 1
    pts = [np.array([0.0, 1.0], dtype=np.complex128)] * (d - eff)
    if eff > 0:
        roots = np.roots(v[:eff + 1][::-1])
        dp = np.polynomial.Polynomial(v[:eff + 1]).deriv()
        pp = np.polynomial.Polynomial(v[:eff + 1])
        for z in roots:
            for _ in range(3):      # polish; companion eigenvalues are coarse
                dz = dp(z)
                if abs(dz) < 1e-14 * scale:
                    break
                z = z - pp(z) / dz
            pts.append(np.array([1.0, z], dtype=np.complex128))
    return np.array(pts)


def base_locus(kernel, bundle: BundleSpec, *, seed: int = 0,
               options: TrackerOptions | None = None) -> np.ndarray:
    """The common zeros of the kernel, as bundle.expected_points projective
    points with the last nonzero coordinate normalized to 1.

    kernel holds dual polynomials (line bundles) or QuotientSection values
    (quotient twist), one per expected kernel dimension.  A wrong kernel
    dimension or a short point count signals a special or defective input.
    """
    kernel = list(kernel)
    if len(kernel) != bundle.expected_kernel_dim:
        raise DegenerateInputError(
            f"kernel dimension {len(kernel)} != expected "
            f"{bundle.expected_kernel_dim}; the input is special")
    rng = rand.rng_for(seed, rand.BASE_LOCUS)

    if bundle.kind == "line":
        polys = kernel
        if polys[0].num_vars == 2:
            pts = _binary_roots(polys[0])
        else:
            pts = intersect_plane_curves(polys[0], polys[1], rng, options)
        checks = polys
    else:
        section: QuotientSection = kernel[0]
        minors = section.minors()
        c1, c2 = rand.crandn(rng, 3), rand.crandn(rng, 3)
        comb1 = c1[0] * minors[0] + c1[1] * minors[1] + c1[2] * minors[2]
        comb2 = c2[0] * minors[0] + c2[1] * minors[1] + c2[2] * minors[2]
        raw = intersect_plane_curves(comb1, comb2, rng, options)
        pts = [p for p in raw
               if max(_poly_residual_at(q, p) for q in minors) < _EQ_RESIDUAL]
        checks = list(minors)

    # drop coincident points, verify every equation at every point
    kept: list[np.ndarray] = []
    for p in pts:
        rep = _normalize_last_nonzero(np.asarray(p, dtype=np.complex128))
        unit = rep / np.linalg.norm(rep)
        if any(np.max(np.abs(unit - q / np.linalg.norm(q))) < _POINT_SEP for q in kept):
            continue
        if max(_poly_residual_at(q, rep) for q in checks) >= _EQ_RESIDUAL:
            continue
        kept.append(rep)
    if len(kept) != bundle.expected_points:
        raise DegenerateInputError(
            f"base locus has {len(kept)} points, expected {bundle.expected_points}; "
            "the vector is special or the case is defective")
    return np.array(kept)


# ---------------------------------------------------------------------------
# recovery


def _kernel_objects(C: ContractionMatrix, bundle: BundleSpec):
    K = C.kernel()
    if bundle.kind == "line":
        m = C.case.num_vars if C.case else 3
        return [HomogeneousPoly(bundle.twist, m, K[:, i]) for i in range(K.shape[1])]
    lifts = _euler_complement(bundle.twist) @ K
    return [QuotientSection.from_vector(bundle.twist, lifts[:, i])
            for i in range(K.shape[1])]


def decompose(f: PolyVector, bundle: BundleSpec | None = None, *, seed: int = 0,
              options: TrackerOptions | None = None) -> WaringDecomposition:
    """Recover the unique decomposition of a generic identifiable vector.

    Pipeline: contraction matrix, kernel, base locus, then one linear solve
    per component for the lambdas using the recovered points' power vectors.
    """
    case = CaseSpec(f.num_vars - 1, f.degrees)
    k = case.k
    if k is None:
        raise ValueError(f"case {case.degrees} with n={case.n} is not perfect")
    if bundle is None:
        bundle = default_bundle(case)
    if bundle.expected_points != k:
        raise ValueError(f"bundle {bundle.label()} cuts {bundle.expected_points} "
                         f"points but the case needs k={k}")

    C = nonabelian_matrix(f, bundle)
    rank, gap = C.numerical_rank()
    if gap < GAP_AMBIGUOUS:
        raise InconclusiveError(f"contraction rank ambiguous (gap {gap:.1e})")
    if rank != k * bundle.rank or C.source_dim - rank != bundle.expected_kernel_dim:
        raise DegenerateInputError(
            f"contraction rank {rank} (kernel {C.source_dim - rank}) differs from "
            f"the generic {k * bundle.rank} (kernel {bundle.expected_kernel_dim}); "
            "the vector is special")

    pts = base_locus(_kernel_objects(C, bundle), bundle, seed=seed, options=options)

    lambdas = np.empty((k, case.r), dtype=np.complex128)
    for j, p in enumerate(f.parts):
        A = powers_of_linear_rows(pts, p.degree).T       # (m_j, k)
        cond = np.linalg.cond(A)
        if not np.isfinite(cond) or cond > _LAMBDA_COND_LIMIT:
            raise DegenerateInputError(
                f"lambda solve for component {j} is ill-conditioned "
                f"(condition number {cond:.1e})")
        lambdas[:, j] = np.linalg.lstsq(A, p.coeffs, rcond=None)[0]

    dec = WaringDecomposition(case.degrees, pts, lambdas).with_residual(f)
    if dec.residual >= _EQ_RESIDUAL:
        raise DegenerateInputError(
            f"reconstruction residual {dec.residual:.2e} exceeds {_EQ_RESIDUAL}; "
            "the vector is not generic for this bundle")
    return dec.canonical()
