"""Dense homogeneous polynomials over the complex numbers.

A homogeneous polynomial of degree d in m variables is stored as the dense
vector of its plain monomial coefficients, listed in graded lexicographic
order with x0 > x1 > ... > x_{m-1}.  Since every monomial in the vector has
the same total degree, this is simply descending lexicographic order on
exponent tuples: for d = 1, m = 3 the order is (1,0,0), (0,1,0), (0,0,1).

The dual space is represented by polynomials in the differentiation
operators, with the convention

    d^alpha x^beta = beta! / (beta - alpha)! * x^(beta - alpha)

so that the full apolar pairing of two degree-d polynomials is
sum_alpha alpha! * f_alpha * g_alpha.  Dual elements carry plain
coefficients, exactly like the primal side.
"""
from __future__ import annotations

import json
import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

__all__ = [
    "monomial_basis",
    "monomial_position",
    "basis_size",
    "multinomial",
    "HomogeneousPoly",
    "LinearForm",
    "PolyVector",
    "zero_poly",
    "monomial_poly",
    "multiply",
    "apolar_contract",
    "apolar_pair",
    "power_of_linear",
    "powers_of_linear_rows",
    "compose_linear",
    "random_poly_vector",
]


# ---------------------------------------------------------------------------
# monomial bookkeeping


@lru_cache(maxsize=None)
def monomial_basis(degree: int, num_vars: int) -> tuple[tuple[int, ...], ...]:
    """Exponent tuples of total degree `degree` in `num_vars` variables.

    Graded-lex order: exponent tuples sorted descending lexicographically,
    so the pure power of the first variable comes first and the pure power
    of the last variable comes last.
    """
    if degree < 0 or num_vars < 1:
        raise ValueError("need degree >= 0 and num_vars >= 1")
    out: list[tuple[int, ...]] = []

    def rec(prefix: tuple[int, ...], remaining: int, slots: int) -> None:
        if slots == 1:
            out.append(prefix + (remaining,))
            return
        for e in range(remaining, -1, -1):
            rec(prefix + (e,), remaining - e, slots - 1)

    rec((), degree, num_vars)
    return tuple(out)


@lru_cache(maxsize=None)
def _position_map(degree: int, num_vars: int) -> dict[tuple[int, ...], int]:
    return {a: i for i, a in enumerate(monomial_basis(degree, num_vars))}


def monomial_position(degree: int, num_vars: int, alpha) -> int:
    """Index of the monomial `alpha` in the graded-lex basis. O(1) lookup."""
    return _position_map(degree, num_vars)[tuple(alpha)]


def basis_size(degree: int, num_vars: int) -> int:
    return math.comb(degree + num_vars - 1, num_vars - 1)


def multinomial(degree: int, alpha) -> int:
    """degree! / prod(alpha_i!), exact."""
    r = math.factorial(degree)
    for a in alpha:
        r //= math.factorial(a)
    return r


@lru_cache(maxsize=None)
def _exponents(degree: int, num_vars: int) -> np.ndarray:
    E = np.array(monomial_basis(degree, num_vars), dtype=np.int64)
    E.flags.writeable = False
    return E


@lru_cache(maxsize=None)
def _multinomial_vector(degree: int, num_vars: int) -> np.ndarray:
    v = np.array([multinomial(degree, a) for a in monomial_basis(degree, num_vars)],
                 dtype=np.float64)
    v.flags.writeable = False
    return v


@lru_cache(maxsize=None)
def _weight_vector(degree: int, num_vars: int) -> np.ndarray:
    """alpha! = prod(alpha_i!) for each basis monomial; apolar pairing weights."""
    v = np.array([math.prod(math.factorial(a) for a in alpha)
                  for alpha in monomial_basis(degree, num_vars)], dtype=np.float64)
    v.flags.writeable = False
    return v


@lru_cache(maxsize=None)
def _product_table(d1: int, d2: int, num_vars: int) -> np.ndarray:
    """T[i, j] = position of E1[i] + E2[j] in the degree d1+d2 basis."""
    B1 = monomial_basis(d1, num_vars)
    B2 = monomial_basis(d2, num_vars)
    pos = _position_map(d1 + d2, num_vars)
    T = np.empty((len(B1), len(B2)), dtype=np.int64)
    for i, a in enumerate(B1):
        for j, b in enumerate(B2):
            T[i, j] = pos[tuple(x + y for x, y in zip(a, b))]
    T.flags.writeable = False
    return T


@lru_cache(maxsize=None)
def _shift_table(degree: int, var: int, num_vars: int) -> np.ndarray:
    """Positions in the degree+1 basis of each degree-`degree` monomial times x_var."""
    pos = _position_map(degree + 1, num_vars)
    idx = np.array([pos[tuple(a + (1 if h == var else 0) for h, a in enumerate(alpha))]
                    for alpha in monomial_basis(degree, num_vars)], dtype=np.int64)
    idx.flags.writeable = False
    return idx


def _as_complex_vector(coeffs, size: int) -> np.ndarray:
    c = np.asarray(coeffs, dtype=np.complex128)
    if c.shape != (size,):
        raise ValueError(f"expected coefficient vector of length {size}, got shape {c.shape}")
    c = c.copy()
    c.flags.writeable = False
    return c


# ---------------------------------------------------------------------------
# polynomial values


@dataclass(frozen=True, eq=False)
class HomogeneousPoly:
    """A homogeneous polynomial with dense complex coefficients.

    coeffs[i] is the plain coefficient of the i-th graded-lex monomial, so
    (x0 + x1)^2 in two variables is coeffs (1, 2, 1).
    """

    degree: int
    num_vars: int
    coeffs: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "coeffs",
                           _as_complex_vector(self.coeffs, basis_size(self.degree, self.num_vars)))

    def __call__(self, point) -> complex:
        x = np.asarray(point, dtype=np.complex128)
        E = _exponents(self.degree, self.num_vars)
        # powers per variable, gathered per monomial
        P = x[None, :] ** np.arange(self.degree + 1)[:, None]
        vals = np.prod(P[E, np.arange(self.num_vars)[None, :]], axis=1)
        return complex(self.coeffs @ vals)

    def __add__(self, other: "HomogeneousPoly") -> "HomogeneousPoly":
        self._check_same_space(other)
        return HomogeneousPoly(self.degree, self.num_vars, self.coeffs + other.coeffs)

    def __sub__(self, other: "HomogeneousPoly") -> "HomogeneousPoly":
        self._check_same_space(other)
        return HomogeneousPoly(self.degree, self.num_vars, self.coeffs - other.coeffs)

    def __neg__(self) -> "HomogeneousPoly":
        return HomogeneousPoly(self.degree, self.num_vars, -self.coeffs)

    def __mul__(self, scalar) -> "HomogeneousPoly":
        if isinstance(scalar, HomogeneousPoly):
            return multiply(self, scalar)
        return HomogeneousPoly(self.degree, self.num_vars, self.coeffs * complex(scalar))

    __rmul__ = __mul__

    def _check_same_space(self, other: "HomogeneousPoly") -> None:
        if self.degree != other.degree or self.num_vars != other.num_vars:
            raise ValueError("polynomials live in different spaces")

    @property
    def norm(self) -> float:
        return float(np.linalg.norm(self.coeffs))

    def close_to(self, other: "HomogeneousPoly", tol: float = 1e-10) -> bool:
        self._check_same_space(other)
        return bool(np.max(np.abs(self.coeffs - other.coeffs)) <= tol)

    def to_json(self) -> dict:
        return {"degree": self.degree, "num_vars": self.num_vars,
                "coeffs": [[float(c.real), float(c.imag)] for c in self.coeffs]}

    @classmethod
    def from_json(cls, obj: dict) -> "HomogeneousPoly":
        coeffs = np.array([complex(re, im) for re, im in obj["coeffs"]])
        return cls(int(obj["degree"]), int(obj["num_vars"]), coeffs)


def zero_poly(degree: int, num_vars: int) -> HomogeneousPoly:
    return HomogeneousPoly(degree, num_vars, np.zeros(basis_size(degree, num_vars)))


def monomial_poly(alpha, num_vars: int | None = None) -> HomogeneousPoly:
    """The single monomial x^alpha with coefficient 1."""
    alpha = tuple(alpha)
    m = len(alpha) if num_vars is None else num_vars
    d = sum(alpha)
    c = np.zeros(basis_size(d, m), dtype=np.complex128)
    c[monomial_position(d, m, alpha)] = 1.0
    return HomogeneousPoly(d, m, c)


def multiply(p: HomogeneousPoly, q: HomogeneousPoly) -> HomogeneousPoly:
    if p.num_vars != q.num_vars:
        raise ValueError("polynomials live in different spaces")
    T = _product_table(p.degree, q.degree, p.num_vars)
    out = np.zeros(basis_size(p.degree + q.degree, p.num_vars), dtype=np.complex128)
    np.add.at(out, T.ravel(), np.outer(p.coeffs, q.coeffs).ravel())
    return HomogeneousPoly(p.degree + q.degree, p.num_vars, out)


# ---------------------------------------------------------------------------
# apolarity pairing


def apolar_contract(f: HomogeneousPoly, g) -> HomogeneousPoly:
    """Apply the dual element g to f by differentiation.

    g is either a multi-index (an exponent tuple, meaning the single operator
    d^g) or a HomogeneousPoly interpreted as a polynomial in the operators,
    extended bilinearly.  The result has degree f.degree - e where e is the
    degree of g.  With g of degree equal to f.degree the result is the
    degree-0 polynomial whose value is apolar_pair(f, g).
    """
    if isinstance(g, HomogeneousPoly):
        e, m, gc = g.degree, g.num_vars, g.coeffs
        if m != f.num_vars:
            raise ValueError("polynomials live in different spaces")
    else:
        alpha = tuple(g)
        e, m = sum(alpha), f.num_vars
        if len(alpha) != m:
            raise ValueError("multi-index length does not match num_vars")
        gc = None
    d = f.degree
    if e > d:
        raise ValueError("dual degree exceeds polynomial degree")
    d_out = d - e
    wd = _weight_vector(d, m)
    wout = _weight_vector(d_out, m)
    # T[i_alpha, i_beta] = position of alpha+beta; factor (alpha+beta)!/beta!
    T = _product_table(e, d_out, m)
    factors = wd[T] / wout[None, :]
    if gc is None:
        i = monomial_position(e, m, alpha)
        out = f.coeffs[T[i]] * factors[i]
    else:
        out = (gc[:, None] * f.coeffs[T] * factors).sum(axis=0)
    return HomogeneousPoly(d_out, m, out)


def apolar_pair(f: HomogeneousPoly, g: HomogeneousPoly) -> complex:
    """Full apolar pairing sum_alpha alpha! f_alpha g_alpha (degrees must match)."""
    if f.degree != g.degree or f.num_vars != g.num_vars:
        raise ValueError("apolar pairing needs equal degrees and num_vars")
    w = _weight_vector(f.degree, f.num_vars)
    return complex(np.sum(w * f.coeffs * g.coeffs))


# ---------------------------------------------------------------------------
# linear forms and their powers


@dataclass(frozen=True, eq=False)
class LinearForm:
    """A linear form c0 x0 + ... + c_{m-1} x_{m-1}."""

    coeffs: np.ndarray

    def __post_init__(self):
        c = np.asarray(self.coeffs, dtype=np.complex128).copy()
        if c.ndim != 1 or c.size < 1:
            raise ValueError("linear form needs a 1-d coefficient vector")
        c.flags.writeable = False
        object.__setattr__(self, "coeffs", c)

    @property
    def num_vars(self) -> int:
        return self.coeffs.size

    def __call__(self, point) -> complex:
        return complex(self.coeffs @ np.asarray(point, dtype=np.complex128))

    def power(self, degree: int) -> HomogeneousPoly:
        return power_of_linear(self.coeffs, degree)


def power_of_linear(coeffs, degree: int) -> HomogeneousPoly:
    """The power (c . x)^degree, coefficients multinomial(degree, a) * c^a."""
    c = np.asarray(coeffs, dtype=np.complex128)
    row = powers_of_linear_rows(c[None, :], degree)[0]
    return HomogeneousPoly(degree, c.size, row)


def powers_of_linear_rows(C, degree: int) -> np.ndarray:
    """Row i of the result holds the coefficient vector of (C[i] . x)^degree.

    C has shape (k, m); the result has shape (k, basis_size(degree, m)).
    """
    C = np.asarray(C, dtype=np.complex128)
    k, m = C.shape
    E = _exponents(degree, m)
    # P[i, e, h] = C[i, h] ** e
    P = C[:, None, :] ** np.arange(degree + 1)[None, :, None]
    vals = np.prod(P[:, E, np.arange(m)[None, :]], axis=2)
    return vals * _multinomial_vector(degree, m)[None, :]


def compose_linear(p: HomogeneousPoly, A) -> HomogeneousPoly:
    """The polynomial x -> p(A x)."""
    A = np.asarray(A, dtype=np.complex128)
    m = p.num_vars
    if A.shape != (m, m):
        raise ValueError("substitution matrix must be square of size num_vars")
    # variable powers as polynomials, then monomial-by-monomial products
    maxdeg = p.degree
    varpows: list[list[HomogeneousPoly]] = []
    for h in range(m):
        pows = [HomogeneousPoly(0, m, np.ones(1))]
        for e in range(1, maxdeg + 1):
            pows.append(multiply(pows[-1], power_of_linear(A[h], 1)) if e > 1
                        else power_of_linear(A[h], 1))
        varpows.append(pows)
    out = np.zeros(basis_size(p.degree, m), dtype=np.complex128)
    for i, alpha in enumerate(monomial_basis(p.degree, m)):
        c = p.coeffs[i]
        if c == 0:
            continue
        term = HomogeneousPoly(0, m, np.ones(1))
        for h, e in enumerate(alpha):
            if e:
                term = multiply(term, varpows[h][e])
        out += c * term.coeffs
    return HomogeneousPoly(p.degree, m, out)


# ---------------------------------------------------------------------------
# polynomial vectors


@dataclass(frozen=True, eq=False)
class PolyVector:
    """A vector (f_1, ..., f_r) of homogeneous polynomials in the same variables.

    Degrees are required to be sorted ascending with every degree >= 2.
    """

    parts: tuple[HomogeneousPoly, ...]

    def __post_init__(self):
        parts = tuple(self.parts)
        if not parts:
            raise ValueError("need at least one component")
        m = parts[0].num_vars
        if any(p.num_vars != m for p in parts):
            raise ValueError("components must share the variable count")
        degs = [p.degree for p in parts]
        if any(d < 2 for d in degs):
            raise ValueError("component degrees must be at least 2")
        if list(degs) != sorted(degs):
            raise ValueError("component degrees must be sorted ascending")
        object.__setattr__(self, "parts", parts)

    @property
    def degrees(self) -> tuple[int, ...]:
        return tuple(p.degree for p in self.parts)

    @property
    def num_vars(self) -> int:
        return self.parts[0].num_vars

    @property
    def num_components(self) -> int:
        return len(self.parts)

    @property
    def total_size(self) -> int:
        """Total number of coefficients across components."""
        return sum(p.coeffs.size for p in self.parts)

    def coeffs_concat(self) -> np.ndarray:
        """All coefficients, component by component, graded-lex within each."""
        return np.concatenate([p.coeffs for p in self.parts])

    def __call__(self, point) -> np.ndarray:
        return np.array([p(point) for p in self.parts])

    def compose_linear(self, A) -> "PolyVector":
        return PolyVector(tuple(compose_linear(p, A) for p in self.parts))

    @classmethod
    def from_concat(cls, degrees, num_vars: int, vec) -> "PolyVector":
        vec = np.asarray(vec, dtype=np.complex128)
        parts = []
        at = 0
        for d in degrees:
            m = basis_size(d, num_vars)
            parts.append(HomogeneousPoly(d, num_vars, vec[at:at + m]))
            at += m
        if at != vec.size:
            raise ValueError("coefficient vector length does not match degrees")
        return cls(tuple(parts))

    @classmethod
    def from_summands(cls, points, lambdas, degrees) -> "PolyVector":
        """Build sum_i lambdas[i, j] * (points[i] . x)^degrees[j] for each j."""
        points = np.asarray(points, dtype=np.complex128)
        lambdas = np.asarray(lambdas, dtype=np.complex128)
        k, m = points.shape
        if lambdas.shape != (k, len(degrees)):
            raise ValueError("lambdas must have shape (num_points, num_degrees)")
        parts = []
        for j, d in enumerate(degrees):
            rows = powers_of_linear_rows(points, d)
            parts.append(HomogeneousPoly(d, m, lambdas[:, j] @ rows))
        return cls(tuple(parts))

    def to_json(self) -> dict:
        return {"degrees": list(self.degrees),
                "parts": [p.to_json() for p in self.parts]}

    @classmethod
    def from_json(cls, obj: dict) -> "PolyVector":
        parts = tuple(HomogeneousPoly.from_json(p) for p in obj["parts"])
        pv = cls(parts)
        if list(pv.degrees) != [int(d) for d in obj["degrees"]]:
            raise ValueError("degrees field does not match parts")
        return pv

    @classmethod
    def load(cls, path) -> "PolyVector":
        with open(path) as fh:
            return cls.from_json(json.load(fh))

    def save(self, path) -> None:
        with open(path, "w") as fh:
            json.dump(self.to_json(), fh, indent=1)


def random_poly_vector(degrees, num_vars: int, rng: np.random.Generator) -> PolyVector:
    """Independent standard complex Gaussian coefficients in every slot."""
    parts = []
    for d in degrees:
        m = basis_size(d, num_vars)
        c = (rng.standard_normal(m) + 1j * rng.standard_normal(m)) / np.sqrt(2)
        parts.append(HomogeneousPoly(d, num_vars, c))
    return PolyVector(tuple(parts))
