"""Polynomial arithmetic against independent oracles.

The contraction convention is pinned by explicit symbolic differentiation;
everything else is checked by evaluation at random points, which exercises
a completely different code path than the coefficient algebra.
"""
from __future__ import annotations

import math

import numpy as np
import pytest
import sympy as sp

from waringvec import rand
from waringvec.polycore import (HomogeneousPoly, PolyVector, apolar_contract,
                                apolar_pair, basis_size, compose_linear,
                                monomial_basis, monomial_poly, multiply,
                                power_of_linear, powers_of_linear_rows,
                                random_poly_vector)


def test_monomial_basis_order_and_size():
    assert monomial_basis(2, 3) == ((2, 0, 0), (1, 1, 0), (1, 0, 1),
                                    (0, 2, 0), (0, 1, 1), (0, 0, 2))
    assert monomial_basis(1, 3) == ((1, 0, 0), (0, 1, 0), (0, 0, 1))
    for d, m in [(3, 2), (4, 3), (5, 4)]:
        B = monomial_basis(d, m)
        assert len(B) == math.comb(d + m - 1, m - 1) == basis_size(d, m)
        assert all(sum(a) == d for a in B)
        assert list(B) == sorted(B, reverse=True)


def _sympy_poly(coeffs, degree, xs):
    B = monomial_basis(degree, len(xs))
    return sum(int(c) * math.prod(x ** e for x, e in zip(xs, a))
               for c, a in zip(coeffs, B))


def test_contract_matches_symbolic_differentiation():
    # oracle: sympy derivatives with exact integer coefficients
    rng = rand.rng_for(3, 0)
    m, d, e = 3, 4, 2
    fc = rng.integers(-5, 6, basis_size(d, m))
    gc = rng.integers(-5, 6, basis_size(e, m))
    xs = sp.symbols("x0 x1 x2")
    fs = _sympy_poly(fc, d, xs)
    expected = sp.expand(sum(
        int(c) * sp.diff(fs, *[s for x, ex in zip(xs, beta) for s in (x,) * ex])
        for c, beta in zip(gc, monomial_basis(e, m))))
    got = apolar_contract(HomogeneousPoly(d, m, fc.astype(complex)),
                          HomogeneousPoly(e, m, gc.astype(complex)))
    for pos, alpha in enumerate(monomial_basis(d - e, m)):
        mono = math.prod(x ** ex for x, ex in zip(xs, alpha))
        want = complex(expected.coeff_monomial(mono) if hasattr(expected, "coeff_monomial")
                       else sp.Poly(expected, *xs).coeff_monomial(mono))
        assert got.coeffs[pos] == pytest.approx(want, abs=1e-9)


def test_full_pairing_matches_symbolic():
    rng = rand.rng_for(3, 1)
    m, d = 2, 3
    fc = rng.integers(-4, 5, basis_size(d, m))
    gc = rng.integers(-4, 5, basis_size(d, m))
    xs = sp.symbols("x0 x1")
    fs = _sympy_poly(fc, d, xs)
    want = sum(int(c) * sp.diff(fs, *[s for x, ex in zip(xs, beta) for s in (x,) * ex])
               for c, beta in zip(gc, monomial_basis(d, m)))
    f = HomogeneousPoly(d, m, fc.astype(complex))
    g = HomogeneousPoly(d, m, gc.astype(complex))
    assert apolar_pair(f, g) == pytest.approx(complex(want), abs=1e-9)
    full = apolar_contract(f, g)
    assert full.degree == 0
    assert full.coeffs[0] == pytest.approx(complex(want), abs=1e-9)


def test_contract_is_bilinear():
    rng = rand.rng_for(3, 2)
    m, d, e = 3, 5, 2
    f1 = HomogeneousPoly(d, m, rand.crandn(rng, basis_size(d, m)))
    f2 = HomogeneousPoly(d, m, rand.crandn(rng, basis_size(d, m)))
    g1 = HomogeneousPoly(e, m, rand.crandn(rng, basis_size(e, m)))
    g2 = HomogeneousPoly(e, m, rand.crandn(rng, basis_size(e, m)))
    a, b = complex(rand.crandn(rng, 1)[0]), complex(rand.crandn(rng, 1)[0])
    left = apolar_contract(a * f1 + b * f2, g1)
    right = a * apolar_contract(f1, g1) + b * apolar_contract(f2, g1)
    assert left.close_to(right, 1e-10)
    left = apolar_contract(f1, HomogeneousPoly(e, m, a * g1.coeffs + b * g2.coeffs))
    right = a * apolar_contract(f1, g1) + b * apolar_contract(f1, g2)
    assert left.close_to(right, 1e-10)


def test_contract_power_of_linear():
    # d^e applied to (c.x)^d gives d!/(d-e)! g(c) (c.x)^(d-e)
    rng = rand.rng_for(3, 3)
    m, d, e = 3, 6, 2
    c = rand.crandn(rng, m)
    g = HomogeneousPoly(e, m, rand.crandn(rng, basis_size(e, m)))
    got = apolar_contract(power_of_linear(c, d), g)
    scale = math.factorial(d) // math.factorial(d - e)
    want = scale * complex(g(c)) * power_of_linear(c, d - e)
    assert got.close_to(want, 1e-9 * want.norm)


def test_multiply_and_evaluate_agree():
    rng = rand.rng_for(3, 4)
    m = 3
    p = HomogeneousPoly(2, m, rand.crandn(rng, basis_size(2, m)))
    q = HomogeneousPoly(3, m, rand.crandn(rng, basis_size(3, m)))
    pq = multiply(p, q)
    for _ in range(5):
        x = rand.crandn(rng, m)
        assert pq(x) == pytest.approx(p(x) * q(x), rel=1e-10)


def test_power_of_linear_evaluates():
    rng = rand.rng_for(3, 5)
    c = rand.crandn(rng, 4)
    p = power_of_linear(c, 5)
    x = rand.crandn(rng, 4)
    assert p(x) == pytest.approx(complex(c @ x) ** 5, rel=1e-10)
    rows = powers_of_linear_rows(np.vstack([c, 2 * c]), 5)
    assert np.allclose(rows[1], 2 ** 5 * rows[0])


def test_compose_linear_is_substitution():
    rng = rand.rng_for(3, 6)
    m = 3
    p = HomogeneousPoly(4, m, rand.crandn(rng, basis_size(4, m)))
    A = rand.crandn(rng, m, m)
    q = compose_linear(p, A)
    for _ in range(4):
        x = rand.crandn(rng, m)
        assert q(x) == pytest.approx(p(A @ x), rel=1e-9)


def test_monomial_poly_roundtrip():
    p = monomial_poly((1, 2, 0))
    assert p.degree == 3 and p.num_vars == 3
    assert p((1.0, 1.0, 7.0)) == pytest.approx(1.0)
    assert p((2.0, 3.0, 0.0)) == pytest.approx(2 * 9)


def test_poly_vector_from_summands_evaluates():
    rng = rand.rng_for(3, 7)
    k, m, degrees = 4, 3, (2, 3)
    ells = rand.crandn(rng, k, m)
    lams = rand.crandn(rng, k, len(degrees))
    f = PolyVector.from_summands(ells, lams, degrees)
    x = rand.crandn(rng, m)
    want = np.array([sum(lams[i, j] * complex(ells[i] @ x) ** d for i in range(k))
                     for j, d in enumerate(degrees)])
    assert np.allclose(f(x), want, rtol=1e-10)


def test_poly_vector_validation():
    rng = rand.rng_for(3, 8)
    good = random_poly_vector((2, 3), 3, rng)
    assert good.degrees == (2, 3)
    with pytest.raises(ValueError):
        PolyVector((good.parts[1], good.parts[0]))   # descending degrees
    with pytest.raises(ValueError):
        PolyVector.from_concat((1, 2), 3, np.zeros(9))  # degree below 2
    with pytest.raises(ValueError):
        PolyVector.from_concat((2, 3), 3, np.zeros(5))  # wrong length


def test_poly_vector_json_roundtrip(tmp_path):
    rng = rand.rng_for(3, 9)
    f = random_poly_vector((2, 2, 4), 3, rng)
    path = tmp_path / "f.json"
    f.save(path)
    g = PolyVector.load(path)
    assert g.degrees == f.degrees
    assert np.array_equal(g.coeffs_concat(), f.coeffs_concat())


def test_concat_roundtrip():
    rng = rand.rng_for(3, 10)
    f = random_poly_vector((3, 3, 4), 3, rng)
    g = PolyVector.from_concat(f.degrees, f.num_vars, f.coeffs_concat())
    assert np.array_equal(g.coeffs_concat(), f.coeffs_concat())


def test_coeffs_are_immutable():
    rng = rand.rng_for(3, 11)
    f = random_poly_vector((2,), 2, rng)
    with pytest.raises(ValueError):
        f.parts[0].coeffs[0] = 1.0
