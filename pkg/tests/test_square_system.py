"""The square decomposition system: layout, Jacobian, startpoints, segments."""
from __future__ import annotations

import numpy as np
import pytest

from waringvec import rand
from waringvec.combinatorics import CaseSpec
from waringvec.errors import DegenerateCaseError
from waringvec.homotopy.systems import (ParameterSegment, SquareSystem,
                                        generate_startpoint, track_path)


def test_rejects_imperfect_case():
    with pytest.raises(ValueError):
        SquareSystem(CaseSpec(2, (3, 4)))   # N=25, r+n=4


def test_pack_unpack_roundtrip():
    sys = SquareSystem(CaseSpec(2, (3, 3, 4)))
    rng = rand.rng_for(8, 0)
    u = rand.crandn(rng, sys.size)
    ells, lams = sys.unpack(u)
    assert ells.shape == (7, 3) and lams.shape == (7, 3)
    assert np.all(ells[:, 0] == 1.0)
    assert np.allclose(sys.pack(ells, lams), u)
    # pack rescales arbitrary-gauge forms into the chart
    scales = 2.0 + rand.crandn(rng, 7)
    degs = np.array(sys.case.degrees)
    assert np.allclose(
        sys.pack(ells * scales[:, None], lams / scales[:, None] ** degs[None, :]), u)


def test_phi_matches_poly_vector():
    sys = SquareSystem(CaseSpec(2, (2, 3)))
    rng = rand.rng_for(8, 1)
    u = rand.crandn(rng, sys.size)
    ells, lams = sys.unpack(u)
    from waringvec.polycore import PolyVector
    f = PolyVector.from_summands(ells, lams, sys.case.degrees)
    assert np.allclose(sys.phi(u), f.coeffs_concat())
    assert np.max(np.abs(sys.residual(u, sys.phi(u)))) == 0.0


def test_jacobian_matches_central_differences():
    sys = SquareSystem(CaseSpec(2, (2, 3)))
    rng = rand.rng_for(8, 2)
    u = rand.crandn(rng, sys.size)
    J = sys.jacobian(u)
    h = 1e-6
    for col in range(sys.size):
        for part, delta in ((1.0, h), (1j, 1j * h)):
            e = np.zeros(sys.size, dtype=np.complex128)
            e[col] = delta
            fd = (sys.phi(u + e) - sys.phi(u - e)) / (2 * delta)
            scale = max(np.max(np.abs(J[:, col])), 1.0)
            assert np.max(np.abs(fd - J[:, col])) < 1e-6 * scale


def test_startpoint_solves_its_instance():
    for case in [CaseSpec(2, (3, 3, 4)), CaseSpec(1, (2, 5))]:
        sys = SquareSystem(case)
        p, u = generate_startpoint(sys, seed=1)
        assert np.max(np.abs(sys.residual(u, p))) == 0.0
        f = sys.poly_vector(p)
        dec = sys.decomposition(u)
        assert dec.residual_against(f) < 1e-12


def test_startpoint_is_deterministic():
    sys = SquareSystem(CaseSpec(2, (2, 3)))
    p1, u1 = generate_startpoint(sys, seed=3)
    p2, u2 = generate_startpoint(sys, seed=3)
    assert np.array_equal(p1, p2) and np.array_equal(u1, u2)


def test_startpoint_rejects_defective_case():
    # (2, 4) on three variables is 9-defective: the square system's
    # Jacobian is singular everywhere, so every draw fails the cond check
    with pytest.raises(DegenerateCaseError):
        generate_startpoint(CaseSpec(3, (2, 4)), seed=0)


def test_segment_endpoints_and_velocity():
    rng = rand.rng_for(8, 3)
    p0 = rand.crandn(rng, 6)
    p1 = rand.crandn(rng, 6)
    gamma = complex(np.exp(2j * np.pi * 0.3))
    seg = ParameterSegment(p0, p1, gamma)
    assert np.array_equal(seg.at(0.0), p0)     # exact, not just close
    assert np.allclose(seg.at(1.0), p1)
    h = 1e-7
    for t in (0.2, 0.7):
        fd = (seg.at(t + h) - seg.at(t - h)) / (2 * h)
        assert np.max(np.abs(fd - seg.velocity(t))) < 1e-6


def test_track_identity_segment_keeps_solution():
    sys = SquareSystem(CaseSpec(2, (2, 3)))
    p, u = generate_startpoint(sys, seed=4)
    res = track_path(sys, p, p, u, gamma=complex(np.exp(0.4j)))
    assert res.ok
    assert np.max(np.abs(res.u - u)) < 1e-8


def test_track_path_to_nearby_instance():
    sys = SquareSystem(CaseSpec(2, (2, 3)))
    p, u = generate_startpoint(sys, seed=5)
    rng = rand.rng_for(8, 4)
    q = p + 0.1 * rand.crandn(rng, p.size)
    res = track_path(sys, p, q, u, rng=rng)
    assert res.ok
    assert np.max(np.abs(sys.residual(res.u, q))) < 1e-9


def test_track_path_rejects_bad_start():
    sys = SquareSystem(CaseSpec(2, (2, 3)))
    p, u = generate_startpoint(sys, seed=6)
    with pytest.raises(ValueError):
        track_path(sys, p, p, u + 0.5)
