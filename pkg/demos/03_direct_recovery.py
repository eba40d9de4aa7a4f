"""Recovering a decomposition directly through apolarity.

For an identifiable case the k linear forms can be cut out as the zeros
of polynomials apolar to the input, with no continuation at all.  The
key object is a contraction matrix: its rows are indexed by a space of
auxiliary sections, its columns by the input's coefficients, and its
kernel consists of the sections vanishing on all k points.

This script walks through the two flavors on the plane and checks the
answer against a decomposition we planted ourselves.
"""
import numpy as np

from waringvec import (CaseSpec, HomogeneousPoly, PolyVector,
                       WaringDecomposition, base_locus, canonical_point,
                       decompose, default_bundle, nonabelian_matrix, rand)


def plant(degrees, num_vars, k, seed):
    rng = rand.rng_for(seed, 1000)
    ells = rand.crandn(rng, k, num_vars)
    lams = rand.crandn(rng, k, len(degrees))
    f = PolyVector.from_summands(ells, lams, tuple(degrees))
    return f, WaringDecomposition(tuple(degrees), ells, lams).canonical()


# --- flavor 1: a line bundle, i.e. the classical catalecticant -------------
#
# Four ternary quadrics, k = 4.  Degree-2 polynomials apolar to all four
# form a 2-dimensional space: a pencil of conics through the 4 points.

case = CaseSpec(2, (2, 2, 2, 2))
f, truth = plant(case.degrees, case.num_vars, case.k, seed=7)

bundle = default_bundle(case)
print(f"case {case.degrees}, k = {case.k}, bundle {bundle.label()}: "
      f"rank {bundle.rank}, kernel dim {bundle.expected_kernel_dim}, "
      f"{bundle.expected_points} base points")

C = nonabelian_matrix(f, bundle)
rank, gap = C.numerical_rank()
print(f"contraction: source dim {C.source_dim}, target dim {C.entries.shape[1 - C.source_axis]}, "
      f"rank {rank}, singular value gap {gap:.1e}")

K = C.kernel()
conics = [HomogeneousPoly(bundle.twist, case.num_vars, K[:, i])
          for i in range(K.shape[1])]
pts = base_locus(conics, bundle)
print(f"base locus of the kernel pencil: {len(pts)} points")

# every planted direction appears among the recovered points (projective
# points only match up to scale, so compare canonical representatives)
for ell in truth.forms:
    rep, _ = canonical_point(ell)
    err = min(np.max(np.abs(rep - canonical_point(p)[0])) for p in pts)
    assert err < 1e-7, err
print("all planted directions recovered")

# --- flavor 2: the quotient bundle, for cases the catalecticant misses -----
#
# (3, 3, 4) with k = 7: no line bundle has a 2-dimensional kernel here, but
# sections of the twisted quotient bundle do the job.  A section is a pair
# of degree-2 form triples up to Euler relations; its zeros are cut out by
# the 2x2 minors of a 2x3 matrix of forms, and a generic section of this
# bundle has exactly 7 of them.

case = CaseSpec(2, (3, 3, 4))
f, truth = plant(case.degrees, case.num_vars, case.k, seed=7)

bundle = default_bundle(case)
print(f"\ncase {case.degrees}, k = {case.k}, bundle {bundle.label()}: "
      f"rank {bundle.rank}, kernel dim {bundle.expected_kernel_dim}, "
      f"{bundle.expected_points} base points")

C = nonabelian_matrix(f, bundle)
rank, gap = C.numerical_rank()
print(f"contraction: source dim {C.source_dim}, target dim {C.entries.shape[1 - C.source_axis]}, "
      f"rank {rank}, singular value gap {gap:.1e}")

# --- end to end -------------------------------------------------------------

for degrees in [(2, 2, 2, 2), (2, 3), (3, 3, 4)]:
    case = CaseSpec(2, degrees)
    f, truth = plant(degrees, 3, case.k, seed=11)
    got = decompose(f)
    assert got.same_as(truth, tol=1e-7)
    print(f"decompose{degrees}: recovered all {got.k} summands, "
          f"residual {got.residual:.1e}")
