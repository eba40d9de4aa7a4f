"""Screening degree tuples for perfectness.

A vector of r generic homogeneous forms in n+1 variables, of degrees
a_1, ..., a_r, has N = sum_j binom(a_j + n, n) coefficients in total.
Writing each form as a combination of powers of the same k linear forms
spends k(r + n) parameters, so a finite count of decompositions is only
possible when (r + n) divides N.  Such cases are called perfect and
k = N / (r + n) is the expected generic rank.
"""
import itertools

from waringvec import CaseSpec, binary_identifiable, is_perfect

# --- a quick scan over small ternary tuples -------------------------------

print("perfect ternary cases (n = 2) with all degrees <= 4 and r <= 3:")
for r in (1, 2, 3):
    for degs in itertools.combinations_with_replacement(range(2, 5), r):
        k = is_perfect(2, degs)
        if k is not None:
            case = CaseSpec(2, degs)
            print(f"  degrees {degs}: N = {case.N:3d} = {k} * {r + 2}   k = {k}")

# The same tuple can be perfect in one ambient dimension and not another.
print()
for n in (1, 2, 3, 4):
    k = is_perfect(n, (3, 3, 4))
    status = f"perfect, k = {k}" if k is not None else "not perfect"
    print(f"(3, 3, 4) with n = {n}: {status}")

# --- binary forms: perfectness plus an identifiability test ----------------
#
# For n = 1 a perfect case has a unique generic decomposition exactly when
# k <= a_1 + 1, i.e. when the lowest-degree component alone already pins
# down the k points.

print()
print("binary cases:")
for degs in [(2, 2), (2, 5), (3, 4), (4, 5), (2, 2, 6, 6)]:
    case = CaseSpec(1, degs)
    if not case.perfect:
        print(f"  {degs}: not perfect")
        continue
    unique = binary_identifiable(degs)
    tag = "identifiable" if unique else f"k = {case.k} > a_1 + 1, several decompositions"
    print(f"  {degs}: perfect with k = {case.k}, {tag}")

# describe() packages the same numbers for programmatic use
print()
print(CaseSpec(2, (3, 3, 4)).describe())
