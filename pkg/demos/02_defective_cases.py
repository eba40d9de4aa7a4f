"""Detecting defective cases with a tangent-space dimension probe.

Perfectness is only an arithmetic screen.  Some perfect cases are
defective: the joins of k generic rank-one pieces fill fewer than the
expected k(r + n) dimensions, the generic vector has NO finite
decomposition count, and any attempt to recover one must be refused.

secant_defect measures the actual dimension numerically: it draws k
random summands, stacks the tangent frames of the parameter map at each,
and reads off the rank of the stacked matrix.  The singular-value gap at
the rank boundary certifies the answer; an ambiguous gap is retried with
a fresh draw and eventually reported as inconclusive rather than guessed.
"""
from waringvec import CaseSpec, secant_defect

KNOWN_DEFECTIVE = [
    (3, (2, 4), 2),
    (2, (2, 2, 6), 4),
    (2, (2, 2, 4, 4), 2),
    (2, (2, 2, 2, 2, 2, 3), 3),
    (2, (2,) * 7 + (6,), 7),
    (2, (4,) * 14 + (6,), 6),
]

print(f"{'degrees':<34} {'k':>3} {'expected':>8} {'actual':>6} {'defect':>6}  gap")
for n, degrees, expected_delta in KNOWN_DEFECTIVE:
    case = CaseSpec(n, degrees)
    rep = secant_defect(case, case.k)
    assert rep.status == "ok", "gap stayed ambiguous"
    assert rep.defect == expected_delta
    label = f"{degrees} n={n}"
    print(f"{label:<34} {rep.k:>3} {rep.expected:>8} {rep.dim:>6} "
          f"{rep.defect:>6}  {rep.gap:.1e}")

# A non-defective case for contrast: full expected dimension, defect 0.
print()
case = CaseSpec(2, (3, 3, 4))
rep = secant_defect(case, case.k)
print(f"{case.degrees} n={case.n}: dim {rep.dim} of expected {rep.expected}, "
      f"defect {rep.defect} (gap {rep.gap:.1e})")

# The probe also works below the generic rank.  Sub-perfect secants of a
# well-behaved case grow by exactly (r + n) per added summand.
print()
for k in range(1, case.k + 1):
    rep = secant_defect(case, k)
    print(f"  k = {k}: dim {rep.dim} (defect {rep.defect})")
