"""Counting decompositions by monodromy.

When a case is not identifiable the generic vector has several
decompositions, and no single kernel computation can see them all.
Monodromy does: solving one random instance, dragging its solution
around a loop in instance space, and landing back on the same instance
usually lands on a DIFFERENT decomposition.  Repeating with fresh loops
populates the full set; the run stops once `stall` consecutive loops
find nothing new, or once the loop budget runs out (in which case the
count is only a lower bound and the status says so).

Runtime note: the ternary count below tracks a few thousand paths and
takes tens of seconds on one core.
"""
import time

from waringvec import CaseSpec, count_decompositions, decompositions_of
from waringvec.polycore import PolyVector
from waringvec import rand

# --- a binary warm-up: (2, 5) is identifiable, the count must be 1 ---------

case = CaseSpec(1, (2, 5))
res = count_decompositions(case, seed=0)
print(f"{case.degrees} on n={case.n}: count {res.count} ({res.status}, "
      f"{res.loops} loops, {res.path_failures} failed paths)")

# --- four ternary forms of degrees (2, 3, 3, 3): exactly two ----------------

case = CaseSpec(2, (2, 3, 3, 3))
t0 = time.time()
res = count_decompositions(case, seed=0)
print(f"{case.degrees} on n={case.n}: count {res.count} ({res.status}, "
      f"{res.loops} loops, {time.time() - t0:.0f}s)")

# the registry keeps the actual solutions of the solved random instance
for i, dec in enumerate(res.registry.solutions):
    print(f"  decomposition {i + 1}: k = {dec.k}, first form "
          f"{dec.forms[0].round(3)}")

# --- from counts to concrete answers ----------------------------------------
#
# decompositions_of runs the same saturation on a random instance, then
# tracks every solution to a vector of YOUR choosing along one final
# parameter path.  Here we plant a rank-3 vector and get it back.

rng = rand.rng_for(3, 1000)
ells = rand.crandn(rng, 3, 2)
lams = rand.crandn(rng, 3, 2)
f = PolyVector.from_summands(ells, lams, (2, 2))

decs = decompositions_of(f, seed=0)
print(f"\nplanted binary (2, 2) vector: {len(decs)} decomposition(s) found")
for dec in decs:
    print(f"  residual {dec.residual:.1e}")

# Larger counts from the same machinery (minutes each, try them yourself):
#   count_decompositions(CaseSpec(2, (4, 5)))      -> 3
#   count_decompositions(CaseSpec(2, (3, 4, 4)))   -> 4
#   count_decompositions(CaseSpec(3, (3, 3, 3)))   -> 56
