"""Two families with closed-form answers.

Most counts in this toolkit come out of numerical monodromy, but two
infinite families are understood exactly, and they make good sanity
anchors for everything else.
"""
from waringvec import CaseSpec, pair_lower_bound, veronese_count
from waringvec.cli import run_pair_analysis

# --- family 1: s generic forms of the same degree d --------------------------
#
# With s = binom(d + n, n) - n forms the case is perfect with k = s, and
# every decomposition picks s points out of the d^n common zeros of n
# forms apolar to all components: count = binom(d^n, s) exactly.

print("same-degree families, count = C(d^n, s):")
for d, n in [(2, 3), (3, 2), (2, 4), (4, 2), (3, 3), (5, 2), (6, 2)]:
    vc = veronese_count(d, n)
    case = CaseSpec(n, (d,) * vc.forms)
    assert case.k == vc.k
    print(f"  d={d} n={n}: {vc.forms} forms, k={vc.k}, count = {vc.count}")

# --- family 2: ternary pairs of consecutive even/odd degree ------------------
#
# Degrees (2t, 2t+1) on the plane are perfect with k = (t+1)^2 and have at
# least (3t-2)(t-1)/2 + 1 decompositions.  At t = 1 the bound is 1 and is
# attained: the pair (2, 3) is identifiable.  At t = 2 the bound is 3 and
# monodromy confirms the count is exactly 3.

print("\nconsecutive-degree ternary pairs:")
for t in range(1, 6):
    case = CaseSpec(2, (2 * t, 2 * t + 1))
    print(f"  t={t}: degrees {case.degrees}, k={case.k}, "
          f"count >= {pair_lower_bound(t)}")

# live cross-check at t = 1 (the t = 2 count takes about a minute; pass
# count_max_t=2 to run it too)
report = run_pair_analysis(1, count_max_t=1)
print(f"\nt=1 monodromy check: count {report['count']} vs bound "
      f"{report['bound']}, ok={report['ok']}")
