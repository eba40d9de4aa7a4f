"""Reproducing the bundled results table.

The package ships a registry of 24 benchmark rows: defective cases,
identifiable cases, exact monodromy counts, closed-form counts, two
lower bounds, and two rows whose counts are still open.  run_table
re-derives each row from scratch and compares with the recorded value.

Rows are tiered by cost so that a quick pass stays quick:

  fast      defect checks and closed-form rows, seconds in total
  gating    monodromy counts up to a few minutes each
  extended  the two big saturations (56 and 45), tens of minutes
  full      everything, including rows that only report lower bounds

This script runs the fast tier; raise the tier to reproduce more.
"""
from waringvec import load_table, run_table
from waringvec.tables import format_reports

rows = load_table()
print(f"registry: {len(rows)} rows")
for row in rows:
    degs = ",".join(map(str, row.degrees))
    print(f"  {row.index:2d}  n={row.n} ({degs[:40]})  {row.expected_summary()}")

print("\nfast tier, seed 0:")
reports = run_table(tier="fast")
print(format_reports(reports))

bad = [rep for rep in reports if rep.status == "fail"]
print(f"\n{len(reports)} rows run, {len(bad)} failures")

# The same thing from the command line:
#   python -m waringvec table --tier fast
#   python -m waringvec table --tier gating --rows 1,7,11 --json
