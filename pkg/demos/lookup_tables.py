"""
Eilenberg-MacLane and Stiefel lookup tables
===========================================

The tables are cross-checked against each other with the universal
coefficient theorem before any of them is used.
"""

from linesplit.algebra import Z, cyclic
from linesplit.tables import em_cohomology, pi_2m2, stiefel_pi, table_rows, verify_uct

print(em_cohomology(Z, 5, 8))
print(em_cohomology(cyclic(4), 6, 7).generator_labels)

report = verify_uct()
print(f"{len(report.checks)} universal-coefficient checks, {len(report.violations)} violations")

# Low homotopy of the Stiefel manifold of 3-frames in C^8
for index in range(10, 15):
    print(f"pi_{index}(W(8, 3)) =", stiefel_pi(8, 3, index).value)

# The torsion order that feeds the r = 3 hypotheses
for m in (6, 8, 10, 12):
    entry = pi_2m2(m)
    print(f"m = {m:2d}: pi_(2m-2) = {entry.group}, n = {entry.n}")

header, rows = table_rows("pi", 8)
print(header, rows)
