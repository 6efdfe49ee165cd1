"""Strengthening set-packing rows with the conflict graph.

A set-packing row says "at most one of these"; its variables form a
clique.  If the conflict graph shows more variables conflicting with all
of them, the row can be extended in place, and any other set-packing row
whose clique lands inside the extension becomes redundant.
"""

from cgcuts import MilpInstance, Row, Variable, build, strengthen, write_mps

variables = [Variable(f"x{i}", 0, 1, True) for i in range(1, 7)]
rows = [
    Row("k1", [(0, -4.0), (1, 4.0), (2, 5.0), (3, 6.0), (4, 7.0), (5, 10.0)], "<=", 6.0),
    Row("p1", [(1, 1.0), (2, 1.0), (3, 1.0)], "<=", 1.0),   # x2 + x3 + x4 <= 1
    Row("p2", [(1, 1.0), (4, 1.0)], "<=", 1.0),             # x2 + x5      <= 1
]
inst = MilpInstance(variables, rows, name="DEMO2")

print("before:")
for r in inst.rows:
    print("  ", r.name, r.coeffs, r.sense, r.rhs)

g = build(inst)
report = strengthen(inst, g, alpha_max=128)

print("\nextended (row index, literals added):", report.extended)
print("removed row indices:", report.removed_rows)

print("\nafter:")
for r in report.instance.rows:
    print("  ", r.name, r.coeffs, r.sense, r.rhs)

# The knapsack row k1 supplies the conflicts that let p1 grow into
# x2+x3+x4+x5+x6 <= 1, which dominates p2: three rows become two, and the
# survivor is strictly tighter in the LP relaxation.
print("\nstrengthened model as MPS:\n")
print(write_mps(report.instance))
