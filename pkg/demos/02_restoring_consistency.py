"""Detecting an inconsistent judgment and listing every minimal way out.

A decision maker who judges all ten pairs of five levels will sooner or
later contradict the additivity condition.  Rather than silently averaging
the contradiction away, the solver names the violated triples and
enumerates every inclusion-minimal set of judgments whose revision restores
consistency -- material for a dialogue, not a fiat.
"""

from cardtable import check_consistency, enumerate_repairs
from cardtable.quarry import inconsistent_example

table = inconsistent_example()

print("stated table:")
for p in range(1, 5):
    print("  " + "  ".join(f"e{p}{q}={table.exact_value(p, q):g}" for q in range(p + 1, 6)))

print("\nviolated triples:")
for v in check_consistency(table):
    print(f"  e{v.p}{v.k} + e{v.k}{v.q} + 1 = {v.lhs:g}  but  e{v.p}{v.q} = {v.rhs:g}")

print("\nall minimal repairs (each a different conversation to have):")
for i, solution in enumerate(enumerate_repairs(table), start=1):
    changes = ", ".join(
        f"e{p}{q}: {table.exact_value(p, q):g} -> {solution.repaired.exact_value(p, q):g}"
        for p, q in sorted(solution.modified)
    )
    print(f"  #{i} ({solution.z} change{'s' if solution.z != 1 else ''}): {changes}")

print("\nafter these, no further minimal repair set exists.")
