"""From consecutive card counts to a full comparison table.

The classic elicitation only asks how many blank cards separate each level
from the next.  Those consecutive counts generate every other entry: the
difference between levels p and q is worth e_pq + 1 units, and additivity
forces e_pq = e_pk + e_kq + 1 through any middle level k.
"""

from cardtable import check_consistency, complete_from_consecutive, export_bars, export_graph

consecutive = (1, 0, 3, 2)
table = complete_from_consecutive(consecutive)

print(f"consecutive cards between the 5 levels: {consecutive}")
print("\nfilled table (cards between every pair):")
for p in range(1, 5):
    row = "  ".join(f"e{p}{q}={table.exact_value(p, q):g}" for q in range(p + 1, 6))
    print("  " + row)

print("\nevery triple satisfies e_pk + e_kq + 1 = e_pq:",
      "yes" if not check_consistency(table) else "no")

print("\nthe same information as bar segments (length = cards + 1):")
for (p, q), length in export_bars(table):
    print(f"  ({p},{q}) " + "#" * int(length))

print("\n...and as a valued digraph (DOT):")
print(export_graph(table))
