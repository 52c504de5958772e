"""Working with partial information: gaps, ranges, and their repair.

The decision maker may skip comparisons ("?") or give ranges ([lo, hi]).
The solver answers three questions: can the stated judgments be completed
consistently at all; if not, which fewest judgments must move; and how many
precise consistent tables remain compatible once they can.
"""

from cardtable import (
    Exact,
    Interval,
    complete_missing,
    count_extractable,
    enumerate_completions,
    enumerate_precise_extractions,
    interval_repair,
    mixed_repair,
)
from cardtable.quarry import (
    interval_first_example,
    interval_second_example,
    missing_first_example,
    missing_second_example,
    mixed_example,
)

print("== missing judgments ==")
first = complete_missing(missing_first_example())
print(f"sparse table #1: z = {first.z}; the judgment on {sorted(first.flagged)[0]} "
      f"must move by {first.deltas[(3, 5)]}")

accepted = missing_first_example().replace_cells({(3, 5): Exact(4)})
family = enumerate_completions(accepted, domain_bound=20)
print(f"after accepting the change: {len(family.tables)} completions up to card count 20 "
      f"(the family is {'finite' if family.complete else 'infinite: one gap is unconstrained'})")

second = complete_missing(missing_second_example())
unique = enumerate_completions(missing_second_example())
print(f"sparse table #2: z = {second.z}, and the completion is "
      f"{'unique' if len(unique.tables) == 1 else 'not unique'}")

print("\n== interval judgments ==")
repair = interval_repair(interval_first_example())
(pq,) = repair.modified
print(f"interval table #1: z = {repair.z}; bound on {pq} becomes {repair.new_bounds[pq]}")

tables = enumerate_precise_extractions(interval_second_example())
grid = count_extractable(interval_second_example())
print(f"interval table #2: consistent as stated; {len(tables)} of the {grid:,} "
      "tables in the value grid are consistent")

print("\n== both at once ==")
mixed = mixed_repair(mixed_example())
extractions = enumerate_precise_extractions(mixed_example())
print(f"mixed table: z = {mixed.z}; witness found, plus {len(extractions) - 1} "
      "further compatible precise tables")
