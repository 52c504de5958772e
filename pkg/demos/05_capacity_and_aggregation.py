"""Eliciting interacting criterion weights and aggregating with them.

When criteria interact, plain weighted sums misjudge alternatives that are
strong on redundant criteria or balanced across complementary ones.  The
fix: rank dummy projects (each at the top of one criterion, or of one
declared interacting pair, and at the bottom elsewhere) with blank cards
and a top/bottom ratio z.  The corrected, normalized project values become
the Mobius coefficients of a 2-additive capacity, and alternatives are
aggregated with the Choquet integral.
"""

from cardtable import capacity_from_dcm, choquet_value, mobius_to_capacity
from cardtable.quarry import quarry_project

project = quarry_project()
elicited = project.capacity()
capacity = elicited.capacity

print("dummy-project ranking of the quarry study: z = 8, cards (1,1,0,1,2,4)")
print("\nelicited Mobius coefficients and capacities:")
for g in capacity.criteria:
    print(f"  {g}: m = {capacity.mobius_singletons[g]:+.4f}   mu = {capacity.mu([g]):.4f}")
for pair, m in sorted(capacity.mobius_pairs.items(), key=lambda kv: sorted(kv[0])):
    i, j = sorted(pair)
    kind = "negative (redundant)" if m < 0 else "positive (complementary)"
    print(f"  {i}+{j}: m = {m:+.4f}   mu = {capacity.mu(pair):.4f}   {kind} interaction")

print(f"\nvalidity: {'all monotonicity and normalization conditions hold' if not elicited.violations else elicited.violations}")
print(f"mu of all criteria together: {mobius_to_capacity(capacity, capacity.criteria):.4f}")

print("\nChoquet values of the five projects (base evaluation):")
values = project.evaluate()
for alt in sorted(values, key=values.get, reverse=True):
    label = next(a.label for a in project.alternatives if a.id == alt)
    print(f"  {alt} ({label}): {values[alt]:.4f}")

print("\nwith no interacting pairs the same machinery is a plain weighted sum:")
from cardtable import DummyProjectRanking

swing = DummyProjectRanking(
    criteria=("speed", "cost", "comfort"), pairs=(),
    classes=(("cost",), ("comfort",), ("speed",)), cards=(1, 2), z=5.0,
)
swing_cap = capacity_from_dcm(swing).capacity
print("  weights:", {g: round(m, 4) for g, m in swing_cap.mobius_singletons.items()})
print("  value of (60, 40, 80):", round(choquet_value([60, 40, 80], swing_cap), 4))
