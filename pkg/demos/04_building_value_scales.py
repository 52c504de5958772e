"""From card counts to utilities: interval scales and ratio weights.

Anchoring two reference levels (here the worst at 0 and the best at 100)
turns a consistent table into an interval scale: one card unit is worth
alpha = 100 / (e_1t + 1), and each level sits a whole number of units up.
Numeric criteria interpolate linearly between the level coordinates.
Rankings of objects (criteria, dummy projects) instead anchor the
top/bottom ratio z, giving ratio-scale weights.
"""

from cardtable import build_interval_scale, build_ratio_weights, interpolate
from cardtable.quarry import costs_table, services_accepted

print("== interval scale for the cost criterion (anchors: 1000 -> 0, 0 -> 100) ==")
scale = build_interval_scale(costs_table(), 1, 5, 0.0, 100.0)
print(f"unit value alpha = {scale.alpha:g}")
for label, u in zip(scale.labels, scale.utilities):
    print(f"  u({label} kEUR) = {u:g}")
print("interpolated performances:")
for cost in (30, 45, 90, 120, 900):
    print(f"  u({cost} kEUR) = {interpolate(scale, cost):g}")

print("\n== interval scale for a verbal criterion ==")
verbal = build_interval_scale(services_accepted(), 1, 7, 0.0, 100.0)
print(f"unit value alpha = {verbal.alpha:.3f}")
for label, u in zip(verbal.labels, verbal.utilities):
    print(f"  u({label}) = {u:.3f}")

print("\n== ratio weights from a ranking with blank cards ==")
# four classes separated by (2, 1, 0, 3) cards; the top is 11x the bottom
weights = build_ratio_weights((2, 1, 0, 3), base=1.0, z=11.0)
print(f"unit value alpha = {weights.alpha:g}")
for h, w in enumerate(weights.weights, start=1):
    print(f"  w(class {h}) = {w:g}")
print(f"top/bottom ratio: {weights.weights[-1] / weights.weights[0]:g}")
