"""Independent brute-force oracles, deliberately sharing no code with the
library paths they check."""

from __future__ import annotations

import itertools
from fractions import Fraction


def entries_from_gaps(d: tuple, t: int) -> dict:
    """e_pq by direct summation of the defining formula."""
    out = {}
    for p in range(1, t):
        for q in range(p + 1, t + 1):
            out[(p, q)] = sum(d[r - 1] + 1 for r in range(p, q)) - 1
    return out


def consistent_by_triples(entries: dict, t: int) -> bool:
    """Check every triple equality directly."""
    for p in range(1, t - 1):
        for k in range(p + 1, t):
            for q in range(k + 1, t + 1):
                if entries[(p, k)] + entries[(k, q)] + 1 != entries[(p, q)]:
                    return False
    return True


_GRID_CACHE: dict = {}


def _entry_grid(t: int, gap_max: int):
    key = (t, gap_max)
    if key not in _GRID_CACHE:
        _GRID_CACHE[key] = [
            entries_from_gaps(d, t)
            for d in itertools.product(range(gap_max + 1), repeat=t - 1)
        ]
    return _GRID_CACHE[key]


def brute_force_repairs(table_entries: dict, t: int, gap_max: int = 9):
    """All inclusion-minimal modification sets over gap vectors with
    components <= gap_max, with the minimum cardinality.

    Returns (z_min, {frozenset: set of repaired-entry dicts}).
    """
    achievable: dict[frozenset, list[dict]] = {}
    for entries in _entry_grid(t, gap_max):
        modified = frozenset(pq for pq in entries if entries[pq] != table_entries[pq])
        achievable.setdefault(modified, []).append(entries)
    minimal = {
        s: tables
        for s, tables in achievable.items()
        if not any(other < s for other in achievable)
    }
    z_min = min(len(s) for s in minimal)
    return z_min, minimal


def choquet_by_subsets(utilities: list, singletons: dict, pairs: dict, criteria: list) -> float:
    """Sorted-differences Choquet value, with mu(T) summed subset by subset."""

    def mu(subset: frozenset) -> float:
        total = sum(m for g, m in singletons.items() if g in subset)
        total += sum(m for pair, m in pairs.items() if pair <= subset)
        return total

    order = sorted(range(len(utilities)), key=lambda i: utilities[i])
    value = 0.0
    previous = 0.0
    for pos, i in enumerate(order):
        upper = frozenset(criteria[j] for j in order[pos:])
        value += (utilities[i] - previous) * mu(upper)
        previous = utilities[i]
    return value


def random_valid_capacity(rng, n_criteria: int):
    """Rejection-sample a valid 2-additive capacity on named criteria."""
    criteria = [f"g{i+1}" for i in range(n_criteria)]
    while True:
        n_pairs = int(rng.integers(0, n_criteria))
        all_pairs = list(itertools.combinations(criteria, 2))
        rng.shuffle(all_pairs)
        chosen = [frozenset(p) for p in all_pairs[:n_pairs]]
        singles = {g: float(rng.uniform(0.0, 1.0)) for g in criteria}
        pairs = {p: float(rng.uniform(-0.5, 0.5)) for p in chosen}
        ok = True
        for g in criteria:
            worst = sum(m for p, m in pairs.items() if g in p and m < 0)
            if singles[g] + worst < 0:
                ok = False
                break
        total = sum(singles.values()) + sum(pairs.values())
        if not ok or total <= 1e-6:
            continue
        singles = {g: v / total for g, v in singles.items()}
        pairs = {p: v / total for p, v in pairs.items()}
        return criteria, singles, pairs


QUARRY_MOBIUS = {
    "g1": Fraction(29, 277),
    "g2": Fraction(50, 277),
    "g3": Fraction(50, 277),
    "g4": Fraction(64, 277),
    "g5": Fraction(43, 277),
    "g6": Fraction(15, 277),
}
QUARRY_MOBIUS_PAIRS = {
    frozenset(("g4", "g5")): Fraction(-22, 277),
    frozenset(("g1", "g5")): Fraction(48, 277),
}
