"""Robustness indices over the family of compatible evaluations.

When several utility variants are compatible with the stated card counts
(one variant per criterion, from enumerating extractions or sampling the
continuous polytope), every alternative is evaluated under each combination
of variants.  The rank acceptability index b_k(a) is the share of
combinations placing alternative a at rank k; the pairwise winning index
p(a_i, a_j) is the share where a_i strictly beats a_j.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import prod
from typing import Sequence

import numpy as np

from .capacity import TwoAdditiveCapacity
from .errors import ComboExplosionError

#: Enumerating more combinations than this requires sampling mode.
DEFAULT_COMBO_LIMIT = 1_000_000


@dataclass(frozen=True)
class EvaluationCombination:
    """One variant pick per criterion and the resulting utility matrix
    (alternatives x criteria)."""

    variant_indices: tuple
    utilities: np.ndarray


def combination_count(variant_columns: Sequence[Sequence[np.ndarray]]) -> int:
    return prod(len(v) for v in variant_columns)


def enumerate_combinations(
    variant_columns: Sequence[Sequence[np.ndarray]],
    limit: int = DEFAULT_COMBO_LIMIT,
) -> list[EvaluationCombination]:
    """Full Cartesian product of per-criterion utility columns, in
    deterministic index order.

    ``variant_columns[c]`` holds, for criterion c, one utility column per
    compatible table (each column has one value per alternative).
    """
    if any(len(v) == 0 for v in variant_columns):
        raise ValueError("every criterion needs at least one utility variant")
    count = combination_count(variant_columns)
    if count > limit:
        raise ComboExplosionError(count, limit)
    combos = []
    for indices in itertools.product(*(range(len(v)) for v in variant_columns)):
        matrix = np.column_stack([variant_columns[c][i] for c, i in enumerate(indices)])
        combos.append(EvaluationCombination(variant_indices=indices, utilities=matrix))
    return combos


def sample_combinations(
    variant_columns: Sequence[Sequence[np.ndarray]],
    n: int,
    seed: int,
) -> list[EvaluationCombination]:
    """Uniform independent draws over the product, for families past the
    enumeration limit; deterministic for a given seed."""
    rng = np.random.default_rng(seed)
    combos = []
    sizes = [len(v) for v in variant_columns]
    for _ in range(n):
        indices = tuple(int(rng.integers(s)) for s in sizes)
        matrix = np.column_stack([variant_columns[c][i] for c, i in enumerate(indices)])
        combos.append(EvaluationCombination(variant_indices=indices, utilities=matrix))
    return combos


@dataclass(frozen=True)
class SmaaResult:
    """Rank acceptability b (alternative x rank) and pairwise winning p
    (alternative x alternative), as percentages, plus the raw counts."""

    b: np.ndarray
    p: np.ndarray
    b_counts: np.ndarray
    p_counts: np.ndarray
    combination_count: int
    seed: int | None = None

    def to_dict(self) -> dict:
        out = {
            "combination_count": self.combination_count,
            "b": [[round(x, 2) for x in row] for row in self.b],
            "p": [[round(x, 2) for x in row] for row in self.p],
        }
        if self.seed is not None:
            out["seed"] = self.seed
        return out


def _capacity_arrays(cap: TwoAdditiveCapacity):
    weights = np.array([cap.mobius_singletons[g] for g in cap.criteria])
    index = {g: k for k, g in enumerate(cap.criteria)}
    pairs = [(index[i], index[j], m) for pair, m in cap.mobius_pairs.items() for i, j in [tuple(pair)]]
    return weights, pairs


def evaluate_matrix(utilities: np.ndarray, cap: TwoAdditiveCapacity) -> np.ndarray:
    """Choquet value of every row of a utility matrix, via the 2-additive
    Mobius form (the vectorized twin of capacity.choquet_value)."""
    weights, pairs = _capacity_arrays(cap)
    values = utilities @ weights
    for i, j, m in pairs:
        values = values + m * np.minimum(utilities[:, i], utilities[:, j])
    return values


def run_smaa(
    combos: Sequence[EvaluationCombination],
    cap: TwoAdditiveCapacity,
    seed: int | None = None,
) -> SmaaResult:
    """Evaluate every combination and accumulate both index families.

    Ties share the best rank and count for neither side of the pairwise
    index.  Accumulation is over integer counts, so the result does not
    depend on combination order.
    """
    if not combos:
        raise ValueError("at least one combination is required")
    n_alt = combos[0].utilities.shape[0]
    b_counts = np.zeros((n_alt, n_alt), dtype=np.int64)
    p_counts = np.zeros((n_alt, n_alt), dtype=np.int64)
    for combo in combos:
        values = evaluate_matrix(combo.utilities, cap)
        beats = values[:, None] > values[None, :]
        ranks = beats.sum(axis=0)  # number of strictly better alternatives
        for a in range(n_alt):
            b_counts[a, ranks[a]] += 1
        p_counts += beats.astype(np.int64)
    total = len(combos)
    return SmaaResult(
        b=100.0 * b_counts / total,
        p=100.0 * p_counts / total,
        b_counts=b_counts,
        p_counts=p_counts,
        combination_count=total,
        seed=seed,
    )


def rank_acceptability(combos: Sequence[EvaluationCombination], cap: TwoAdditiveCapacity) -> np.ndarray:
    """b_k(a): percentage of combinations ranking alternative a at position k
    (rows: alternatives, columns: ranks, best first)."""
    return run_smaa(combos, cap).b


def pairwise_winning(combos: Sequence[EvaluationCombination], cap: TwoAdditiveCapacity) -> np.ndarray:
    """p(a_i, a_j): percentage of combinations where a_i strictly beats a_j;
    the diagonal is zero."""
    return run_smaa(combos, cap).p
