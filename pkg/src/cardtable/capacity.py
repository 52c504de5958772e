"""2-additive capacities elicited with cards, and the Choquet integral.

The importance of criteria (and of the declared interacting pairs) is
elicited by ranking dummy projects: one project per criterion at the top
level of that criterion alone, and one per interacting pair at the top level
of both.  Blank cards between ranking classes plus the top/bottom ratio z
give each project a ratio-scale value w; pair projects are then corrected by
subtracting their two singletons, and normalizing yields the Mobius
coefficients of a 2-additive capacity.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Mapping, NamedTuple, Sequence

from .errors import BadRankingError, CapacityInvalidError
from .scales import build_ratio_weights
from .table import PairwiseTable, gaps_from_table

ProjectId = object  # a criterion name, or a frozenset of two criterion names


def pair_id(i: str, j: str) -> frozenset:
    if i == j:
        raise ValueError("an interacting pair needs two distinct criteria")
    return frozenset((i, j))


@dataclass(frozen=True)
class TwoAdditiveCapacity:
    """Mobius representation: coefficients on singletons and on the declared
    interacting pairs; everything larger carries none."""

    criteria: tuple
    mobius_singletons: dict
    mobius_pairs: dict  # frozenset({i, j}) -> m

    def mobius(self, subset: Iterable[str]) -> float:
        s = frozenset(subset)
        if len(s) == 1:
            return self.mobius_singletons.get(next(iter(s)), 0.0)
        if len(s) == 2:
            return self.mobius_pairs.get(s, 0.0)
        return 0.0

    def mu(self, subset: Iterable[str]) -> float:
        """Capacity of a criterion subset: the sum of Mobius coefficients of
        its singletons and contained interacting pairs."""
        s = set(subset)
        total = sum(m for g, m in self.mobius_singletons.items() if g in s)
        total += sum(m for pair, m in self.mobius_pairs.items() if pair <= s)
        return total

    def to_dict(self) -> dict:
        return {
            "criteria": list(self.criteria),
            "singletons": [
                {"criterion": g, "m": self.mobius_singletons[g], "mu": self.mu([g])}
                for g in self.criteria
            ],
            "pairs": [
                {"criteria": sorted(pair), "m": m, "mu": self.mu(pair)}
                for pair, m in sorted(self.mobius_pairs.items(), key=lambda kv: sorted(kv[0]))
            ],
        }


def mobius_to_capacity(cap: TwoAdditiveCapacity, subset: Iterable[str]) -> float:
    """mu(T) for any criterion subset T; mu(empty) = 0 and mu(G) = 1."""
    return cap.mu(subset)


class CapacityViolation(NamedTuple):
    """A failed capacity condition: for ``criterion`` and the partner subset
    ``subset``, the Mobius mass ``value`` is negative (monotonicity), or the
    normalization total differs from 1 (criterion is then None)."""

    criterion: str | None
    subset: frozenset
    value: float


def validate_2additive(cap: TwoAdditiveCapacity, tol: float = 1e-9) -> list[CapacityViolation]:
    """All violated monotonicity/normalization conditions; empty iff valid.

    Monotonicity only needs checking at the worst case: each criterion
    together with all of its negatively interacting partners.
    """
    out = []
    for g in cap.criteria:
        worst = [pair for pair, m in cap.mobius_pairs.items() if g in pair and m < 0]
        value = cap.mobius_singletons.get(g, 0.0) + sum(cap.mobius_pairs[p] for p in worst)
        if value < -tol:
            partners = frozenset(next(iter(p - {g})) for p in worst)
            out.append(CapacityViolation(g, partners, value))
    total = sum(cap.mobius_singletons.values()) + sum(cap.mobius_pairs.values())
    if abs(total - 1.0) > tol:
        out.append(CapacityViolation(None, frozenset(), total))
    return out


@dataclass(frozen=True)
class DummyProjectRanking:
    """Ranking of the dummy projects, worst class first, with the blank cards
    between consecutive classes and the top/bottom ratio z."""

    criteria: tuple
    pairs: tuple  # declared interacting pairs, each a frozenset
    classes: tuple  # tuple of tuples of project ids
    cards: tuple
    z: float
    ell: float = 1.0
    sign_hints: dict = field(default_factory=dict)  # frozenset -> +1 | -1

    def __post_init__(self):
        expected = set(self.criteria) | set(self.pairs)
        seen: list = []
        for cls in self.classes:
            seen.extend(cls)
        if len(seen) != len(set(map(_freeze, seen))):
            raise BadRankingError("a project appears twice in the ranking")
        if set(map(_freeze, seen)) != set(map(_freeze, expected)):
            raise BadRankingError("the ranking must place every singleton and declared pair exactly once")
        if len(self.cards) != len(self.classes) - 1:
            raise BadRankingError("one card count is needed between each pair of consecutive classes")
        if any(c < 0 for c in self.cards):
            raise BadRankingError("card counts must be nonnegative")
        if self.z < 1:
            raise BadRankingError(f"ratio z must be >= 1, got {self.z}")
        if len(self.classes) == 1 and self.z != 1:
            raise BadRankingError("a single class forces z = 1")

    @classmethod
    def from_table(
        cls,
        criteria: Sequence[str],
        pairs: Sequence[Iterable[str]],
        classes: Sequence[Sequence[ProjectId]],
        table: PairwiseTable,
        z: float,
        ell: float = 1.0,
        sign_hints: Mapping | None = None,
    ) -> "DummyProjectRanking":
        """Take the class separations from a full consistent comparison table
        over the ranking classes (its consecutive entries are the cards)."""
        if table.t != len(classes):
            raise BadRankingError("the table must have one level per ranking class")
        cards = gaps_from_table(table)
        return cls(
            criteria=tuple(criteria),
            pairs=tuple(frozenset(p) for p in pairs),
            classes=tuple(tuple(c) for c in classes),
            cards=tuple(cards),
            z=z,
            ell=ell,
            sign_hints=dict(sign_hints or {}),
        )


def _freeze(project: ProjectId):
    return frozenset(project) if not isinstance(project, str) else project


@dataclass(frozen=True)
class CapacityElicitation:
    """Capacity plus the elicitation trace: per-project values w, corrected
    values w_bar, capacities mu, and any failed validity conditions.  A
    violated condition does not raise; it is reported here for the dialogue
    with the decision maker."""

    capacity: TwoAdditiveCapacity
    w: dict
    w_bar: dict
    mu: dict
    total_w_bar: float
    violations: list
    sign_mismatches: list


def capacity_from_dcm(ranking: DummyProjectRanking) -> CapacityElicitation:
    """Elicit a 2-additive capacity from the dummy-project ranking.

    Class values come from the ratio-weight construction (base ell, ratio z);
    pair projects are corrected by subtracting their singletons, and the
    corrected values are normalized into Mobius coefficients.  Monotonicity
    and normalization are checked and reported, not enforced.
    """
    rw = build_ratio_weights(ranking.cards, base=ranking.ell, z=ranking.z)
    w: dict = {}
    for h, cls in enumerate(ranking.classes):
        for project in cls:
            w[_freeze(project)] = rw.weights[h]

    w_bar: dict = {}
    for g in ranking.criteria:
        w_bar[g] = w[g]
    for pair in ranking.pairs:
        i, j = sorted(pair)
        w_bar[pair] = w[pair] - w[i] - w[j]

    total = sum(w_bar.values())
    if total <= 0:
        raise BadRankingError("corrected project values sum to a nonpositive total")

    capacity = TwoAdditiveCapacity(
        criteria=tuple(ranking.criteria),
        mobius_singletons={g: w_bar[g] / total for g in ranking.criteria},
        mobius_pairs={pair: w_bar[pair] / total for pair in ranking.pairs},
    )
    mu = {k: w[k] / total for k in w}

    mismatches = []
    for pair, hint in ranking.sign_hints.items():
        m = capacity.mobius_pairs.get(frozenset(pair), 0.0)
        if hint > 0 and m <= 0 or hint < 0 and m >= 0:
            mismatches.append((frozenset(pair), hint, m))

    return CapacityElicitation(
        capacity=capacity,
        w=w,
        w_bar=w_bar,
        mu=mu,
        total_w_bar=total,
        violations=validate_2additive(capacity),
        sign_mismatches=mismatches,
    )


def choquet_value(utilities: Sequence[float] | Mapping[str, float], cap: TwoAdditiveCapacity) -> float:
    """Choquet integral of a utility vector with respect to the capacity.

    Both formulations are evaluated -- the sorted-differences form over the
    upper sets N_j, and the 2-additive Mobius form
    sum m({g_j}) u_j + sum m({g_i, g_j}) min(u_i, u_j) -- and must agree to
    1e-9.  Raises CapacityInvalidError on an invalid capacity.
    """
    violations = validate_2additive(cap)
    if violations:
        raise CapacityInvalidError(f"capacity fails {len(violations)} condition(s): {violations}")
    if isinstance(utilities, Mapping):
        u = [utilities[g] for g in cap.criteria]
    else:
        u = list(utilities)
        if len(u) != len(cap.criteria):
            raise ValueError("one utility per criterion required")

    c_mobius = sum(cap.mobius_singletons[g] * u[k] for k, g in enumerate(cap.criteria))
    index = {g: k for k, g in enumerate(cap.criteria)}
    for pair, m in cap.mobius_pairs.items():
        i, j = tuple(pair)
        c_mobius += m * min(u[index[i]], u[index[j]])

    # sorted-differences form; ties keep criterion order (the value does not
    # depend on how ties are broken, only the intermediate sets do)
    order = sorted(range(len(u)), key=lambda k: (u[k], k))
    c_capacity = 0.0
    previous = 0.0
    for pos, k in enumerate(order):
        upper = frozenset(cap.criteria[i] for i in order[pos:])
        c_capacity += (u[k] - previous) * cap.mu(upper)
        previous = u[k]

    if abs(c_capacity - c_mobius) > 1e-9:
        raise AssertionError(
            f"Choquet forms disagree: capacity form {c_capacity!r} vs Mobius form {c_mobius!r}"
        )
    return c_mobius
