"""Pairwise comparison tables of blank-card counts.

A table over t ordered levels stores, for every pair of levels p < q, the
number of blank cards separating them.  The difference of appreciation
between l_p and l_q is worth e_pq + 1 units, so a table is additively
consistent exactly when

    e_pk + e_kq + 1 = e_pq        for all p < k < q.

Every consistent table is generated by its consecutive entries: writing
d_r = e_{r,r+1} for the gap between neighbouring levels,

    e_pq = sum_{r=p}^{q-1} (d_r + 1) - 1,

which makes the gap vector d the canonical parameterization used by the
solver module.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterator, Mapping, NamedTuple, Sequence, Union

from .errors import NonExactCellError, NotConsistentError

#: Default ceiling on card counts.  The method itself puts no upper bound on
#: the number of blank cards; a finite ceiling keeps solver domains finite.
MAX_CARDS = 10_000


@dataclass(frozen=True)
class Exact:
    """A precise card count."""

    cards: float

    def __post_init__(self):
        if self.cards < 0:
            raise ValueError(f"card count must be nonnegative, got {self.cards}")


@dataclass(frozen=True)
class Interval:
    """An imprecise card count given as an inclusive range [lo, hi]."""

    lo: float
    hi: float

    def __post_init__(self):
        if self.lo < 0 or self.lo > self.hi:
            raise ValueError(f"bad interval [{self.lo}, {self.hi}]")


@dataclass(frozen=True)
class Missing:
    """No judgment supplied for the pair."""


MISSING = Missing()

Cell = Union[Exact, Interval, Missing]


class Violation(NamedTuple):
    """A violated consistency triple p < k < q: lhs = e_pk + e_kq + 1, rhs = e_pq."""

    p: int
    k: int
    q: int
    lhs: float
    rhs: float


def triples(t: int) -> Iterator[tuple[int, int, int]]:
    """All (p, k, q) with 1 <= p < k < q <= t; there are t(t-1)(t-2)/6 of them."""
    return combinations(range(1, t + 1), 3)


def pairs(t: int) -> Iterator[tuple[int, int]]:
    """All (p, q) with 1 <= p < q <= t, row-major."""
    return combinations(range(1, t + 1), 2)


def _pair_index(p: int, q: int, t: int) -> int:
    # row-major position of (p, q) within the strict upper triangle
    return (p - 1) * t - (p - 1) * p // 2 + (q - p - 1)


@dataclass(frozen=True)
class PairwiseTable:
    """Upper-triangular table of card-count cells over t ordered levels.

    Levels are indexed 1..t from worst to best.  Only pairs (p, q) with
    p < q are representable.  ``integer=False`` marks the continuous value
    domain used by hit-and-run sampling; integer and continuous cells are
    never mixed in one table.
    """

    t: int
    cells: tuple = field(default=())  # row-major over pairs()
    level_labels: tuple | None = None
    level_coordinates: tuple | None = None
    integer: bool = True

    def __post_init__(self):
        if self.t < 2:
            raise ValueError("a table needs at least two levels")
        n = self.t * (self.t - 1) // 2
        if len(self.cells) != n:
            raise ValueError(f"expected {n} cells for t={self.t}, got {len(self.cells)}")
        if self.level_labels is not None and len(self.level_labels) != self.t:
            raise ValueError("one label per level required")
        if self.level_coordinates is not None:
            coords = self.level_coordinates
            if len(coords) != self.t:
                raise ValueError("one coordinate per level required")
            diffs = [b - a for a, b in zip(coords, coords[1:])]
            if not (all(d > 0 for d in diffs) or all(d < 0 for d in diffs)):
                raise ValueError("level coordinates must be strictly monotone")
        for cell in self.cells:
            if isinstance(cell, Missing):
                continue
            values = (cell.cards,) if isinstance(cell, Exact) else (cell.lo, cell.hi)
            for v in values:
                if v > MAX_CARDS:
                    raise ValueError(f"card count {v} exceeds MAX_CARDS={MAX_CARDS}")
                if self.integer and v != int(v):
                    raise ValueError(f"integer table holds non-integer count {v}")

    # -- construction -------------------------------------------------------

    @classmethod
    def from_cells(cls, t: int, mapping: Mapping[tuple[int, int], Cell], **kw) -> "PairwiseTable":
        """Build from a {(p, q): cell} mapping; unspecified pairs are Missing."""
        for p, q in mapping:
            if not (1 <= p < q <= t):
                raise ValueError(f"pair ({p}, {q}) is not strictly upper-triangular for t={t}")
        cells = tuple(mapping.get(pq, MISSING) for pq in pairs(t))
        return cls(t=t, cells=cells, **kw)

    @classmethod
    def from_exact(cls, t: int, mapping: Mapping[tuple[int, int], float], **kw) -> "PairwiseTable":
        """Build an all-Exact table from a {(p, q): cards} mapping."""
        missing = [pq for pq in pairs(t) if pq not in mapping]
        if missing:
            raise ValueError(f"missing cells {missing}")
        return cls.from_cells(t, {pq: Exact(v) for pq, v in mapping.items()}, **kw)

    # -- access --------------------------------------------------------------

    def cell(self, p: int, q: int) -> Cell:
        if not (1 <= p < q <= self.t):
            raise KeyError(f"({p}, {q}) is not an upper-triangular pair for t={self.t}")
        return self.cells[_pair_index(p, q, self.t)]

    def exact_value(self, p: int, q: int) -> float:
        cell = self.cell(p, q)
        if not isinstance(cell, Exact):
            raise NonExactCellError(f"cell ({p}, {q}) is {type(cell).__name__}, not Exact")
        return cell.cards

    def items(self) -> Iterator[tuple[tuple[int, int], Cell]]:
        return zip(pairs(self.t), self.cells)

    @property
    def judged_pairs(self) -> tuple[tuple[int, int], ...]:
        """Pairs carrying a judgment (Exact or Interval) -- the set P^DM."""
        return tuple(pq for pq, cell in self.items() if not isinstance(cell, Missing))

    def is_exact(self) -> bool:
        return all(isinstance(c, Exact) for c in self.cells)

    def has_missing(self) -> bool:
        return any(isinstance(c, Missing) for c in self.cells)

    def _require_exact(self):
        if not self.is_exact():
            raise NonExactCellError("operation requires a table of Exact cells only")

    def replace_cells(self, updates: Mapping[tuple[int, int], Cell]) -> "PairwiseTable":
        """A copy with the given cells swapped in."""
        new = dict(self.items())
        new.update(updates)
        return PairwiseTable.from_cells(
            self.t, new,
            level_labels=self.level_labels,
            level_coordinates=self.level_coordinates,
            integer=self.integer,
        )

    def label(self, k: int) -> str:
        if self.level_labels is not None:
            return self.level_labels[k - 1]
        return f"l{k}"


GapVector = Sequence[float]


def table_from_gaps(d: GapVector, *, integer: bool = True, **kw) -> PairwiseTable:
    """The consistent table generated by consecutive gaps d_1 .. d_{t-1}.

    e_pq = sum_{r=p}^{q-1} (d_r + 1) - 1; the result always passes
    check_consistency.
    """
    d = list(d)
    if not d:
        raise ValueError("need at least one gap (t >= 2)")
    if any(v < 0 for v in d):
        raise ValueError("gaps must be nonnegative")
    if integer and any(v != int(v) for v in d):
        raise ValueError("integer mode requires integer gaps")
    t = len(d) + 1
    cells = {}
    for p in range(1, t):
        acc = 0 if integer else 0.0
        for q in range(p + 1, t + 1):
            acc += (int(d[q - 2]) if integer else d[q - 2]) + 1
            cells[(p, q)] = Exact(acc - 1)
    return PairwiseTable.from_cells(t, cells, integer=integer, **kw)


def complete_from_consecutive(consecutive: GapVector, **kw) -> PairwiseTable:
    """Fill a whole table from the classic elicitation of consecutive card
    counts only.  Alias of :func:`table_from_gaps`."""
    return table_from_gaps(consecutive, **kw)


def check_consistency(tbl: PairwiseTable, *, tol: float = 0.0) -> list[Violation]:
    """Every violated triple of the additivity condition; empty iff consistent.

    ``tol`` admits a slack for continuous tables (e.g. 1e-9); integer tables
    are checked exactly.
    """
    tbl._require_exact()
    out = []
    for p, k, q in triples(tbl.t):
        lhs = tbl.exact_value(p, k) + tbl.exact_value(k, q) + 1
        rhs = tbl.exact_value(p, q)
        if abs(lhs - rhs) > tol:
            out.append(Violation(p, k, q, lhs, rhs))
    return out


def gaps_from_table(tbl: PairwiseTable) -> tuple:
    """Recover the gap vector d_r = e_{r,r+1}; raises NotConsistentError when
    the table is not generated by its consecutive entries."""
    tbl._require_exact()
    violations = check_consistency(tbl, tol=0.0 if tbl.integer else 1e-9)
    if violations:
        raise NotConsistentError(violations)
    return tuple(tbl.exact_value(r, r + 1) for r in range(1, tbl.t))


def export_graph(tbl: PairwiseTable) -> str:
    """The table as a DOT digraph: one node per level, one arc per pair
    labeled with its card count."""
    tbl._require_exact()
    lines = ["digraph comparison_table {", "  rankdir=LR;"]
    for k in range(1, tbl.t + 1):
        lines.append(f'  n{k} [label="{tbl.label(k)}"];')
    for (p, q), cell in tbl.items():
        value = cell.cards
        text = f"{value:g}"
        lines.append(f'  n{p} -> n{q} [label="{text}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def export_bars(tbl: PairwiseTable) -> list[tuple[tuple[int, int], float]]:
    """Bar-segment lengths: each pair (p, q) maps to e_pq + 1, the number of
    units of difference it represents."""
    tbl._require_exact()
    return [((p, q), cell.cards + 1) for (p, q), cell in tbl.items()]


def cell_bounds(tbl: PairwiseTable) -> dict[tuple[int, int], tuple[float, float]]:
    """Per-pair [lo, hi] bounds: Exact(e) contributes [e, e]; Missing pairs
    are omitted."""
    out = {}
    for pq, cell in tbl.items():
        if isinstance(cell, Exact):
            out[pq] = (cell.cards, cell.cards)
        elif isinstance(cell, Interval):
            out[pq] = (cell.lo, cell.hi)
    return out
