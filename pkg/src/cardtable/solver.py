"""Exact solver for repairing, completing and sampling comparison tables.

Every consistent table is generated by a gap vector d (the consecutive card
counts), so each problem below reduces to a search over nonnegative integer
gap vectors:

* minimal-change repair of an inconsistent precise table, with cut
  constraints for enumerating every minimal repair set;
* completion of tables with missing judgments, plus enumeration of all
  compatible completions (with a uniqueness check);
* repair of interval tables (move as few bounds as possible until a precise
  consistent table fits inside) and of mixed interval/missing tables;
* exhaustive extraction of the precise consistent tables compatible with
  interval information, and hit-and-run sampling of the continuous polytope.

The additivity equalities hold by construction for every candidate, so no
big-M formulation is needed; minimality is obtained by iterative deepening
on the number of touched cells, with depth-first search over the gaps and
pruning on partial violation counts.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

import numpy as np

from .errors import (
    DomainExceededError,
    EmptyPolytopeError,
    InfeasibleError,
    NonExactCellError,
    NonIntervalCellError,
)
from . import table as table_mod
from .table import (
    Interval,
    Missing,
    PairwiseTable,
    cell_bounds,
    table_from_gaps,
)

#: Extra room above the largest stated bound when searching repairs.
CAP_SLACK = 1


def _sum_between(d: Sequence[int], p: int, q: int) -> int:
    # e_pq implied by gaps: sum of d over [p, q) plus the q-p-1 unit steps
    return sum(d[p - 1:q - 1]) + (q - p - 1)


def _span_key(pq: tuple[int, int]) -> tuple[int, int, int]:
    # cells ordered widest span first, then row-major; used to break ties
    # between equally small repair sets (aggregated judgments are repaired
    # in preference to the consecutive ones that generate the scale)
    p, q = pq
    return (-(q - p), p, q)


def _set_key(cells: Iterable[tuple[int, int]]):
    return sorted(_span_key(c) for c in cells)


def _repair_caps(t: int, bounds: dict, slack: int = CAP_SLACK) -> list[int]:
    """Per-gap search ceiling for repair problems: the largest upper bound of
    any judged cell covering the gap, plus slack."""
    overall = max((hi for _, hi in bounds.values()), default=0)
    caps = []
    for r in range(1, t):
        covering = [hi - (q - p - 1) for (p, q), (_, hi) in bounds.items() if p <= r < q]
        caps.append(int(max(covering, default=overall)) + slack)
    return caps


def _tight_caps(t: int, bounds: dict) -> list[int | None]:
    """Per-gap ceiling when every bound must hold; None marks a gap no judged
    cell covers (the value is then unconstrained)."""
    caps: list[int | None] = []
    for r in range(1, t):
        covering = [hi - (q - p - 1) for (p, q), (_, hi) in bounds.items() if p <= r < q]
        caps.append(int(min(covering)) if covering else None)
    return caps


def _iter_consistent(t: int, bounds: dict, caps: Sequence[int]) -> Iterator[tuple[int, ...]]:
    """All gap vectors whose induced table satisfies every bound, in
    lexicographic order."""
    by_end: list[list] = [[] for _ in range(t)]
    for (p, q), (lo, hi) in bounds.items():
        by_end[q - 1].append((p, q, lo, hi))
    d: list[int] = []

    def rec(k: int):
        if k == t - 1:
            yield tuple(d)
            return
        for v in range(caps[k] + 1):
            d.append(v)
            ok = True
            for p, q, lo, hi in by_end[k + 1]:
                e = _sum_between(d, p, q)
                if not (lo <= e <= hi):
                    ok = False
                    break
            if ok:
                yield from rec(k + 1)
            d.pop()

    yield from rec(0)


def _min_flag_solutions(
    t: int,
    targets: dict,
    caps: Sequence[int],
    cuts: Sequence[frozenset] = (),
) -> tuple[int, list[tuple[frozenset, tuple[int, ...]]]]:
    """Smallest number of target cells whose bound must be dropped so that
    some gap vector satisfies all the others.

    Returns (z, solutions); each solution is a flagged cell set with its
    canonical witness gap vector: among the vectors realizing the set, the
    one moving the flagged bounds least in total, then the lexicographically
    smallest.  Cut sets exclude any solution containing a previously
    returned set; InfeasibleError when the cuts exclude everything.
    """
    cuts = [frozenset(c) for c in cuts]
    by_end: list[list] = [[] for _ in range(t)]
    for (p, q), (lo, hi) in targets.items():
        by_end[q - 1].append((p, q, lo, hi))

    def displacement(d: Sequence[int], flagged: Iterable[tuple[int, int]]) -> int:
        total = 0
        for p, q in flagged:
            lo, hi = targets[(p, q)]
            e = _sum_between(d, p, q)
            total += max(lo - e, e - hi, 0)
        return total

    for budget in range(len(targets) + 1):
        found: dict[frozenset, tuple[tuple[int, tuple[int, ...]], tuple[int, ...]]] = {}
        d: list[int] = []
        flagged: list[tuple[int, int]] = []

        def rec(k: int):
            if k == t - 1:
                s = frozenset(flagged)
                key = (displacement(d, flagged), tuple(d))
                if s not in found or key < found[s][0]:
                    found[s] = (key, tuple(d))
                return
            for v in range(caps[k] + 1):
                d.append(v)
                newly = []
                for p, q, lo, hi in by_end[k + 1]:
                    e = _sum_between(d, p, q)
                    if not (lo <= e <= hi):
                        newly.append((p, q))
                if len(flagged) + len(newly) <= budget:
                    flagged.extend(newly)
                    s_partial = frozenset(flagged)
                    if not any(c <= s_partial for c in cuts):
                        rec(k + 1)
                    del flagged[len(flagged) - len(newly):]
                d.pop()

        rec(0)
        if found:
            sols = sorted(
                ((s, best[1]) for s, best in found.items()),
                key=lambda it: (_set_key(it[0]), it[1]),
            )
            return budget, sols
    raise InfeasibleError("every consistent table is excluded by the cuts")


def _bounds_or_raise(tbl: PairwiseTable, *, allow_interval: bool, allow_missing: bool) -> dict:
    for pq, cell in tbl.items():
        if isinstance(cell, Interval) and not allow_interval:
            raise NonExactCellError(f"cell {pq} is an interval")
        if isinstance(cell, Missing) and not allow_missing:
            kind = NonExactCellError if not allow_interval else NonIntervalCellError
            raise kind(f"cell {pq} is missing")
    return {pq: (int(lo), int(hi)) for pq, (lo, hi) in cell_bounds(tbl).items()}


# ---------------------------------------------------------------------------
# precise tables: minimal-change repair
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class RepairSolution:
    """One minimal way of restoring consistency.

    ``deltas`` holds the signed card change per modified cell; ``repaired``
    is the resulting consistent table.
    """

    z: int
    modified: frozenset
    deltas: dict
    repaired: PairwiseTable

    def to_dict(self) -> dict:
        from .schema import table_to_dict

        return {
            "z": self.z,
            "modified": sorted(list(pq) for pq in self.modified),
            "deltas": {f"{p},{q}": v for (p, q), v in sorted(self.deltas.items())},
            "table": table_to_dict(self.repaired),
        }


def repair_min_changes(tbl: PairwiseTable, cuts: Sequence[frozenset] = ()) -> RepairSolution:
    """Change as few cells as possible to restore consistency.

    With no cuts and a consistent input the answer is the identity repair
    (z = 0).  Cut sets forbid returning any superset of an earlier repair's
    modified cells; when they exclude every consistent table the search
    raises InfeasibleError.
    """
    bounds = _bounds_or_raise(tbl, allow_interval=False, allow_missing=False)
    caps = _repair_caps(tbl.t, bounds)
    ceiling = table_mod.MAX_CARDS
    if sum(caps) + tbl.t - 2 > ceiling:  # largest entry any candidate can reach
        raise DomainExceededError("repair candidates would exceed the card ceiling", ceiling)
    z, sols = _min_flag_solutions(tbl.t, bounds, caps, cuts)
    modified, d = sols[0]
    repaired = table_from_gaps(
        d, level_labels=tbl.level_labels, level_coordinates=tbl.level_coordinates
    )
    deltas = {
        pq: int(repaired.exact_value(*pq) - tbl.exact_value(*pq)) for pq in sorted(modified)
    }
    return RepairSolution(z=z, modified=modified, deltas=deltas, repaired=repaired)


def enumerate_repairs(tbl: PairwiseTable) -> list[RepairSolution]:
    """Every minimal repair set, found by re-solving under growing cuts until
    the problem becomes infeasible.

    The result is the complete antichain of minimal modified-cell sets, in
    nondecreasing size order.  A consistent input yields the single z = 0
    identity repair.
    """
    out: list[RepairSolution] = []
    cuts: list[frozenset] = []
    while True:
        try:
            sol = repair_min_changes(tbl, cuts)
        except InfeasibleError:
            return out
        out.append(sol)
        cuts.append(sol.modified)


# ---------------------------------------------------------------------------
# missing values: completion and enumeration
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class MissingCompletion:
    """Result of completing a partially judged table.

    z counts the judged cells that had to be altered; ``flagged`` names them
    and ``deltas`` the changes.  ``completion`` is a full consistent table
    agreeing with every unflagged judgment.
    """

    z: int
    flagged: frozenset
    deltas: dict
    completion: PairwiseTable


def complete_missing(tbl: PairwiseTable) -> MissingCompletion:
    """Fill the missing cells; when no consistent completion exists, flag the
    fewest judged cells whose revision restores one.

    A z of 0 means the supplied judgments are consistent and the completion
    leaves all of them untouched.  Free values take the smallest table in
    lexicographic gap order.
    """
    bounds = _bounds_or_raise(tbl, allow_interval=False, allow_missing=True)
    if not bounds:
        raise NonExactCellError("at least one judged cell is required")
    caps = _repair_caps(tbl.t, bounds)
    # gaps no judgment covers cannot affect the flag count; pin them to the
    # canonical 0 rather than searching over them
    for r, cap in enumerate(_tight_caps(tbl.t, bounds)):
        if cap is None:
            caps[r] = 0
    z, sols = _min_flag_solutions(tbl.t, bounds, caps)
    flagged, d = sols[0]
    completion = table_from_gaps(
        d, level_labels=tbl.level_labels, level_coordinates=tbl.level_coordinates
    )
    deltas = {
        pq: int(completion.exact_value(*pq) - tbl.exact_value(*pq)) for pq in sorted(flagged)
    }
    return MissingCompletion(z=z, flagged=flagged, deltas=deltas, completion=completion)


@dataclass(frozen=True)
class CompletionEnumeration:
    """All completions found, with a flag telling whether the family was
    exhausted or truncated at the domain bound."""

    tables: tuple
    complete: bool
    domain_bound: int

    def __len__(self):
        return len(self.tables)


def enumerate_completions(tbl: PairwiseTable, domain_bound: int | None = None) -> CompletionEnumeration:
    """Every consistent completion agreeing with all judged cells.

    Requires a table whose judgments are already consistent (z = 0 from
    :func:`complete_missing`).  When some gap is not covered by any judged
    cell the family is infinite; enumeration is then truncated so no card
    count exceeds ``domain_bound`` and ``complete`` is reported False.
    """
    if domain_bound is None:
        domain_bound = table_mod.MAX_CARDS
    bounds = _bounds_or_raise(tbl, allow_interval=False, allow_missing=True)
    if not bounds:
        raise NonExactCellError("at least one judged cell is required")
    tight = _tight_caps(tbl.t, bounds)
    unbounded = any(c is None for c in tight)
    search_bounds = dict(bounds)
    if unbounded:
        # cap the widest cell so every entry stays within the domain bound
        full = (1, tbl.t)
        lo_full = bounds.get(full, (tbl.t - 2, None))[0]
        search_bounds[full] = (lo_full, min(bounds.get(full, (0, domain_bound))[1], domain_bound))
        tight = _tight_caps(tbl.t, search_bounds)
    caps = [c for c in tight]
    tables = []
    for d in _iter_consistent(tbl.t, search_bounds, caps):
        tables.append(
            table_from_gaps(d, level_labels=tbl.level_labels, level_coordinates=tbl.level_coordinates)
        )
    if not tables:
        raise InfeasibleError("the judged cells admit no consistent completion")
    return CompletionEnumeration(tables=tuple(tables), complete=not unbounded, domain_bound=domain_bound)


# ---------------------------------------------------------------------------
# interval and mixed tables
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class IntervalRepair:
    """Minimal bound-moving repair of an interval (or mixed) table.

    ``new_bounds`` maps each modified cell to the stretched interval that now
    admits the witness; unmodified cells keep their stated bounds.  The
    witness is a precise consistent table lying inside all final bounds.
    """

    z: int
    modified: frozenset
    new_bounds: dict
    witness: PairwiseTable


def _bounded_repair(tbl: PairwiseTable, allow_missing: bool) -> IntervalRepair:
    bounds = _bounds_or_raise(tbl, allow_interval=True, allow_missing=allow_missing)
    if not bounds:
        raise NonIntervalCellError("at least one judged cell is required")
    caps = _repair_caps(tbl.t, bounds)
    for r, cap in enumerate(_tight_caps(tbl.t, bounds)):
        if cap is None:
            caps[r] = 0
    z, sols = _min_flag_solutions(tbl.t, bounds, caps)
    modified, d = sols[0]
    witness = table_from_gaps(
        d, level_labels=tbl.level_labels, level_coordinates=tbl.level_coordinates
    )
    new_bounds = {}
    for pq in sorted(modified):
        lo, hi = bounds[pq]
        e = witness.exact_value(*pq)
        new_bounds[pq] = (min(lo, int(e)), max(hi, int(e)))
    return IntervalRepair(z=z, modified=modified, new_bounds=new_bounds, witness=witness)


def interval_repair(tbl: PairwiseTable) -> IntervalRepair:
    """Move as few interval bounds as possible until some precise consistent
    table fits inside every interval.  z = 0 means the interval information
    is already consistent and the witness needs no bound changes."""
    return _bounded_repair(tbl, allow_missing=False)


def mixed_repair(tbl: PairwiseTable) -> IntervalRepair:
    """Like :func:`interval_repair` but cells may also be missing; missing
    pairs take free values and never count toward z."""
    return _bounded_repair(tbl, allow_missing=True)


def enumerate_precise_extractions(tbl: PairwiseTable) -> list[PairwiseTable]:
    """Every precise consistent integer table compatible with the stated
    bounds, in lexicographic gap order.

    Requires consistent interval information (z = 0 from interval_repair or
    mixed_repair, after any accepted bound changes).  Missing cells range
    freely; if some gap is covered by no judged cell the family is infinite
    and DomainExceededError is raised.
    """
    bounds = _bounds_or_raise(tbl, allow_interval=True, allow_missing=True)
    caps = _tight_caps(tbl.t, bounds)
    if any(c is None for c in caps):
        raise DomainExceededError("a gap is unconstrained; the compatible family is infinite", table_mod.MAX_CARDS)
    out = [
        table_from_gaps(d, level_labels=tbl.level_labels, level_coordinates=tbl.level_coordinates)
        for d in _iter_consistent(tbl.t, bounds, caps)
    ]
    if not out:
        raise InfeasibleError("no precise consistent table fits the stated bounds")
    return out


def count_extractable(tbl: PairwiseTable) -> int:
    """Size of the raw value grid: the product of interval widths + 1 over all
    pairs.  Counts every precise table inside the bounds, consistent or not."""
    bounds = _bounds_or_raise(tbl, allow_interval=True, allow_missing=False)
    n = 1
    for lo, hi in bounds.values():
        n *= hi - lo + 1
    return n


# ---------------------------------------------------------------------------
# continuous sampling
# ---------------------------------------------------------------------------


def sample_continuous_tables(
    tbl: PairwiseTable,
    n: int,
    seed: int,
    burn_in: int = 1000,
    thinning: int = 1,
) -> list[PairwiseTable]:
    """Hit-and-run samples from the polytope of real-valued consistent tables
    inside the stated bounds.

    The walk runs over gap vectors d in R^{t-1}, where the bounds become
    box constraints on partial sums and the consistency equalities hold by
    construction.  Exact cells pin their partial sums, reducing the walk to
    the corresponding affine subspace.  Identical seeds reproduce identical
    samples.
    """
    bounds = _bounds_or_raise(tbl, allow_interval=True, allow_missing=False)
    m = tbl.t - 1

    eq_rows, eq_rhs = [], []
    ineq_rows, ineq_rhs = [], []  # A x <= b
    shrink_rows, shrink_rhs = [], []
    for (p, q), (lo, hi) in bounds.items():
        row = np.zeros(m)
        row[p - 1:q - 1] = 1.0
        base = q - p - 1
        if lo == hi:
            eq_rows.append(row)
            eq_rhs.append(lo - base)
        else:
            width = hi - lo
            ineq_rows.append(row.copy()); ineq_rhs.append(hi - base)
            ineq_rows.append(-row); ineq_rhs.append(-(lo - base))
            shrink_rows.append(row.copy()); shrink_rhs.append(hi - 0.005 * width - base)
            shrink_rows.append(-row); shrink_rhs.append(-(lo + 0.005 * width - base))
    for r in range(m):
        row = np.zeros(m)
        row[r] = -1.0
        ineq_rows.append(row); ineq_rhs.append(0.0)
        shrink_rows.append(row); shrink_rhs.append(0.0)

    A = np.array(ineq_rows) if ineq_rows else np.zeros((0, m))
    b = np.array(ineq_rhs)
    As = np.array(shrink_rows) if shrink_rows else np.zeros((0, m))
    bs = np.array(shrink_rhs)

    if eq_rows:
        E = np.array(eq_rows)
        f = np.array(eq_rhs, dtype=float)
        x_part = np.linalg.lstsq(E, f, rcond=None)[0]
        if np.linalg.norm(E @ x_part - f) > 1e-8:
            raise EmptyPolytopeError("the exact cells are mutually inconsistent")
        _, s, vt = np.linalg.svd(E)
        rank = int(np.sum(s > 1e-10 * max(1.0, s[0]))) if len(s) else 0
        N = vt[rank:].T
    else:
        x_part = np.zeros(m)
        N = np.eye(m)

    dim = N.shape[1]
    if dim == 0:
        if np.any(A @ x_part > b + 1e-9):
            raise EmptyPolytopeError("the exact cells contradict an interval bound")
        d0 = np.maximum(x_part, 0.0)
        return [_continuous_table(tbl, d0)] * n

    # project the inequality systems into the subspace coordinates
    Ay = A @ N
    by = b - A @ x_part
    Asy = As @ N
    bsy = bs - As @ x_part

    y0 = _chebyshev_center(Asy, bsy)
    if y0 is None:
        y0 = _chebyshev_center(Ay, by)
    if y0 is None or np.any(Ay @ y0 > by + 1e-9):
        raise EmptyPolytopeError("no interior point: the feasible region is empty")

    rng = np.random.default_rng(seed)
    samples = []
    y = y0
    steps = burn_in + n * thinning
    taken = 0
    for it in range(steps):
        direction = rng.normal(size=dim)
        norm = np.linalg.norm(direction)
        if norm == 0.0:
            continue
        direction /= norm
        au = Ay @ direction
        slack = by - Ay @ y
        t_hi = np.inf
        t_lo = -np.inf
        pos = au > 1e-12
        neg = au < -1e-12
        if np.any(pos):
            t_hi = np.min(slack[pos] / au[pos])
        if np.any(neg):
            t_lo = np.max(slack[neg] / au[neg])
        if not np.isfinite(t_hi) or not np.isfinite(t_lo):
            raise EmptyPolytopeError("the feasible region is unbounded along a direction")
        y = y + rng.uniform(t_lo, t_hi) * direction
        if it >= burn_in and (it - burn_in) % thinning == 0:
            samples.append(_continuous_table(tbl, x_part + N @ y))
            taken += 1
            if taken == n:
                break
    return samples


def _chebyshev_center(A: np.ndarray, b: np.ndarray) -> np.ndarray | None:
    from scipy.optimize import linprog

    if A.shape[0] == 0:
        return np.zeros(A.shape[1])
    norms = np.linalg.norm(A, axis=1)
    dim = A.shape[1]
    res = linprog(
        c=np.r_[np.zeros(dim), -1.0],
        A_ub=np.c_[A, norms],
        b_ub=b,
        bounds=[(None, None)] * dim + [(0.0, None)],
        method="highs",
    )
    if not res.success or res.x[dim] <= 0:
        return None
    return res.x[:dim]


def _continuous_table(tbl: PairwiseTable, d: np.ndarray) -> PairwiseTable:
    d = np.maximum(d, 0.0)
    return table_from_gaps(
        [float(v) for v in d],
        integer=False,
        level_labels=tbl.level_labels,
        level_coordinates=tbl.level_coordinates,
    )
