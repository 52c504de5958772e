"""The quarry requalification case study, shipped as a golden dataset.

Five candidate projects for an abandoned quarry are assessed on six
criteria; the decision maker supplied precise, interval and missing card
counts, ranked dummy projects to elicit a 2-additive capacity (criteria
SURFA/ENVIR interact negatively, COSTS/ENVIR positively), and stated the
ratio z = 8.  The module also carries the small didactic tables used
throughout the documentation and tests.

Two quirks of the source data are preserved deliberately:

* the SURFA column of the published score matrix cannot be reproduced by
  interpolating the published level coordinates (no coordinate assignment
  explains both printed scores), so the alternatives carry SURFA utilities
  directly;
* where several precise tables are compatible with the judgments
  (PROFI, SERVI, ENVIR), the analyst-accepted table is pinned explicitly,
  because any compatible member is an equally valid witness.
"""

from __future__ import annotations

from pathlib import Path

from .project import Alternative, CapacitySpec, Criterion, Project
from .table import MISSING, Exact, Interval, PairwiseTable, table_from_gaps

VERBAL = ("very bad", "bad", "rather bad", "average", "rather good", "good", "very good")


def _exact_rows(t: int, rows: list[list[float]], **kw) -> PairwiseTable:
    # rows[p-1] holds e_{p,p+1} .. e_{p,t}
    cells = {}
    for p, row in enumerate(rows, start=1):
        for offset, value in enumerate(row):
            cells[(p, p + 1 + offset)] = Exact(value)
    return PairwiseTable.from_cells(t, cells, **kw)


def _mixed_rows(t: int, rows: list[list], **kw) -> PairwiseTable:
    # entries: number (exact), (lo, hi) tuple (interval), or None (missing)
    cells = {}
    for p, row in enumerate(rows, start=1):
        for offset, value in enumerate(row):
            q = p + 1 + offset
            if value is None:
                cells[(p, q)] = MISSING
            elif isinstance(value, tuple):
                cells[(p, q)] = Interval(*value)
            else:
                cells[(p, q)] = Exact(value)
    return PairwiseTable.from_cells(t, cells, **kw)


# ---------------------------------------------------------------------------
# didactic tables
# ---------------------------------------------------------------------------


def consecutive_fill_example() -> PairwiseTable:
    """Five levels judged only between neighbours: cards (1, 0, 3, 2)."""
    return table_from_gaps((1, 0, 3, 2))


def consistent_example() -> PairwiseTable:
    """A perfectly consistent 5-level table (gaps 2, 1, 0, 3)."""
    return _exact_rows(5, [[2, 4, 5, 9], [1, 2, 6], [0, 4], [3]])


def inconsistent_example() -> PairwiseTable:
    """The same table with the aggregate judgment e_15 dropped to 8, which
    breaks e_14 + e_45 + 1 = e_15 and admits exactly seven minimal repairs."""
    return _exact_rows(5, [[2, 4, 5, 8], [1, 2, 6], [0, 4], [3]])


def missing_first_example() -> PairwiseTable:
    """Sparse judgments whose only flaw is e_35 = 5 against e_34 + e_45 + 1 = 4."""
    return _mixed_rows(5, [[None, None, None, None], [None, None, 6], [0, 5], [3]])


def missing_second_example() -> PairwiseTable:
    """Sparse but consistent judgments with a unique completion."""
    return _mixed_rows(5, [[None, 4, None, 9], [None, None, 6], [None, None], [3]])


def interval_first_example() -> PairwiseTable:
    """Interval judgments needing one bound change ([5,6] -> [4,6] on (1,3))."""
    return _mixed_rows(
        5,
        [[(0, 1), (5, 6), (5, 8), (7, 11)], [(1, 2), (4, 6), (8, 11)], [(2, 3), (6, 8)], [(3, 4)]],
    )


def interval_second_example() -> PairwiseTable:
    """Consistent interval judgments admitting 11 precise tables out of a
    20,736-cell grid."""
    return _mixed_rows(
        5,
        [[(0, 1), (2, 4), (5, 8), (9, 11)], [(1, 2), (4, 6), (8, 11)], [(2, 3), (6, 8)], [(3, 4)]],
    )


def mixed_example() -> PairwiseTable:
    """Interval and missing judgments together; consistent, with 29
    compatible precise tables (the canonical witness plus 28 others)."""
    return _mixed_rows(
        5,
        [[None, (2, 4), (5, 8), (7, 11)], [(1, 2), None, (6, 9)], [(2, 3), None], [(1, 4)]],
    )


# ---------------------------------------------------------------------------
# quarry criteria
# ---------------------------------------------------------------------------


def costs_table() -> PairwiseTable:
    return _exact_rows(
        5,
        [[3, 6, 8, 9], [2, 4, 5], [1, 2], [0]],
        level_labels=("1000", "750", "500", "250", "0"),
        level_coordinates=(1000.0, 750.0, 500.0, 250.0, 0.0),
    )


def profitability_table() -> PairwiseTable:
    """PROFI as judged: mostly precise with two intervals and two gaps; the
    aggregate e_15 = 8 is the one judgment that has to be relaxed."""
    return _mixed_rows(
        7,
        [
            [(0, 1), 2, 4, 8, 10, 14],
            [1, (3, 4), 6, 9, 13],
            [1, 4, (6, 7), 11],
            [None, 5, 9],
            [2, None],
            [3],
        ],
        level_labels=VERBAL,
    )


def profitability_table_repaired() -> PairwiseTable:
    """PROFI after the decision maker accepted relaxing e_15 to [7, 8]."""
    return profitability_table().replace_cells({(1, 5): Interval(7, 8)})


def profitability_accepted() -> PairwiseTable:
    """The unique precise table compatible with the relaxed PROFI judgments."""
    return _exact_rows(
        7,
        [[0, 2, 4, 7, 10, 14], [1, 3, 6, 9, 13], [1, 4, 7, 11], [2, 5, 9], [2, 6], [3]],
        level_labels=VERBAL,
    )


def services_table() -> PairwiseTable:
    """SERVI: all-interval judgments, consistent, with 7 compatible tables."""
    return _mixed_rows(
        7,
        [
            [(1, 2), (3, 4), (6, 7), (9, 10), (13, 14), (18, 19)],
            [(1, 2), (4, 5), (7, 8), (11, 12), (16, 17)],
            [(2, 3), (5, 6), (9, 10), (14, 15)],
            [(2, 3), (6, 7), (11, 12)],
            [(3, 4), (8, 9)],
            [(4, 5)],
        ],
        level_labels=VERBAL,
    )


def services_accepted() -> PairwiseTable:
    return _exact_rows(
        7,
        [[1, 3, 6, 9, 13, 18], [1, 4, 7, 11, 16], [2, 5, 9, 14], [2, 6, 11], [3, 8], [4]],
        level_labels=VERBAL,
    )


def surface_table() -> PairwiseTable:
    return _exact_rows(
        5,
        [[1, 3, 5, 8], [1, 3, 6], [1, 4], [2]],
        level_labels=("1.0", "2.9", "3.2", "3.5", "5.0"),
        level_coordinates=(1.0, 2.9, 3.2, 3.5, 5.0),
    )


def environment_table() -> PairwiseTable:
    """ENVIR: interval judgments on non-consecutive pairs only; consistent,
    with 8 compatible tables."""
    return _mixed_rows(
        7,
        [
            [None, (0, 1), (2, 3), (4, 5), (6, 7), (9, 10)],
            [None, (1, 2), (3, 4), (5, 6), (8, 9)],
            [None, (2, 3), (4, 5), (7, 8)],
            [None, (2, 3), (5, 6)],
            [None, (3, 4)],
            [None],
        ],
        level_labels=VERBAL,
    )


def environment_accepted() -> PairwiseTable:
    return _exact_rows(
        7,
        [[0, 1, 3, 5, 7, 10], [0, 2, 4, 6, 9], [1, 3, 5, 8], [1, 3, 6], [1, 4], [2]],
        level_labels=VERBAL,
    )


def planning_table() -> PairwiseTable:
    return _exact_rows(2, [[0]], level_labels=("no", "yes"))


def ranking_table() -> PairwiseTable:
    """Comparison table over the seven dummy-project ranking classes."""
    return _exact_rows(
        7,
        [[1, 3, 4, 6, 9, 14], [1, 2, 4, 7, 12], [0, 2, 5, 10], [1, 4, 9], [2, 7], [4]],
        level_labels=("p6", "p1", "p5", "p2~p3", "p4", "p45", "p15"),
    )


def capacity_spec() -> CapacitySpec:
    return CapacitySpec(
        pairs=[frozenset(("g4", "g5")), frozenset(("g1", "g5"))],
        classes=[
            ["g6"],
            ["g1"],
            ["g5"],
            ["g2", "g3"],
            ["g4"],
            [frozenset(("g4", "g5"))],
            [frozenset(("g1", "g5"))],
        ],
        cards=[1, 1, 0, 1, 2, 4],
        z=8.0,
        ell=1.0,
        sign_hints={frozenset(("g4", "g5")): -1, frozenset(("g1", "g5")): 1},
    )


def quarry_project() -> Project:
    """The full case as left at the end of the elicitation dialogue."""
    surfa = 100.0 / 9.0
    criteria = [
        Criterion(id="g1", label="COSTS", table=costs_table()),
        Criterion(
            id="g2",
            label="PROFI",
            table=profitability_table_repaired(),
            accepted_table=profitability_accepted(),
        ),
        Criterion(id="g3", label="SERVI", table=services_table(), accepted_table=services_accepted()),
        Criterion(id="g4", label="SURFA", table=surface_table()),
        Criterion(
            id="g5",
            label="ENVIR",
            table=environment_table(),
            accepted_table=environment_accepted(),
        ),
        Criterion(id="g6", label="CONSI", table=planning_table()),
    ]
    alternatives = [
        Alternative(
            id="a1",
            label="basic reclamation",
            performances={
                "g1": {"value": 30.0}, "g2": {"level": 3}, "g3": {"level": 1},
                "g4": {"utility": surfa * 1}, "g5": {"level": 4}, "g6": {"level": 2},
            },
        ),
        Alternative(
            id="a2",
            label="valuable forest",
            performances={
                "g1": {"value": 45.0}, "g2": {"level": 3}, "g3": {"level": 5},
                "g4": {"utility": 100.0}, "g5": {"level": 5}, "g6": {"level": 2},
            },
        ),
        Alternative(
            id="a3",
            label="wetland",
            performances={
                "g1": {"value": 90.0}, "g2": {"level": 1}, "g3": {"level": 6},
                "g4": {"utility": surfa * 2}, "g5": {"level": 7}, "g6": {"level": 2},
            },
        ),
        Alternative(
            id="a4",
            label="ecological network",
            performances={
                "g1": {"value": 120.0}, "g2": {"level": 1}, "g3": {"level": 7},
                "g4": {"utility": surfa * 6}, "g5": {"level": 6}, "g6": {"level": 2},
            },
        ),
        Alternative(
            id="a5",
            label="multi-functional area",
            performances={
                "g1": {"value": 900.0}, "g2": {"level": 7}, "g3": {"level": 7},
                "g4": {"utility": 0.0}, "g5": {"level": 3}, "g6": {"level": 1},
            },
        ),
    ]
    return Project(
        criteria=criteria,
        alternatives=alternatives,
        capacity_spec=capacity_spec(),
        name="quarry",
    )


FIXTURE_TABLES = {
    "consecutive_fill": consecutive_fill_example,
    "consistent": consistent_example,
    "inconsistent": inconsistent_example,
    "missing_first": missing_first_example,
    "missing_second": missing_second_example,
    "interval_first": interval_first_example,
    "interval_second": interval_second_example,
    "mixed": mixed_example,
    "quarry_g1_costs": costs_table,
    "quarry_g2_profi_original": profitability_table,
    "quarry_g2_profi": profitability_table_repaired,
    "quarry_g3_servi": services_table,
    "quarry_g4_surfa": surface_table,
    "quarry_g5_envir": environment_table,
    "quarry_g6_consi": planning_table,
    "quarry_ranking": ranking_table,
}


def write_fixtures(directory) -> list[Path]:
    """Write every fixture table plus the quarry project file into a
    directory; returns the written paths."""
    from .project import save_project
    from .schema import save_table

    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)
    written = []
    for name, build in FIXTURE_TABLES.items():
        path = directory / f"{name}.json"
        save_table(build(), path)
        written.append(path)
    path = directory / "quarry_project.json"
    save_project(quarry_project(), path)
    written.append(path)
    return written


if __name__ == "__main__":
    import sys

    target = sys.argv[1] if len(sys.argv) > 1 else "fixtures"
    for p in write_fixtures(target):
        print(p)
