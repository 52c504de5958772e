import numpy as np
import pytest

from cardtable import (
    EmptyPolytopeError,
    Interval,
    PairwiseTable,
    check_consistency,
    sample_continuous_tables,
)
from cardtable import quarry
from cardtable.table import cell_bounds


class TestHitAndRun:
    def test_samples_satisfy_bounds_and_consistency(self):
        tbl = quarry.services_table()
        samples = sample_continuous_tables(tbl, 200, seed=7)
        assert len(samples) == 200
        bounds = cell_bounds(tbl)
        for sample in samples:
            assert not sample.integer
            assert check_consistency(sample, tol=1e-9) == []
            for pq, (lo, hi) in bounds.items():
                assert lo - 1e-9 <= sample.exact_value(*pq) <= hi + 1e-9

    def test_reproducible_for_a_seed(self):
        a = sample_continuous_tables(quarry.services_table(), 50, seed=123)
        b = sample_continuous_tables(quarry.services_table(), 50, seed=123)
        assert all(x.cells == y.cells for x, y in zip(a, b))
        c = sample_continuous_tables(quarry.services_table(), 50, seed=124)
        assert any(x.cells != y.cells for x, y in zip(a, c))

    def test_degenerate_polytope_returns_the_table(self):
        tbl = quarry.consistent_example()
        for sample in sample_continuous_tables(tbl, 5, seed=1):
            for pq, cell in tbl.items():
                assert sample.exact_value(*pq) == pytest.approx(cell.cards, abs=1e-9)

    def test_published_noninteger_table_lies_inside_the_polytope(self):
        # an accepted non-integer witness: its gaps satisfy every bound
        gaps = (1.169, 1.15, 2.0367, 2.3749, 3.0511, 4.2155)
        bounds = cell_bounds(quarry.services_table())
        for (p, q), (lo, hi) in bounds.items():
            e = sum(g + 1 for g in gaps[p - 1:q - 1]) - 1
            assert lo - 1e-3 <= e <= hi + 1e-3

    def test_empty_polytope_raises(self):
        tbl = PairwiseTable.from_cells(
            3, {(1, 2): Interval(0, 1), (2, 3): Interval(0, 1), (1, 3): Interval(5, 6)}
        )
        with pytest.raises(EmptyPolytopeError):
            sample_continuous_tables(tbl, 10, seed=0)

    def test_inconsistent_exact_cells_raise(self):
        with pytest.raises(EmptyPolytopeError):
            sample_continuous_tables(quarry.inconsistent_example(), 3, seed=0)

    def test_monte_carlo_means_inside_intervals(self):
        tbl = quarry.services_table()
        samples = sample_continuous_tables(tbl, 1000, seed=99)
        bounds = cell_bounds(tbl)
        for pq, (lo, hi) in bounds.items():
            mean = float(np.mean([s.exact_value(*pq) for s in samples]))
            assert lo <= mean <= hi

    def test_equality_mixed_with_intervals(self):
        # one consecutive judgment pinned, neighbours free
        tbl = PairwiseTable.from_cells(
            3, {(1, 2): Interval(1, 1), (2, 3): Interval(0, 2), (1, 3): Interval(2, 3)}
        )
        samples = sample_continuous_tables(tbl, 100, seed=5)
        for sample in samples:
            assert sample.exact_value(1, 2) == pytest.approx(1.0, abs=1e-9)
            # e_13 = 1 + e_23 + 1 must stay in [2, 3], so e_23 stays in [0, 1]
            assert -1e-9 <= sample.exact_value(2, 3) <= 1.0 + 1e-9
            assert 2.0 - 1e-9 <= sample.exact_value(1, 3) <= 3.0 + 1e-9
