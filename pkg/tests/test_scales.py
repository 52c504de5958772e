import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cardtable import (
    BadRatioError,
    NotConsistentError,
    OutOfRangeError,
    build_interval_scale,
    build_ratio_weights,
    interpolate,
    table_from_gaps,
)
from cardtable import quarry


class TestBuildIntervalScale:
    def test_costs_scale(self):
        scale = build_interval_scale(quarry.costs_table(), 1, 5, 0.0, 100.0)
        assert scale.alpha == pytest.approx(10.0)
        assert scale.utilities == pytest.approx((0, 40, 70, 90, 100))

    def test_services_scale(self):
        scale = build_interval_scale(quarry.services_accepted(), 1, 7, 0.0, 100.0)
        assert scale.alpha == pytest.approx(100 / 19)
        expected = (0, 10.526, 21.053, 36.842, 52.632, 73.684, 100)
        assert scale.utilities == pytest.approx(expected, abs=5e-4)

    def test_profitability_scale(self):
        scale = build_interval_scale(quarry.profitability_accepted(), 1, 7, 0.0, 100.0)
        assert scale.alpha == pytest.approx(100 / 15)
        assert scale.utilities == pytest.approx(
            (0, 6.667, 20, 33.333, 53.333, 73.333, 100), abs=5e-4)

    def test_two_levels(self):
        scale = build_interval_scale(table_from_gaps((0,)), 1, 2, 0.0, 100.0)
        assert scale.utilities == (0.0, 100.0)
        assert scale.alpha == 100.0

    def test_top_anchor_hit_exactly(self):
        scale = build_interval_scale(quarry.environment_accepted(), 1, 7, 0.0, 100.0)
        assert scale.utilities[-1] == 100.0

    def test_interior_anchors_extrapolate_below(self):
        tbl = table_from_gaps((1, 0, 3, 2))
        scale = build_interval_scale(tbl, 2, 4, 0.0, 100.0)
        # five units between the anchors, one unit = 20; l_1 sits two units below
        assert scale.alpha == pytest.approx(20.0)
        assert scale.utilities[0] == pytest.approx(-40.0)
        assert scale.utilities[4] == pytest.approx(160.0)

    def test_unit_steps_match_gaps(self):
        d = (2, 0, 1, 4)
        tbl = table_from_gaps(d)
        scale = build_interval_scale(tbl, 1, 5, 0.0, 100.0)
        for k in range(1, 5):
            step = scale.utilities[k] - scale.utilities[k - 1]
            assert step == pytest.approx((d[k - 1] + 1) * scale.alpha)

    def test_inconsistent_table_rejected(self):
        with pytest.raises(NotConsistentError):
            build_interval_scale(quarry.inconsistent_example(), 1, 5, 0.0, 100.0)

    @given(st.floats(0.1, 50.0), st.floats(-100.0, 100.0))
    @settings(max_examples=100, deadline=None)
    def test_affine_equivariance(self, a, b):
        tbl = quarry.consistent_example()
        base = build_interval_scale(tbl, 1, 5, 0.0, 100.0)
        moved = build_interval_scale(tbl, 1, 5, a * 0.0 + b, a * 100.0 + b)
        for u, v in zip(base.utilities, moved.utilities):
            assert v == pytest.approx(a * u + b, abs=1e-9 * max(1.0, abs(a * u + b)))


class TestInterpolate:
    def test_costs_interpolations(self):
        scale = build_interval_scale(quarry.costs_table(), 1, 5, 0.0, 100.0)
        for x, expected in [(30, 98.8), (45, 98.2), (90, 96.4), (120, 95.2), (900, 16.0)]:
            assert interpolate(scale, x) == pytest.approx(expected)

    def test_exact_at_coordinates(self):
        scale = build_interval_scale(quarry.costs_table(), 1, 5, 0.0, 100.0)
        for coord, u in zip(scale.coordinates, scale.utilities):
            assert interpolate(scale, coord) == pytest.approx(u)

    def test_out_of_range(self):
        scale = build_interval_scale(quarry.costs_table(), 1, 5, 0.0, 100.0)
        with pytest.raises(OutOfRangeError):
            interpolate(scale, 1001.0)

    def test_monotone_along_preference(self):
        scale = build_interval_scale(quarry.costs_table(), 1, 5, 0.0, 100.0)
        xs = [0, 50, 100, 200, 300, 500, 700, 900, 1000]
        values = [interpolate(scale, x) for x in xs]
        assert values == sorted(values, reverse=True)  # cost down, utility up

    def test_no_coordinates_rejected(self):
        scale = build_interval_scale(quarry.consistent_example(), 1, 5, 0.0, 100.0)
        with pytest.raises(ValueError):
            interpolate(scale, 2.0)


class TestBuildRatioWeights:
    def test_quarry_ranking_weights(self):
        rw = build_ratio_weights((1, 1, 0, 1, 2, 4), base=1.0, z=8.0)
        assert rw.alpha == pytest.approx(7 / 15)
        assert rw.weights == pytest.approx(
            (1, 1.9333, 2.8667, 3.3333, 4.2667, 5.6667, 8), abs=5e-4)

    def test_degenerate_ratio_one(self):
        rw = build_ratio_weights((2, 0, 1), base=3.0, z=1.0)
        assert rw.weights == (3.0, 3.0, 3.0, 3.0)

    def test_classic_example(self):
        rw = build_ratio_weights((2, 1, 0, 3), base=1.0, z=11.0)
        assert rw.alpha == pytest.approx(1.0)
        assert rw.weights == pytest.approx((1, 4, 6, 7, 11))

    def test_top_over_bottom_is_z_exactly(self):
        for z in (1.5, 2, 8, 11):
            rw = build_ratio_weights((0, 2, 5), base=2.0, z=z)
            assert rw.weights[-1] / rw.weights[0] == pytest.approx(z, abs=1e-12)

    def test_weights_strictly_increase_when_z_above_one(self):
        rw = build_ratio_weights((0, 0, 0), base=1.0, z=4.0)
        assert all(b > a for a, b in zip(rw.weights, rw.weights[1:]))

    def test_bad_ratio(self):
        with pytest.raises(BadRatioError):
            build_ratio_weights((1, 2), base=1.0, z=0.5)
        with pytest.raises(BadRatioError):
            build_ratio_weights((1,), base=-1.0, z=2.0)
