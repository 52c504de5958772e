import json

import pytest
from click.testing import CliRunner

from cardtable.cli import main


@pytest.fixture
def runner():
    return CliRunner()


def fx(fixtures_dir, name):
    return str(fixtures_dir / f"{name}.json")


class TestCheck:
    def test_consistent_exit_zero_empty_violations(self, runner, fixtures_dir):
        result = runner.invoke(main, ["check", fx(fixtures_dir, "consistent")])
        assert result.exit_code == 0
        assert json.loads(result.output) == {"consistent": True, "violations": []}

    def test_inconsistent_lists_triples(self, runner, fixtures_dir):
        result = runner.invoke(main, ["check", fx(fixtures_dir, "inconsistent")])
        body = json.loads(result.output)
        assert body["consistent"] is False
        assert {"p": 1, "k": 4, "q": 5, "lhs": 9, "rhs": 8} in body["violations"]

    def test_missing_file_exit_one(self, runner, tmp_path):
        result = runner.invoke(main, ["check", str(tmp_path / "nope.json")])
        assert result.exit_code != 0

    def test_malformed_document_exit_one(self, runner, tmp_path):
        bad = tmp_path / "bad.json"
        bad.write_text('{"schema": "cardtable/table@1"}')
        result = runner.invoke(main, ["check", str(bad)])
        assert result.exit_code == 1


class TestRepair:
    def test_enumerate_seven_blocks(self, runner, fixtures_dir):
        result = runner.invoke(main, ["repair", "--enumerate", fx(fixtures_dir, "inconsistent")])
        body = json.loads(result.output)
        assert len(body["repairs"]) == 7
        assert body["repairs"][0]["modified"] == [[1, 5]]
        assert body["repairs"][0]["deltas"] == {"1,5": 1}

    def test_single_repair_default(self, runner, fixtures_dir):
        body = json.loads(runner.invoke(main, ["repair", fx(fixtures_dir, "inconsistent")]).output)
        assert len(body["repairs"]) == 1 and body["repairs"][0]["z"] == 1

    def test_interval_table_routes_to_bound_repair(self, runner, fixtures_dir):
        body = json.loads(runner.invoke(main, ["repair", fx(fixtures_dir, "interval_first")]).output)
        assert body["repairs"][0]["new_bounds"] == {"1,3": [4, 6]}


class TestCompleteExtractSample:
    def test_complete_flags_bad_judgment(self, runner, fixtures_dir):
        body = json.loads(runner.invoke(main, ["complete", fx(fixtures_dir, "missing_first")]).output)
        assert body["z"] == 1 and body["flagged"] == [[3, 5]] and body["deltas"] == {"3,5": -1}

    def test_complete_enumerate_unique(self, runner, fixtures_dir):
        body = json.loads(runner.invoke(
            main, ["complete", "--enumerate", fx(fixtures_dir, "missing_second")]).output)
        assert body["total"] == 1 and body["complete"] is True

    def test_extract_counts(self, runner, fixtures_dir):
        body = json.loads(runner.invoke(main, ["extract", fx(fixtures_dir, "interval_second")]).output)
        assert body["total"] == 11 and body["grid_size"] == 20736

    def test_extract_limit(self, runner, fixtures_dir):
        body = json.loads(runner.invoke(
            main, ["extract", "--limit", "3", fx(fixtures_dir, "interval_second")]).output)
        assert body["total"] == 11 and len(body["tables"]) == 3

    def test_sample_deterministic(self, runner, fixtures_dir):
        args = ["sample", fx(fixtures_dir, "quarry_g3_servi"), "--n", "5", "--seed", "42"]
        first = runner.invoke(main, args).output
        second = runner.invoke(main, args).output
        assert first == second
        assert json.loads(first)["n"] == 5

    def test_sample_infeasible_exit_two(self, runner, fixtures_dir):
        result = runner.invoke(main, ["sample", fx(fixtures_dir, "inconsistent"),
                                      "--n", "1", "--seed", "1"])
        assert result.exit_code == 2


class TestScaleAndExport:
    def test_scale_with_anchors_and_interpolation(self, runner, fixtures_dir):
        body = json.loads(runner.invoke(
            main, ["scale", fx(fixtures_dir, "quarry_g1_costs"),
                   "--anchors", "1:0,5:100", "--at", "30", "--at", "900"]).output)
        assert body["alpha"] == pytest.approx(10.0)
        assert body["interpolations"]["30"] == pytest.approx(98.8)
        assert body["interpolations"]["900"] == pytest.approx(16.0)

    def test_export_graph_dot(self, runner, fixtures_dir):
        result = runner.invoke(main, ["export", "--graph", fx(fixtures_dir, "consistent")])
        assert result.output.startswith("digraph")
        assert 'n1 -> n5 [label="9"]' in result.output

    def test_export_bars(self, runner, fixtures_dir):
        body = json.loads(runner.invoke(
            main, ["export", "--bars", fx(fixtures_dir, "consistent")]).output)
        lengths = {(b["p"], b["q"]): b["length"] for b in body["bars"]}
        assert lengths[(1, 5)] == 10


class TestDomainBoundOverride:
    def test_env_var_raises_the_card_ceiling(self, runner, tmp_path):
        import cardtable.table as table_mod
        from cardtable.schema import save_table

        default = table_mod.MAX_CARDS
        try:
            table_mod.MAX_CARDS = 50_000
            big = tmp_path / "big.json"
            save_table(ct_table_with_cards(20_000), big)
        finally:
            table_mod.MAX_CARDS = default

        rejected = runner.invoke(main, ["check", str(big)])
        assert rejected.exit_code == 1

        accepted = runner.invoke(main, ["check", str(big)], env={"CARDTABLE_MAX_CARDS": "50000"})
        assert accepted.exit_code == 0
        table_mod.MAX_CARDS = default  # the CLI override sticks per process


def ct_table_with_cards(cards):
    from cardtable import Exact, PairwiseTable

    return PairwiseTable.from_cells(2, {(1, 2): Exact(cards)})


class TestProjectCommands:
    def test_capacity(self, runner, fixtures_dir):
        body = json.loads(runner.invoke(
            main, ["capacity", fx(fixtures_dir, "quarry_project")]).output)
        singles = {s["criterion"]: s["m"] for s in body["capacity"]["singletons"]}
        assert singles["g6"] == pytest.approx(0.0541, abs=1e-4)
        assert body["violations"] == []

    def test_evaluate(self, runner, fixtures_dir):
        body = json.loads(runner.invoke(
            main, ["evaluate", fx(fixtures_dir, "quarry_project")]).output)
        assert body["ranking"][0] == "a4" and body["ranking"][-1] == "a1"

    def test_smaa_enum_byte_identical_reruns(self, runner, fixtures_dir):
        args = ["smaa", fx(fixtures_dir, "quarry_project"), "--mode", "enum"]
        first = runner.invoke(main, args).output
        assert first == runner.invoke(main, args).output
        body = json.loads(first)
        assert body["combination_count"] == 56
        assert body["b"][3][0] == pytest.approx(69.64, abs=0.011)

    def test_smaa_sample_needs_seed(self, runner, fixtures_dir):
        result = runner.invoke(main, ["smaa", fx(fixtures_dir, "quarry_project"),
                                      "--mode", "sample"])
        assert result.exit_code == 1

    def test_smaa_sample_byte_identical_reruns(self, runner, fixtures_dir):
        args = ["smaa", fx(fixtures_dir, "quarry_project"), "--mode", "sample",
                "--n", "200", "--seed", "9", "--sample-criteria", "g3"]
        first = runner.invoke(main, args).output
        assert first == runner.invoke(main, args).output
