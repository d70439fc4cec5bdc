import csv

import pytest

from swtvc import (
    EmptyInputError,
    NonPositiveSampleError,
    geometric_mean,
    improvement,
    run_benchmark,
    write_native,
    write_cover,
)
from swtvc.bench import CSV_HEADER, compare_csv
from swtvc.cli import cli_dispatch

from conftest import random_star_graph


class TestMetrics:
    def test_geometric_mean(self):
        assert geometric_mean([2, 4, 8]) == pytest.approx(4.0)
        assert geometric_mean([5, 5, 5]) == pytest.approx(5.0)
        assert geometric_mean([1, 100]) == pytest.approx(10.0)

    def test_geometric_mean_errors(self):
        with pytest.raises(EmptyInputError):
            geometric_mean([])
        with pytest.raises(NonPositiveSampleError):
            geometric_mean([1.0, 0.0])

    def test_improvement(self):
        assert improvement(100, 150) == pytest.approx(50.0)
        assert improvement(7, 7) == pytest.approx(0.0)
        assert improvement(2450, 3441) == pytest.approx(40.45, abs=0.1)

    def test_improvement_errors(self):
        with pytest.raises(NonPositiveSampleError):
            improvement(0, 10)


class TestRunBenchmark:
    def test_reference_cells(self, tmp_path, periodic_worst_case):
        out = tmp_path / "r.csv"
        records = run_benchmark(
            [("periodic", periodic_worst_case)], ["star-acov", "exact"], 3,
            repetitions=3, csv_path=out)
        sizes = {r.algorithm: r.cover_size for r in records}
        assert sizes == {"star-acov": 4, "exact": 2}
        assert all(r.valid for r in records)
        with open(out) as fh:
            rows = list(csv.reader(fh))
        assert rows[0] == CSV_HEADER
        assert len(rows) == 3

    def test_star_algorithms_skipped_on_general_input(self, example_graph):
        records = run_benchmark([("ex", example_graph)], ["star-sc", "d-approx"], 2,
                                repetitions=1)
        by_algo = {r.algorithm: r for r in records}
        assert by_algo["star-sc"].status == "skipped_not_always_star"
        assert by_algo["d-approx"].status == "ok"
        assert by_algo["d-approx"].valid

    def test_empty_instance_list(self, tmp_path):
        out = tmp_path / "empty.csv"
        records = run_benchmark([], ["d-approx"], 2, csv_path=out)
        assert records == []
        assert out.read_text().strip() == ",".join(CSV_HEADER)

    def test_cell_errors_do_not_abort(self, example_graph):
        # delta larger than the lifetime fails per cell, not the batch
        records = run_benchmark([("ex", example_graph)], ["d-approx"], 9,
                                repetitions=1)
        assert records[0].status == "error:BadDeltaError"

    def test_compare_csv(self, tmp_path):
        g = random_star_graph(2, n=16, T=16, d=4)
        out = tmp_path / "cmp.csv"
        run_benchmark([("g", g)], ["star-acov", "star-sc"], 3, csv_path=out)
        size_impr, time_impr = compare_csv(out, "star-acov", "star-sc")
        assert size_impr >= 0.0
        assert isinstance(time_impr, float)


class TestCli:
    def test_generate_solve_validate_round(self, tmp_path):
        tg = tmp_path / "inst.tg"
        cov = tmp_path / "inst.cov"
        assert cli_dispatch(["generate", "--family", "worst-acov", "--delta", "3",
                             "--reps", "2", "--leaves", "3",
                             "--output", str(tg)]) == 0
        assert cli_dispatch(["solve", "--algo", "star-acov", "--delta", "3",
                             "--input", str(tg), "--output", str(cov),
                             "--validate"]) == 0
        assert cli_dispatch(["validate", "--input", str(tg), "--delta", "3",
                             "--cover", str(cov)]) == 0

    def test_solve_cover_size(self, tmp_path, capsys, periodic_worst_case):
        tg = tmp_path / "p.tg"
        write_native(periodic_worst_case, tg)
        assert cli_dispatch(["solve", "--algo", "star-acov", "--delta", "3",
                             "--input", str(tg)]) == 0
        assert "cover size 4" in capsys.readouterr().out

    def test_bad_delta_is_usage_error(self, tmp_path, periodic_worst_case):
        tg = tmp_path / "p.tg"
        write_native(periodic_worst_case, tg)
        assert cli_dispatch(["solve", "--algo", "star-sc", "--delta", "0",
                             "--input", str(tg)]) == 2

    def test_unknown_subcommand_exits_2(self):
        assert cli_dispatch(["frobnicate"]) == 2

    def test_invalid_cover_exits_1(self, tmp_path, example_graph, capsys):
        tg = tmp_path / "ex.tg"
        cov = tmp_path / "bad.cov"
        write_native(example_graph, tg)
        write_cover({(3, 2)}, cov)
        assert cli_dispatch(["validate", "--input", str(tg), "--delta", "2",
                             "--cover", str(cov)]) == 1
        out = capsys.readouterr().out
        assert "(0,1)" in out and "window_start=1" in out

    def test_bench_and_compare(self, tmp_path):
        tg = tmp_path / "g.tg"
        out = tmp_path / "bench.csv"
        write_native(random_star_graph(0, n=12, T=12, d=3), tg)
        assert cli_dispatch(["bench", "--inputs", str(tg), "--algos",
                             "star-sc", "star-acov", "d-approx", "--delta", "3",
                             "--reps", "2", "--output", str(out)]) == 0
        assert cli_dispatch(["compare", "--csv", str(out), "--algo-a",
                             "star-acov", "--algo-b", "star-sc"]) == 0

    def test_convert_snap(self, tmp_path):
        raw = tmp_path / "raw.txt"
        tg = tmp_path / "conv.tg"
        raw.write_text("1 2 3600\n2 1 7200\n2 3 7200\n")
        assert cli_dispatch(["convert-snap", "--input", str(raw),
                             "--output", str(tg)]) == 0
        assert tg.exists()
