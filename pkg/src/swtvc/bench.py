"""Benchmark harness: timed repeated runs, geometric means, improvement
percentages and CSV reports."""

from __future__ import annotations

import csv
import math
import time
from dataclasses import dataclass
from typing import Callable, Dict, Iterable, List, Optional, Sequence, Tuple

from .degree import d1_approx_solve, d_approx_s_solve, d_approx_solve
from .errors import (
    EmptyInputError,
    NonPositiveSampleError,
    TvcError,
)
from .exact import exact_solve
from .graph import TemporalGraph, validate_always_star, validate_cover
from .star import star_acov_solve, star_sc_solve

CSV_HEADER = ["graph", "algo", "delta", "cover_size", "valid", "time_ms_geomean", "reps"]

ALGORITHMS: Dict[str, Callable] = {
    "star-sc": star_sc_solve,
    "star-acov": star_acov_solve,
    "d-approx": d_approx_solve,
    "d-approx-s": d_approx_s_solve,
    "d-1-approx": d1_approx_solve,
    "exact": exact_solve,
}

_STAR_ONLY = {"star-sc", "star-acov"}


@dataclass
class BenchRecord:
    """One (instance, algorithm, delta) benchmark cell."""

    instance: str
    algorithm: str
    delta: int
    cover_size: Optional[int]
    valid: Optional[bool]
    time_ms: Optional[float]
    repetitions: int
    status: str = "ok"  # "ok", "skipped_not_always_star" or "error:..."

    def csv_row(self):
        if self.status == "ok":
            valid_field = "true" if self.valid else "false"
            return [
                self.instance,
                self.algorithm,
                self.delta,
                self.cover_size,
                valid_field,
                f"{self.time_ms:.6f}",
                self.repetitions,
            ]
        return [self.instance, self.algorithm, self.delta, "", self.status, "",
                self.repetitions]


def geometric_mean(samples: Sequence[float]) -> float:
    if not samples:
        raise EmptyInputError("geometric mean of an empty sample set")
    if any(s <= 0 for s in samples):
        raise NonPositiveSampleError(f"non-positive sample in {samples}")
    return math.exp(sum(math.log(s) for s in samples) / len(samples))


def improvement(sigma_a: float, sigma_b: float) -> float:
    """Percent improvement of algorithm A over baseline B: (B/A - 1) * 100."""
    if sigma_a <= 0 or sigma_b <= 0:
        raise NonPositiveSampleError(
            f"objectives must be positive, got {sigma_a}, {sigma_b}"
        )
    return (sigma_b / sigma_a - 1.0) * 100.0


def run_benchmark(
    instances: Iterable[Tuple[str, TemporalGraph]],
    algorithms: Sequence[str],
    delta: int,
    repetitions: int = 3,
    csv_path=None,
) -> List[BenchRecord]:
    """Run each algorithm on each instance: one untimed validation run, then
    ``repetitions`` timed solve-only runs aggregated by geometric mean.

    Cells fail independently; star algorithms on non-star inputs are
    recorded as skipped instead of aborting the batch.
    """
    if repetitions < 1:
        raise EmptyInputError("repetitions must be >= 1")
    unknown = [a for a in algorithms if a not in ALGORITHMS]
    if unknown:
        raise KeyError(f"unknown algorithms: {unknown}")

    records = []
    for name, g in instances:
        star_offender = validate_always_star(g)
        for algo in algorithms:
            if algo in _STAR_ONLY and star_offender is not None:
                records.append(
                    BenchRecord(name, algo, delta, None, None, None, repetitions,
                                status="skipped_not_always_star")
                )
                continue
            solver = ALGORITHMS[algo]
            try:
                cover = solver(g, delta)  # warm-up, also the validated run
                witness = validate_cover(g, delta, cover)
                samples = []
                for _ in range(repetitions):
                    t0 = time.perf_counter()
                    solver(g, delta)
                    samples.append(max(time.perf_counter() - t0, 1e-9) * 1000.0)
                records.append(
                    BenchRecord(name, algo, delta, len(cover), witness is None,
                                geometric_mean(samples), repetitions)
                )
            except TvcError as exc:
                records.append(
                    BenchRecord(name, algo, delta, None, None, None, repetitions,
                                status=f"error:{type(exc).__name__}")
                )
    if csv_path is not None:
        write_csv(records, csv_path)
    return records


def write_csv(records: Sequence[BenchRecord], path) -> None:
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(CSV_HEADER)
        for rec in records:
            writer.writerow(rec.csv_row())


def read_csv(path) -> List[dict]:
    with open(path, newline="") as fh:
        return list(csv.DictReader(fh))


def compare_csv(path, algo_a: str, algo_b: str):
    """Size and time improvement of A over baseline B from a benchmark CSV.

    Only rows with valid covers are compared, restricted to (graph, delta)
    cells present for both algorithms; objectives are averaged first, as in
    the reported experiment tables.
    """
    rows = [r for r in read_csv(path) if r["valid"] == "true"]
    by_cell = {}
    for r in rows:
        by_cell.setdefault((r["graph"], r["delta"]), {})[r["algo"]] = r
    sizes_a, sizes_b, times_a, times_b = [], [], [], []
    for cell in by_cell.values():
        if algo_a in cell and algo_b in cell:
            sizes_a.append(float(cell[algo_a]["cover_size"]))
            sizes_b.append(float(cell[algo_b]["cover_size"]))
            times_a.append(float(cell[algo_a]["time_ms_geomean"]))
            times_b.append(float(cell[algo_b]["time_ms_geomean"]))
    if not sizes_a:
        raise EmptyInputError(f"no common valid cells for {algo_a} and {algo_b}")
    mean = lambda xs: sum(xs) / len(xs)
    size_impr = improvement(mean(sizes_a), mean(sizes_b))
    time_impr = improvement(mean(times_a), mean(times_b))
    return size_impr, time_impr
