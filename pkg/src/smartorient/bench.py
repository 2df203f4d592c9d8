"""Wall-clock scaling of the streaming engine."""

from __future__ import annotations

import csv
import statistics
import time
from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from typing import TextIO

from .engine import SmartReorienter
from .generators import random_pseudo_transitive

CSV_HEADER = ("n", "step_mean_us", "step_max_us", "total_ms")


@dataclass(frozen=True)
class BenchRow:
    n: int
    step_mean_us: float
    step_max_us: float
    total_ms: float


def time_stream(deltas) -> tuple[list[int], int]:
    """Per-step and total nanoseconds for one pass of the engine over ``deltas``."""
    eng = SmartReorienter()
    steps = []
    clock = time.perf_counter_ns
    start = clock()
    for d in deltas:
        t0 = clock()
        eng.extend(d)
        steps.append(clock() - t0)
    return steps, clock() - start


def bench(ns: Iterable[int], density: float = 0.5, flips: float = 0.3, seed: int = 0,
          reps: int = 3, warmup: bool = True) -> list[BenchRow]:
    """One row per ``n``: medians over ``reps`` timed runs on the same seeded graph."""
    rows = []
    for n in ns:
        deltas = random_pseudo_transitive(n, density, flips, seed).deltas()
        if warmup:
            time_stream(deltas)
        means, maxes, totals = [], [], []
        for _ in range(reps):
            steps, total = time_stream(deltas)
            means.append(statistics.fmean(steps) if steps else 0.0)
            maxes.append(max(steps, default=0))
            totals.append(total)
        rows.append(BenchRow(
            n,
            statistics.median(means) / 1e3,
            statistics.median(maxes) / 1e3,
            statistics.median(totals) / 1e6,
        ))
    return rows


def write_csv(rows: Sequence[BenchRow], out: TextIO):
    w = csv.writer(out, lineterminator="\n")
    w.writerow(CSV_HEADER)
    for r in rows:
        w.writerow([r.n, f"{r.step_mean_us:.3f}", f"{r.step_max_us:.3f}", f"{r.total_ms:.3f}"])


def doubling_ratios(rows: Sequence[BenchRow]) -> list[tuple[int, int, float, float]]:
    """``(n_small, n_large, step ratio, total ratio)`` for consecutive rows."""
    return [
        (a.n, b.n, b.step_mean_us / a.step_mean_us, b.total_ms / a.total_ms)
        for a, b in zip(rows, rows[1:])
    ]
