from __future__ import annotations

import csv
import logging
import statistics
import time

from dataclasses import dataclass
from pathlib import Path
from typing import Callable, Iterable, Sequence

from app.config import settings
from app.cover import uniform_cover
from app.ctree import contour_tree
from app.field import BENCH_PATTERNS, Connectivity, PatternKind, generate_pattern, value_range
from app.mapper import build_mapper

logger = logging.getLogger(__name__)

CSV_HEADER = ("pattern", "size", "slices", "mapper_ms", "ctree_ms")


@dataclass(frozen=True)
class BenchRow:
    pattern: str
    size: int
    slices: int | None = None
    mapper_ms: float | None = None
    ctree_ms: float | None = None

    def as_csv(self) -> list[str]:
        return [
            self.pattern,
            str(self.size),
            "" if self.slices is None else str(self.slices),
            "" if self.mapper_ms is None else f"{self.mapper_ms:.3f}",
            "" if self.ctree_ms is None else f"{self.ctree_ms:.3f}",
        ]


def median_ms(fn: Callable[[], object], repeats: int) -> float:
    """Median wall time of ``repeats`` runs after one discarded warmup."""
    fn()
    samples = []
    for _ in range(max(repeats, 1)):
        start = time.perf_counter()
        fn()
        samples.append((time.perf_counter() - start) * 1000.0)
    return statistics.median(samples)


def run_benchmark(
    sizes: Sequence[int] | None = None,
    slices: Sequence[int] | None = None,
    repeats: int | None = None,
    patterns: Iterable[PatternKind] = BENCH_PATTERNS,
    *,
    overlap: float | None = None,
    conn: Connectivity = Connectivity.FOUR,
    with_ctree: bool = True,
) -> list[BenchRow]:
    sizes = settings.BENCH_SIZES_EFFECTIVE if sizes is None else sizes
    slices = settings.BENCH_SLICES if slices is None else slices
    repeats = settings.BENCH_REPEATS if repeats is None else repeats
    overlap = settings.DEFAULT_OVERLAP if overlap is None else overlap

    rows = []
    for pattern in patterns:
        for size in sizes:
            field = generate_pattern(pattern, size, seed=0)
            span = value_range(field)
            for n in slices:
                cover = uniform_cover(span, n, overlap)
                elapsed = median_ms(lambda: build_mapper(field, cover, conn), repeats)
                rows.append(BenchRow(str(pattern), size, slices=n, mapper_ms=elapsed))
                logger.info("%s %d^2 %d slices: mapper %.1f ms", pattern, size, n, elapsed)
            if with_ctree:
                elapsed = median_ms(lambda: contour_tree(field, conn), repeats)
                rows.append(BenchRow(str(pattern), size, ctree_ms=elapsed))
                logger.info("%s %d^2: contour tree %.1f ms", pattern, size, elapsed)
    return rows


def write_csv(rows: Iterable[BenchRow], path: str | Path) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with path.open("w", newline="") as f:
        writer = csv.writer(f)
        writer.writerow(CSV_HEADER)
        for row in rows:
            writer.writerow(row.as_csv())
    return path
