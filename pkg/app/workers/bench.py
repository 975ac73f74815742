import logging

from pathlib import Path

from app.bench import run_benchmark, write_csv
from app.config import settings
from app.field import PatternKind
from app.tasks import app

logger = logging.getLogger(__name__)


def bench_csv_path(task_id: str) -> Path:
    return Path(settings.MEDIA_ROOT) / "bench" / f"{task_id}.csv"


@app.task(bind=True, name="app.workers.bench.run_benchmark_task")
def run_benchmark_task(
    self,
    sizes: list[int],
    slices: list[int],
    repeats: int,
    patterns: list[str],
    with_ctree: bool = True,
) -> str | None:
    """Run the timing sweep and write MEDIA_ROOT/bench/<task id>.csv."""
    try:
        rows = run_benchmark(
            sizes,
            slices,
            repeats,
            [PatternKind(p) for p in patterns],
            with_ctree=with_ctree,
        )
        path = write_csv(rows, bench_csv_path(self.request.id))
    except Exception as e:
        logger.exception("Benchmark task %s failed: %s", self.request.id, e)
        return None

    logger.info("Benchmark task %s wrote %d rows to %s", self.request.id, len(rows), path)
    return str(path)
