from __future__ import annotations

import functools
import logging

from pathlib import Path

import click

from app.bench import run_benchmark, write_csv
from app.config import settings
from app.cover import (
    contour_cover_for,
    cover_to_json,
    join_cover,
    split_cover,
    uniform_cover,
)
from app.ctree import critical_values
from app.errors import MapperError
from app.field import (
    BENCH_PATTERNS,
    Channel,
    Connectivity,
    PatternKind,
    ScalarField,
    generate_pattern,
    load_field,
    save_csv,
    save_pgm,
    value_range,
)
from app.graph import MapperGraph, component_count, cycle_rank, is_tree, to_dot, to_json
from app.mapper import build_mapper, simplify
from app.workflows import TreeMode, realize_tree, run_multires

logger = logging.getLogger(__name__)

COVER_MODES = ("uniform", "contour", "join", "split")


def _int_list(ctx, param, value):
    if value is None or isinstance(value, list):
        return value
    try:
        items = [int(item) for item in value.split(",") if item.strip()]
    except ValueError:
        raise click.BadParameter("expected comma-separated integers")
    if not items:
        raise click.BadParameter("expected at least one value")
    return items


def _mapper_errors(fn):
    @functools.wraps(fn)
    def wrapper(*args, **kwargs):
        try:
            return fn(*args, **kwargs)
        except MapperError as e:
            raise click.ClickException(str(e)) from e

    return wrapper


def field_source(fn):
    options = [
        click.option("--input", "input_path", type=click.Path(path_type=Path),
                     help="PGM, PNG or CSV file."),
        click.option("--pattern", type=click.Choice([k.value for k in PatternKind]),
                     help="Synthetic pattern instead of --input."),
        click.option("--size", type=int, default=128, show_default=True),
        click.option("--seed", type=int, default=0, show_default=True),
        click.option("--channel", type=click.Choice([c.value for c in Channel]),
                     default=Channel.LUMINANCE.value, show_default=True),
        click.option("--connectivity", type=click.Choice([c.value for c in Connectivity]),
                     default=None, help="Pixel adjacency (default from settings)."),
    ]
    for option in reversed(options):
        fn = option(fn)
    return fn


def _load(input_path, pattern, size, seed, channel) -> ScalarField:
    if (input_path is None) == (pattern is None):
        raise click.UsageError("Give exactly one of --input or --pattern")
    if input_path is not None:
        return load_field(input_path, Channel(channel))
    return generate_pattern(PatternKind(pattern), size, seed)


def _connectivity(value: str | None) -> Connectivity:
    return Connectivity(value or settings.CONNECTIVITY)


def _summary(graph: MapperGraph) -> str:
    return (
        f"nodes={graph.n_nodes} edges={graph.n_edges} "
        f"components={component_count(graph)} cycle_rank={cycle_rank(graph)} "
        f"tree={'yes' if is_tree(graph) else 'no'}"
    )


def _write_graph(graph: MapperGraph, json_path: Path | None, dot_path: Path | None):
    if json_path is not None:
        json_path.write_text(to_json(graph))
        logger.info("Graph JSON written to %s", json_path)
    if dot_path is not None:
        dot_path.write_text(to_dot(graph))
        logger.info("Graph DOT written to %s", dot_path)


@click.group()
@click.option("-v", "--verbose", is_flag=True, help="Debug logging.")
def cli(verbose):
    """Mapper graphs, contour trees and merge trees of image scalar fields."""
    logging.basicConfig(level=logging.DEBUG if verbose else settings.LOG_LEVEL)


@cli.command()
@field_source
@click.option("--slices", type=int, default=None, help="Cover slices or nested levels.")
@click.option("--overlap", type=float, default=None, help="Overlap fraction g in (0, 0.5).")
@click.option("--mode", type=click.Choice(COVER_MODES), default="uniform", show_default=True)
@click.option("--margin", type=float, default=None, help="Contour cover margin (fraction of range).")
@click.option("--simplify/--no-simplify", "do_simplify", default=False)
@click.option("--full-nerve", is_flag=True, help="Connect all nested levels, not only consecutive ones.")
@click.option("--json", "json_path", type=click.Path(path_type=Path))
@click.option("--dot", "dot_path", type=click.Path(path_type=Path))
@click.option("--cover-json", "cover_path", type=click.Path(path_type=Path))
@_mapper_errors
def compute(
    input_path, pattern, size, seed, channel, connectivity, slices, overlap, mode,
    margin, do_simplify, full_nerve, json_path, dot_path, cover_path,
):
    """Build one Mapper graph."""
    field = _load(input_path, pattern, size, seed, channel)
    conn = _connectivity(connectivity)
    slices = settings.DEFAULT_SLICES if slices is None else slices
    overlap = settings.DEFAULT_OVERLAP if overlap is None else overlap
    span = value_range(field)

    match mode:
        case "uniform":
            cover = uniform_cover(span, slices, overlap)
        case "contour":
            margin = settings.CONTOUR_MARGIN if margin is None else margin
            cover = contour_cover_for(critical_values(field, conn), margin)
        case "join":
            cover = join_cover(span, slices)
        case "split":
            cover = split_cover(span, slices)

    graph = build_mapper(field, cover, conn, full_nerve=full_nerve)
    if do_simplify:
        graph = simplify(graph)

    _write_graph(graph, json_path, dot_path)
    if cover_path is not None:
        cover_path.write_text(cover_to_json(cover))
    click.echo(_summary(graph))


@cli.command()
@field_source
@click.option("--slices", callback=_int_list, default="2,4,8,16", show_default=True,
              help="Comma-separated slice counts, coarse to fine.")
@click.option("--overlap", type=float, default=None)
@click.option("--out-dir", type=click.Path(file_okay=False, path_type=Path))
@_mapper_errors
def multires(input_path, pattern, size, seed, channel, connectivity, slices, overlap, out_dir):
    """Graphs at several resolutions with embedding checks between neighbours."""
    field = _load(input_path, pattern, size, seed, channel)
    conn = _connectivity(connectivity)
    overlap = settings.DEFAULT_OVERLAP if overlap is None else overlap

    steps, checks = run_multires(field, slices, overlap, conn)
    if out_dir is not None:
        out_dir.mkdir(parents=True, exist_ok=True)
    for step in steps:
        click.echo(f"slices={step.slices} {_summary(step.graph)}")
        if out_dir is not None:
            (out_dir / f"mapper_{step.slices}.json").write_text(to_json(step.graph))

    failed = False
    for check in checks:
        if check.skipped:
            status = "SKIP"
        elif check.passed:
            status = "PASS"
        else:
            status = "FAIL"
            failed = True
        click.echo(f"{check.coarse_slices} -> {check.fine_slices}: {status}")
    if failed:
        raise click.exceptions.Exit(1)


@cli.command()
@field_source
@click.option("--mode", type=click.Choice([m.value for m in TreeMode]), default="contour",
              show_default=True)
@click.option("--margin", type=float, default=None)
@click.option("--full-nerve", is_flag=True)
@click.option("--json", "json_path", type=click.Path(path_type=Path))
@click.option("--dot", "dot_path", type=click.Path(path_type=Path))
@_mapper_errors
def tree(input_path, pattern, size, seed, channel, connectivity, mode, margin, full_nerve,
         json_path, dot_path):
    """Realize the contour, join or split tree and compare with the sweep oracle."""
    field = _load(input_path, pattern, size, seed, channel)
    conn = _connectivity(connectivity)

    result = realize_tree(field, TreeMode(mode), conn, margin=margin, full_nerve=full_nerve)
    _write_graph(result.mapper, json_path, dot_path)
    click.echo(f"mapper: {_summary(result.mapper)}")
    click.echo(f"reference: {_summary(result.reference)}")

    if result.isomorphic is None:
        click.echo("NOT-A-TREE")
    elif result.isomorphic:
        click.echo("ISOMORPHIC")
    else:
        click.echo("NOT-ISOMORPHIC")
        raise click.exceptions.Exit(1)


@cli.command()
@click.option("--sizes", callback=_int_list, default=None,
              help="Comma-separated image sizes (default from settings).")
@click.option("--slices", callback=_int_list, default=None,
              help="Comma-separated slice counts (default from settings).")
@click.option("--repeats", type=int, default=None)
@click.option("--patterns", default=",".join(p.value for p in BENCH_PATTERNS), show_default=True)
@click.option("--max-size", type=int, default=None, help="Drop sizes above this.")
@click.option("--no-ctree", is_flag=True, help="Skip contour tree timings.")
@click.option("--output", type=click.Path(dir_okay=False, path_type=Path))
@_mapper_errors
def bench(sizes, slices, repeats, patterns, max_size, no_ctree, output):
    """Time Mapper construction and the contour tree across sizes and slice counts."""
    sizes = settings.BENCH_SIZES if sizes is None else sizes
    max_size = settings.MAX_SIZE if max_size is None else max_size
    sizes = [s for s in sizes if s <= max_size]
    try:
        kinds = [PatternKind(p.strip()) for p in patterns.split(",") if p.strip()]
    except ValueError as e:
        raise click.BadParameter(str(e), param_hint="--patterns")

    rows = run_benchmark(sizes, slices, repeats, kinds, with_ctree=not no_ctree)
    output = output or Path(settings.MEDIA_ROOT) / "bench" / "bench.csv"
    write_csv(rows, output)
    click.echo(f"{len(rows)} rows written to {output}")


@cli.command()
@click.option("--pattern", type=click.Choice([k.value for k in PatternKind]), required=True)
@click.option("--size", type=int, default=128, show_default=True)
@click.option("--seed", type=int, default=0, show_default=True)
@click.option("--out", type=click.Path(dir_okay=False, path_type=Path), required=True,
              help="Output prefix; writes <out>.pgm and <out>.csv.")
@_mapper_errors
def generate(pattern, size, seed, out):
    """Write a synthetic pattern as PGM (quantized) and CSV (exact)."""
    field = generate_pattern(PatternKind(pattern), size, seed)
    out.parent.mkdir(parents=True, exist_ok=True)
    pgm = save_pgm(field, out.with_suffix(".pgm"))
    csv_path = save_csv(field, out.with_suffix(".csv"))
    click.echo(f"{pgm}\n{csv_path}")


if __name__ == "__main__":
    cli()
