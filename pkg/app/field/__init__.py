from app.field.loaders import Channel, load_field, save_csv, save_pgm
from app.field.patterns import BENCH_PATTERNS, PatternKind, generate_pattern
from app.field.scalar_field import (
    Connectivity,
    ScalarField,
    from_values,
    max_step,
    neighbors,
    value_range,
)

__all__ = [
    "BENCH_PATTERNS",
    "Channel",
    "Connectivity",
    "PatternKind",
    "ScalarField",
    "from_values",
    "generate_pattern",
    "load_field",
    "max_step",
    "neighbors",
    "save_csv",
    "save_pgm",
    "value_range",
]
