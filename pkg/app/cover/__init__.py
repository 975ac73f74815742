from app.cover.builders import (
    contour_cover,
    contour_cover_for,
    critical_join_cover,
    critical_split_cover,
    join_cover,
    split_cover,
    uniform_cover,
)
from app.cover.intervals import (
    Cover,
    CoverPart,
    CoverStyle,
    Interval,
    Parity,
    assignment,
    locate,
    locate_many,
    refines,
    split_even_odd,
    validate_cover,
)
from app.cover.serialization import cover_from_json, cover_payload, cover_to_json

__all__ = [
    "Cover",
    "CoverPart",
    "CoverStyle",
    "Interval",
    "Parity",
    "assignment",
    "contour_cover",
    "contour_cover_for",
    "cover_from_json",
    "cover_payload",
    "cover_to_json",
    "critical_join_cover",
    "critical_split_cover",
    "join_cover",
    "locate",
    "locate_many",
    "refines",
    "split_cover",
    "split_even_odd",
    "uniform_cover",
    "validate_cover",
]
