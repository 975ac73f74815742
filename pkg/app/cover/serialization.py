from __future__ import annotations

from pydantic import ValidationError

from app.cover.intervals import Cover, CoverStyle, Interval, validate_cover
from app.errors import CoverParameterError
from app.schemas.cover import CoverPayload


def cover_payload(cover: Cover) -> CoverPayload:
    return CoverPayload(
        style=cover.style.value,
        intervals=[(i.lo, i.hi) for i in cover.intervals],
    )


def cover_to_json(cover: Cover) -> str:
    return cover_payload(cover).model_dump_json()


def cover_from_json(text: str | bytes) -> Cover:
    try:
        payload = CoverPayload.model_validate_json(text)
    except ValidationError as e:
        raise CoverParameterError(f"Malformed cover JSON: {e}") from e

    cover = Cover(
        intervals=tuple(Interval(lo, hi) for lo, hi in payload.intervals),
        style=CoverStyle(payload.style),
    )
    return validate_cover(cover)
