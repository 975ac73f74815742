from __future__ import annotations

import logging
import re

from enum import StrEnum
from pathlib import Path

import numpy as np

from PIL import Image, UnidentifiedImageError

from app.errors import FieldFormatError, MapperError
from app.field.scalar_field import ScalarField, from_values, value_range

logger = logging.getLogger(__name__)

PNG_SIGNATURE = b"\x89PNG\r\n\x1a\n"
LUMINANCE_WEIGHTS = np.array([0.2126, 0.7152, 0.0722])
_COMMENT = re.compile(rb"#[^\n]*")


class Channel(StrEnum):
    LUMINANCE = "luminance"
    RED = "red"
    GREEN = "green"
    BLUE = "blue"
    RAW = "raw"


def load_field(path: str | Path, channel: Channel = Channel.LUMINANCE) -> ScalarField:
    path = Path(path)
    try:
        data = path.read_bytes()
    except OSError as e:
        raise FieldFormatError(f"Cannot read {path}: {e}") from e

    channel = Channel(channel)
    if data[:2] in (b"P2", b"P5"):
        field = _read_pgm(data)
    elif data.startswith(PNG_SIGNATURE) or path.suffix.lower() == ".png":
        field = _read_png(path, channel)
    elif path.suffix.lower() in (".csv", ".txt"):
        field = _read_csv(path)
    else:
        raise FieldFormatError(f"Unsupported field format: {path}")

    logger.debug("Loaded %dx%d field from %s", field.width, field.height, path)
    return field


def _skip_blank(data: bytes, pos: int) -> int:
    while pos < len(data):
        if data[pos : pos + 1] == b"#":
            while pos < len(data) and data[pos : pos + 1] != b"\n":
                pos += 1
        elif data[pos : pos + 1].isspace():
            pos += 1
        else:
            break
    return pos


def _read_pgm(data: bytes) -> ScalarField:
    pos = 2
    header = []
    while len(header) < 3:
        pos = _skip_blank(data, pos)
        start = pos
        while pos < len(data) and data[pos : pos + 1].isdigit():
            pos += 1
        if start == pos:
            raise FieldFormatError("Truncated or malformed PGM header")
        header.append(int(data[start:pos]))

    width, height, maxval = header
    if width < 1 or height < 1 or not 0 < maxval < 65536:
        raise FieldFormatError(
            f"Invalid PGM header: {width}x{height}, maxval {maxval}"
        )

    count = width * height
    if data[:2] == b"P5":
        # exactly one whitespace byte separates the header from the raster
        dtype = np.dtype(np.uint8) if maxval < 256 else np.dtype(">u2")
        try:
            samples = np.frombuffer(data, dtype=dtype, count=count, offset=pos + 1)
        except ValueError as e:
            raise FieldFormatError(f"Truncated PGM raster: {e}") from e
    else:
        tokens = _COMMENT.sub(b"", data[pos:]).split()
        if len(tokens) < count:
            raise FieldFormatError(
                f"PGM raster has {len(tokens)} samples, expected {count}"
            )
        try:
            samples = np.array([int(t) for t in tokens[:count]], dtype=np.int64)
        except ValueError as e:
            raise FieldFormatError(f"Malformed PGM sample: {e}") from e

    if samples.max() > maxval:
        raise FieldFormatError(f"PGM sample exceeds maxval {maxval}")
    return from_values(width, height, samples / maxval)


def _read_png(path: Path, channel: Channel) -> ScalarField:
    try:
        with Image.open(path) as img:
            img.load()
            samples = _png_channel(img, channel)
    except (OSError, UnidentifiedImageError, SyntaxError) as e:
        raise FieldFormatError(f"Cannot decode PNG {path}: {e}") from e

    height, width = samples.shape
    return from_values(width, height, samples)


def _png_channel(img: Image.Image, channel: Channel) -> np.ndarray:
    if img.mode in ("I;16", "I;16B", "I;16L", "I"):
        return np.asarray(img, dtype=np.float64) / 65535.0
    if img.mode in ("1", "L", "LA"):
        return np.asarray(img.convert("L"), dtype=np.float64) / 255.0

    rgb = np.asarray(img.convert("RGB"), dtype=np.float64)
    match channel:
        case Channel.LUMINANCE:
            return rgb @ LUMINANCE_WEIGHTS / 255.0
        case Channel.RED:
            return rgb[..., 0] / 255.0
        case Channel.GREEN:
            return rgb[..., 1] / 255.0
        case Channel.BLUE:
            return rgb[..., 2] / 255.0
        case Channel.RAW:
            return rgb.mean(axis=-1) / 255.0


def _read_csv(path: Path) -> ScalarField:
    try:
        samples = np.loadtxt(path, delimiter=",", ndmin=2, dtype=np.float64)
    except ValueError as e:
        raise FieldFormatError(f"Malformed CSV field {path}: {e}") from e

    if samples.size == 0:
        raise FieldFormatError(f"Empty CSV field {path}")
    height, width = samples.shape
    try:
        return from_values(width, height, samples)
    except MapperError as e:
        raise FieldFormatError(f"Invalid CSV field {path}: {e}") from e


def save_csv(field: ScalarField, path: str | Path) -> Path:
    path = Path(path)
    np.savetxt(path, field.values, delimiter=",", fmt="%.17g")
    return path


def save_pgm(field: ScalarField, path: str | Path) -> Path:
    path = Path(path)
    lo, hi = value_range(field)
    values = field.values
    if lo < 0.0 or hi > 1.0:
        values = (values - lo) / (hi - lo) if hi > lo else np.zeros_like(values)

    raster = np.rint(values * 255.0).astype(np.uint8)
    header = f"P5\n{field.width} {field.height}\n255\n".encode("ascii")
    path.write_bytes(header + raster.tobytes())
    return path
