"""PGM (P5 binary / P2 ASCII) reading and writing.

Only 8-bit images are supported: maxval must be in [1, 255]. Pixel values are
returned exactly as stored, never rescaled. Comments ('#' to end of line) are
accepted anywhere in the header and never written.
"""

import logging
from pathlib import Path

import numpy as np

from impulse.errors import PgmParseError
from impulse.imaging.image import GrayImage

logger = logging.getLogger(__name__)

WHITESPACE = b" \t\r\n\v\f"


class _HeaderReader:
    """Pulls whitespace-separated tokens out of a PGM header."""

    def __init__(self, data):
        self.data = data
        self.pos = 0

    def skip_space(self):
        data = self.data
        while self.pos < len(data):
            byte = data[self.pos : self.pos + 1]
            if byte == b"#":
                end = data.find(b"\n", self.pos)
                self.pos = len(data) if end < 0 else end + 1
            elif byte in WHITESPACE:
                self.pos += 1
            else:
                break

    def token(self, what):
        self.skip_space()
        start = self.pos
        while (
            self.pos < len(self.data)
            and self.data[self.pos : self.pos + 1] not in WHITESPACE
            and self.data[self.pos : self.pos + 1] != b"#"
        ):
            self.pos += 1
        if start == self.pos:
            raise PgmParseError(f"unexpected end of data while reading {what}", start)
        return self.data[start : self.pos], start

    def integer(self, what):
        raw, start = self.token(what)
        if not raw.isdigit():
            raise PgmParseError(f"{what} is not a decimal integer: {raw!r}", start)
        return int(raw), start


def read_pgm(data):
    """Decode a P5 or P2 PGM byte string.

    Args:
        data: The complete file contents.

    Returns:
        GrayImage with the file's dimensions and exact pixel values.

    Raises:
        PgmParseError: On a bad magic number, non-numeric header token,
            unsupported maxval, pixel above maxval, or truncated raster.
    """
    data = bytes(data)
    reader = _HeaderReader(data)

    magic, _ = reader.token("magic number")
    if magic not in (b"P5", b"P2"):
        raise PgmParseError(f"bad magic number {magic!r}, expected P5 or P2", 0)

    width, width_at = reader.integer("width")
    height, height_at = reader.integer("height")
    maxval, maxval_at = reader.integer("maxval")
    if width < 1:
        raise PgmParseError("width must be at least 1", width_at)
    if height < 1:
        raise PgmParseError("height must be at least 1", height_at)
    if not 1 <= maxval <= 255:
        raise PgmParseError(f"maxval {maxval} not supported (8-bit only)", maxval_at)

    count = width * height
    if magic == b"P5":
        # exactly one whitespace byte separates maxval from the raster
        if reader.pos >= len(data) or data[reader.pos : reader.pos + 1] not in WHITESPACE:
            raise PgmParseError("missing whitespace after maxval", reader.pos)
        start = reader.pos + 1
        raster = data[start : start + count]
        if len(raster) < count:
            raise PgmParseError(
                f"truncated raster: expected {count} bytes, found {len(raster)}",
                start + len(raster),
            )
        pixels = np.frombuffer(raster, dtype=np.uint8)
        over = np.flatnonzero(pixels > maxval)
        if over.size:
            raise PgmParseError(
                f"pixel value {pixels[over[0]]} exceeds maxval {maxval}",
                start + int(over[0]),
            )
    else:
        values = []
        for _ in range(count):
            try:
                value, at = reader.integer("pixel value")
            except PgmParseError as e:
                if e.offset >= len(data):
                    raise PgmParseError(
                        f"truncated raster: expected {count} values, found {len(values)}",
                        e.offset,
                    ) from e
                raise
            if value > maxval:
                raise PgmParseError(f"pixel value {value} exceeds maxval {maxval}", at)
            values.append(value)
        pixels = np.array(values, dtype=np.uint8)

    logger.debug("decoded %s PGM %dx%d maxval %d", magic.decode(), width, height, maxval)
    return GrayImage(pixels.reshape(height, width))


def write_pgm(img):
    """Encode an image as binary P5 with maxval 255."""
    header = f"P5\n{img.width} {img.height}\n255\n".encode("ascii")
    return header + img.pixels.tobytes()


def load_pgm(path):
    """Read a PGM file from disk."""
    return read_pgm(Path(path).read_bytes())


def save_pgm(path, img):
    """Write an image to disk as binary PGM, creating parent directories."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_bytes(write_pgm(img))
