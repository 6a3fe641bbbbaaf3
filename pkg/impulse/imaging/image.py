"""Grayscale raster and 3x3 neighborhood access.

Images are immutable 8-bit rasters backed by a read-only numpy array. Filters
only touch pixels that own a full 3x3 neighborhood; the one-pixel border is
carried through unchanged.
"""

from dataclasses import dataclass
from typing import NamedTuple

import numpy as np
from numpy.lib.stride_tricks import sliding_window_view

from impulse.errors import BoundsError, InvalidParameterError, SizeError

WINDOW_SIZE = 3
WINDOW_LEN = WINDOW_SIZE * WINDOW_SIZE
CENTER_INDEX = WINDOW_LEN // 2


class PixelCoord(NamedTuple):
    row: int
    col: int


@dataclass(frozen=True, eq=False)
class GrayImage:
    """Immutable 8-bit grayscale image.

    Args:
        pixels: 2-D array-like of integers in [0, 255], indexed [row, col].

    Raises:
        InvalidParameterError: If the data is not 2-D, is empty, holds
            non-integers, or has values outside [0, 255].
    """

    pixels: np.ndarray

    def __post_init__(self):
        data = np.asarray(self.pixels)
        if data.ndim != 2:
            raise InvalidParameterError(
                f"image data must be 2-D, got {data.ndim} dimensions"
            )
        if data.shape[0] < 1 or data.shape[1] < 1:
            raise InvalidParameterError(f"image must be at least 1x1, got {data.shape}")
        if data.dtype != np.uint8:
            if data.dtype.kind not in "iub":
                raise InvalidParameterError(
                    f"pixel values must be integers, got dtype {data.dtype}"
                )
            if data.min() < 0 or data.max() > 255:
                raise InvalidParameterError("pixel values must lie in [0, 255]")
        frozen = np.array(data, dtype=np.uint8, copy=True)
        frozen.flags.writeable = False
        object.__setattr__(self, "pixels", frozen)

    @classmethod
    def from_flat(cls, width, height, values):
        """Build an image from a row-major sequence of width*height values."""
        flat = np.asarray(values)
        if flat.size != width * height:
            raise InvalidParameterError(
                f"expected {width * height} pixels for {width}x{height}, got {flat.size}"
            )
        return cls(flat.reshape(height, width))

    @classmethod
    def from_rows(cls, rows):
        return cls(np.asarray(rows))

    @property
    def width(self):
        return int(self.pixels.shape[1])

    @property
    def height(self):
        return int(self.pixels.shape[0])

    @property
    def shape(self):
        return self.pixels.shape

    def flat(self):
        """Pixel values in row-major order as a list of ints."""
        return self.pixels.ravel().tolist()

    def __getitem__(self, at):
        row, col = at
        return int(self.pixels[row, col])

    def __eq__(self, other):
        if not isinstance(other, GrayImage):
            return NotImplemented
        return self.shape == other.shape and bool(
            np.array_equal(self.pixels, other.pixels)
        )

    __hash__ = None

    def __repr__(self):
        return f"GrayImage({self.width}x{self.height})"


@dataclass(frozen=True)
class Window9:
    """The nine intensities of a 3x3 neighborhood, read row-major."""

    values: tuple

    def __post_init__(self):
        raw = tuple(self.values)
        try:
            values = tuple(int(v) for v in raw)
        except (TypeError, ValueError, OverflowError) as e:
            raise InvalidParameterError(f"window values must be integers: {e}") from e
        if values != raw:
            raise InvalidParameterError("window values must be integers")
        if len(values) != WINDOW_LEN:
            raise InvalidParameterError(
                f"a window holds exactly {WINDOW_LEN} values, got {len(values)}"
            )
        if any(v < 0 or v > 255 for v in values):
            raise InvalidParameterError("window values must lie in [0, 255]")
        object.__setattr__(self, "values", values)

    @property
    def center(self):
        """The test pixel."""
        return self.values[CENTER_INDEX]

    @property
    def neighbors(self):
        """The eight values surrounding the center, row-major."""
        return self.values[:CENTER_INDEX] + self.values[CENTER_INDEX + 1 :]


def window_at(img, at):
    """Return the 3x3 neighborhood centered at `at`.

    Args:
        img: Source image.
        at: Interior coordinate, 1 <= row <= height-2 and 1 <= col <= width-2.

    Returns:
        Window9 whose center is the pixel at `at`.

    Raises:
        BoundsError: If `at` is on the border or outside the image.
    """
    row, col = at
    if not (1 <= row <= img.height - 2 and 1 <= col <= img.width - 2):
        raise BoundsError(
            f"pixel ({row}, {col}) has no full 3x3 neighborhood in a "
            f"{img.width}x{img.height} image"
        )
    block = img.pixels[row - 1 : row + 2, col - 1 : col + 2]
    return Window9(tuple(block.ravel().tolist()))


def require_filterable(img):
    """Raise SizeError unless the image has at least one interior pixel."""
    if img.width < WINDOW_SIZE or img.height < WINDOW_SIZE:
        raise SizeError(
            f"image is {img.width}x{img.height}; 3x3 filtering needs at least 3x3"
        )


def interior_windows(img):
    """All full 3x3 neighborhoods as a (height-2, width-2, 9) array.

    Entry [r, c] is the window centered at pixel (r + 1, c + 1).
    """
    require_filterable(img)
    view = sliding_window_view(img.pixels, (WINDOW_SIZE, WINDOW_SIZE))
    return view.reshape(img.height - 2, img.width - 2, WINDOW_LEN)


def with_interior(img, interior):
    """Copy of `img` with its interior replaced by `interior` and border kept."""
    out = np.array(img.pixels, copy=True)
    out[1:-1, 1:-1] = interior
    return GrayImage(out)
