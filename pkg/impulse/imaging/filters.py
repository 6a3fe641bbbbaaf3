"""Rank-order restoration filters over 3x3 windows.

Three filters are provided:

- ``median_filter``: every interior pixel becomes the median of its window.
- ``cwm_filter``: center weighted median; the center is counted 2K+1 times.
- ``mdb_filter``: min-max detector based switching filter. A pixel strictly
  below the minimum or strictly above the maximum of its eight neighbors is
  treated as an impulse and replaced by the window median; every other pixel
  passes through.

All filters are non-recursive: windows are always read from the input image,
so results do not depend on scan order. Border pixels are copied unchanged.
The scalar functions on Window9 define the semantics; the image filters
compute the same thing for all windows at once with numpy.
"""

import logging
from dataclasses import dataclass

import numpy as np

from impulse.config import DEFAULT_PASSES
from impulse.errors import InvalidParameterError
from impulse.imaging.image import CENTER_INDEX, WINDOW_LEN, interior_windows, with_interior

logger = logging.getLogger(__name__)

_NEIGHBOR_INDEX = [i for i in range(9) if i != CENTER_INDEX]

# A center counted 9 times outweighs all 8 neighbors; heavier weights change nothing
_MAX_WEIGHT = WINDOW_LEN


@dataclass(frozen=True)
class CwmGain:
    """CWM gain K; the center is counted 2K+1 times."""

    k: int

    def __post_init__(self):
        if isinstance(self.k, bool) or int(self.k) != self.k or self.k < 1:
            raise InvalidParameterError(f"CWM gain must be a positive integer, got {self.k}")

    @property
    def weight(self):
        return 2 * self.k + 1

    @property
    def effective_weight(self):
        """Center count actually used; capped where CWM becomes the identity."""
        return min(self.weight, _MAX_WEIGHT)


def weighted_median(values, weights):
    """Middle order statistic of `values` with each repeated `weights[i]` times.

    The total weight must be odd so the middle element is unique.
    """
    if len(values) != len(weights):
        raise InvalidParameterError("values and weights differ in length")
    if any(w < 0 for w in weights):
        raise InvalidParameterError("weights must be non-negative")
    total = sum(weights)
    if total % 2 == 0:
        raise InvalidParameterError(f"total weight must be odd, got {total}")
    expanded = sorted(np.repeat(np.asarray(values), np.asarray(weights)).tolist())
    return int(expanded[total // 2])


def median9(window):
    """The 5th smallest of the nine window values."""
    return int(sorted(window.values)[CENTER_INDEX])


def weighted_median_center(window, gain):
    """Median of the 8 neighbors plus 2K+1 copies of the center."""
    return weighted_median(
        list(window.neighbors) + [window.center], [1] * 8 + [gain.effective_weight]
    )


def is_minmax_outlier(window):
    """True iff the center is strictly outside [min, max] of its neighbors."""
    neighbors = window.neighbors
    return window.center < min(neighbors) or window.center > max(neighbors)


def _median_plane(windows):
    return np.partition(windows, CENTER_INDEX, axis=-1)[..., CENTER_INDEX]


def median_filter(img):
    """Replace every interior pixel with its window median."""
    return with_interior(img, _median_plane(interior_windows(img)))


def cwm_filter(img, gain):
    """Center weighted median with gain K on every interior pixel."""
    windows = interior_windows(img)
    neighbors = windows[..., _NEIGHBOR_INDEX]
    centers = np.repeat(
        windows[..., CENTER_INDEX : CENTER_INDEX + 1], gain.effective_weight, axis=-1
    )
    multiset = np.concatenate([neighbors, centers], axis=-1)
    middle = multiset.shape[-1] // 2
    return with_interior(img, np.partition(multiset, middle, axis=-1)[..., middle])


def detect_outliers(img):
    """Boolean (height-2, width-2) map of interior min-max outliers."""
    windows = interior_windows(img)
    neighbors = windows[..., _NEIGHBOR_INDEX]
    centers = windows[..., CENTER_INDEX]
    return (centers < neighbors.min(axis=-1)) | (centers > neighbors.max(axis=-1))


def mdb_filter(img):
    """Min-max detector based switching median filter."""
    windows = interior_windows(img)
    centers = windows[..., CENTER_INDEX]
    outliers = detect_outliers(img)
    logger.debug("mdb detector fired on %d interior pixels", int(outliers.sum()))
    return with_interior(img, np.where(outliers, _median_plane(windows), centers))


@dataclass(frozen=True)
class FilterChoice:
    """A filter name plus its parameters, e.g. ``cwm:2``."""

    name: str
    gain: CwmGain | None = None

    def __post_init__(self):
        if self.name not in FILTERS:
            raise InvalidParameterError(
                f"unknown filter {self.name!r}; choose from {', '.join(FILTERS)}"
            )
        if (self.name == "cwm") != (self.gain is not None):
            raise InvalidParameterError("a gain is required for cwm and only for cwm")

    @property
    def label(self):
        return f"cwm:{self.gain.k}" if self.gain is not None else self.name


def parse_filter(text):
    """Parse ``median``, ``mdb`` or ``cwm:K`` into a FilterChoice."""
    name, sep, param = text.strip().partition(":")
    name = name.lower()
    if name == "cwm":
        if not sep or not param.strip().isdigit():
            raise InvalidParameterError(f"cwm needs an integer gain, e.g. cwm:1 (got {text!r})")
        return FilterChoice("cwm", CwmGain(int(param)))
    if sep:
        raise InvalidParameterError(f"filter {name!r} takes no parameters (got {text!r})")
    return FilterChoice(name)


FILTERS = {
    "median": lambda img, choice: median_filter(img),
    "cwm": lambda img, choice: cwm_filter(img, choice.gain),
    "mdb": lambda img, choice: mdb_filter(img),
}


def apply_filter(img, choice, passes=DEFAULT_PASSES):
    """Run `choice` over `img` `passes` times, each pass on the previous output."""
    if passes < 1:
        raise InvalidParameterError(f"passes must be at least 1, got {passes}")
    out = img
    for n in range(passes):
        out = FILTERS[choice.name](out, choice)
        logger.debug("%s pass %d/%d done", choice.label, n + 1, passes)
    return out
