"""Restoration quality measures.

Decibel values are plain floats; perfect reconstruction (a zero error sum) is
``math.inf``. Error and energy sums are accumulated as 64-bit integers before a
single division and logarithm, so results do not depend on summation order.
Percentages are floats in [0, 100]. `posp` and `pona` raise when their
denominator is empty; `evaluate` records such a percentage as NaN.
"""

import logging
import math
from dataclasses import dataclass

import numpy as np

from impulse.errors import DegenerateReferenceError, ShapeError, ZeroDenominatorError
from impulse.imaging.noise import corrupted_count, require_same_shape

logger = logging.getLogger(__name__)

PEAK = 255


def _check_same_shape(*images):
    first = images[0]
    for other in images[1:]:
        if other.shape != first.shape:
            raise ShapeError(
                f"image sizes differ: {first.width}x{first.height} "
                f"vs {other.width}x{other.height}"
            )


def _wide(img):
    return img.pixels.astype(np.int64)


def _squared_error(a, b):
    return int(((_wide(a) - _wide(b)) ** 2).sum(dtype=np.int64))


def _ratio_db(numerator, denominator):
    if denominator == 0:
        return math.inf
    return 10.0 * math.log10(numerator / denominator)


def psnr(original, restored):
    """Peak signal-to-noise ratio in dB; inf for identical images."""
    _check_same_shape(original, restored)
    total = original.width * original.height
    return _ratio_db(total * PEAK * PEAK, _squared_error(original, restored))


def snr_db(reference, other):
    """Signal-to-noise ratio of `other` against `reference` in dB.

    Raises:
        ShapeError: If the images differ in size.
        DegenerateReferenceError: If every reference pixel is 0.
    """
    _check_same_shape(reference, other)
    energy = int((_wide(reference) ** 2).sum(dtype=np.int64))
    if energy == 0:
        raise DegenerateReferenceError("reference image is all zero; SNR is undefined")
    return _ratio_db(energy, _squared_error(reference, other))


def snri(original, noisy, restored):
    """SNR improvement: SNR of the restored image minus SNR of the noisy one.

    When a component is infinite the result is +inf if only the restored image
    is perfect, -inf if only the noisy one is, and 0.0 if both are.
    """
    restored_db = snr_db(original, restored)
    noisy_db = snr_db(original, noisy)
    return _difference_db(restored_db, noisy_db)


def _difference_db(restored_db, noisy_db):
    if math.isinf(restored_db) and math.isinf(noisy_db):
        return 0.0
    if math.isinf(restored_db):
        return math.inf
    if math.isinf(noisy_db):
        return -math.inf
    return restored_db - noisy_db


def posp(original, restored, mask):
    """Percentage of clean pixels whose value the filter changed."""
    _check_same_shape(original, restored)
    require_same_shape(original, mask)
    clean = ~mask.flags
    n_clean = int(np.count_nonzero(clean))
    if n_clean == 0:
        raise ZeroDenominatorError("every pixel is marked corrupted; POSP is undefined")
    spoiled = int(np.count_nonzero(clean & (original.pixels != restored.pixels)))
    return 100.0 * spoiled / n_clean


def pona(original, noisy, restored, mask):
    """Percentage of corrupted pixels whose absolute error strictly dropped."""
    _check_same_shape(original, noisy, restored)
    require_same_shape(original, mask)
    n_noisy = corrupted_count(mask)
    if n_noisy == 0:
        raise ZeroDenominatorError("no pixel is marked corrupted; PONA is undefined")
    truth = _wide(original)
    improved = np.abs(_wide(restored) - truth) < np.abs(_wide(noisy) - truth)
    return 100.0 * int(np.count_nonzero(improved & mask.flags)) / n_noisy


def _percent_or_nan(measure, *args):
    try:
        return measure(*args)
    except ZeroDenominatorError as e:
        logger.warning("%s; recording NaN", e)
        return math.nan


def noise_percent_of(mask):
    """Share of corrupted pixels, in percent."""
    return 100.0 * corrupted_count(mask) / mask.flags.size


@dataclass(frozen=True)
class MetricsRow:
    """One (filter, noise level) result."""

    filter_name: str
    noise_percent: float
    pona: float
    posp: float
    snr_restored: float
    snr_noisy: float
    snri: float
    psnr: float
    trials: int = 1


METRIC_FIELDS = ("pona", "posp", "snr_restored", "snr_noisy", "snri", "psnr")


def evaluate(original, noisy, restored, mask, filter_name, noise_percent):
    """Compute all six measures for one restoration.

    Args:
        original: Pristine image.
        noisy: Corrupted input given to the filter.
        restored: Filter output.
        mask: Ground-truth corruption record.
        filter_name: Row label, e.g. ``mdb``.
        noise_percent: Row label for the noise level.

    Returns:
        MetricsRow with snri equal to snr_restored - snr_noisy. pona is NaN
        when no pixel is masked and posp is NaN when every pixel is.
    """
    _check_same_shape(original, noisy, restored)
    require_same_shape(original, mask)
    snr_restored = snr_db(original, restored)
    snr_noisy = snr_db(original, noisy)
    return MetricsRow(
        filter_name=filter_name,
        noise_percent=noise_percent,
        pona=_percent_or_nan(pona, original, noisy, restored, mask),
        posp=_percent_or_nan(posp, original, restored, mask),
        snr_restored=snr_restored,
        snr_noisy=snr_noisy,
        snri=_difference_db(snr_restored, snr_noisy),
        psnr=psnr(original, restored),
    )


def average_rows(rows):
    """Mean of several trials of the same (filter, level) cell.

    Infinite and NaN values propagate. snri is recomputed from the averaged SNRs so
    the consistency invariant holds exactly.
    """
    if not rows:
        raise ValueError("cannot average zero rows")
    first = rows[0]
    means = {
        name: float(np.mean([getattr(r, name) for r in rows]))
        for name in METRIC_FIELDS
        if name != "snri"
    }
    means["snri"] = _difference_db(means["snr_restored"], means["snr_noisy"])
    return MetricsRow(
        filter_name=first.filter_name,
        noise_percent=first.noise_percent,
        trials=len(rows),
        **means,
    )
