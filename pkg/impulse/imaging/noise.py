"""Deterministic salt-and-pepper corruption.

Position selection is frozen so stored goldens stay valid:

1. Build a PCG64 generator with ``numpy.random.default_rng(seed)``.
2. ``order = rng.permutation(width * height)`` over row-major indices.
3. The first ``n = round_half_up(density * N)`` indices are corrupted.
4. The first ``round_half_up(salt_ratio * n)`` of those become 255, the rest 0.

Per-experiment seeds come from ``derive_seed``, which mixes (base seed, level,
trial) through ``numpy.random.SeedSequence`` so adding or removing a level
never changes another level's noise.
"""

import logging
import math
from dataclasses import dataclass

import numpy as np

from impulse.config import MASK_SALT_VALUE, MAX_SEED
from impulse.errors import InvalidParameterError, ShapeError
from impulse.imaging.image import GrayImage
from impulse.imaging.pgm import load_pgm, save_pgm

logger = logging.getLogger(__name__)

SALT = 255
PEPPER = 0

# Levels are mixed into seeds at this resolution (0.001 percent)
_LEVEL_SCALE = 1000


def round_half_up(x):
    return int(math.floor(x + 0.5))


@dataclass(frozen=True)
class NoiseSpec:
    """Impulse density, salt/pepper split, and seed of one corruption.

    Args:
        density: Fraction of pixels to corrupt, in [0, 1].
        salt_ratio: Fraction of corrupted pixels set to 255, in [0, 1].
        seed: Unsigned 64-bit seed.
    """

    density: float
    salt_ratio: float = 0.5
    seed: int = 0

    def __post_init__(self):
        if not 0.0 <= self.density <= 1.0:
            raise InvalidParameterError(f"density {self.density} outside [0, 1]")
        if not 0.0 <= self.salt_ratio <= 1.0:
            raise InvalidParameterError(f"salt_ratio {self.salt_ratio} outside [0, 1]")
        if not 0 <= self.seed <= MAX_SEED:
            raise InvalidParameterError(f"seed {self.seed} is not an unsigned 64-bit value")

    @classmethod
    def from_percent(cls, percent, salt_ratio=0.5, seed=0):
        return cls(density=percent / 100.0, salt_ratio=salt_ratio, seed=seed)


@dataclass(frozen=True, eq=False)
class NoiseMask:
    """Row-major record of which pixels were hit at injection time."""

    flags: np.ndarray

    def __post_init__(self):
        flags = np.asarray(self.flags)
        if flags.ndim != 2 or flags.size == 0:
            raise InvalidParameterError("mask must be a non-empty 2-D array")
        frozen = np.array(flags, dtype=bool, copy=True)
        frozen.flags.writeable = False
        object.__setattr__(self, "flags", frozen)

    @property
    def width(self):
        return int(self.flags.shape[1])

    @property
    def height(self):
        return int(self.flags.shape[0])

    @property
    def shape(self):
        return self.flags.shape

    def __eq__(self, other):
        if not isinstance(other, NoiseMask):
            return NotImplemented
        return self.shape == other.shape and bool(np.array_equal(self.flags, other.flags))

    __hash__ = None


def inject_salt_pepper(img, spec):
    """Corrupt an exact number of pixels with 0/255 impulses.

    Args:
        img: Clean image.
        spec: Density, salt ratio and seed.

    Returns:
        Tuple (noisy image, mask of corrupted positions). The same (img, spec)
        always gives the same result.
    """
    total = img.width * img.height
    n_hit = round_half_up(spec.density * total)
    n_salt = round_half_up(spec.salt_ratio * n_hit)

    rng = np.random.default_rng(spec.seed)
    hit = rng.permutation(total)[:n_hit]

    noisy = np.array(img.pixels, copy=True).ravel()
    noisy[hit[:n_salt]] = SALT
    noisy[hit[n_salt:]] = PEPPER

    flags = np.zeros(total, dtype=bool)
    flags[hit] = True

    logger.debug(
        "injected %d impulses (%d salt, %d pepper) into %dx%d image, seed %d",
        n_hit,
        n_salt,
        n_hit - n_salt,
        img.width,
        img.height,
        spec.seed,
    )
    shape = (img.height, img.width)
    return GrayImage(noisy.reshape(shape)), NoiseMask(flags.reshape(shape))


def corrupted_count(mask):
    """Number of corrupted pixels in the mask."""
    return int(np.count_nonzero(mask.flags))


def derive_seed(base_seed, level, trial):
    """Seed for one (noise level, trial) cell of an experiment.

    Args:
        base_seed: The experiment's seed.
        level: Noise level in percent; mixed in at 0.001 percent resolution.
        trial: Zero-based trial index.

    Returns:
        Unsigned 64-bit seed.
    """
    entropy = [int(base_seed), round_half_up(level * _LEVEL_SCALE), int(trial)]
    state = np.random.SeedSequence(entropy).generate_state(1, dtype=np.uint64)
    return int(state[0])


def mask_to_image(mask):
    """Render a mask as an image: 255 where corrupted, 0 elsewhere."""
    return GrayImage(np.where(mask.flags, MASK_SALT_VALUE, 0).astype(np.uint8))


def mask_from_image(img):
    """Inverse of mask_to_image; rejects images with values other than 0/255."""
    values = img.pixels
    stray = ~np.isin(values, (0, MASK_SALT_VALUE))
    if stray.any():
        row, col = np.argwhere(stray)[0]
        raise InvalidParameterError(
            f"mask image holds value {values[row, col]} at ({row}, {col}); "
            f"only 0 and {MASK_SALT_VALUE} are allowed"
        )
    return NoiseMask(values == MASK_SALT_VALUE)


def save_mask(path, mask):
    save_pgm(path, mask_to_image(mask))


def load_mask(path):
    return mask_from_image(load_pgm(path))


def require_same_shape(img, mask):
    if img.shape != mask.shape:
        raise ShapeError(
            f"mask is {mask.width}x{mask.height} but image is {img.width}x{img.height}"
        )
