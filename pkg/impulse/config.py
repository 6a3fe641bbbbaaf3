"""Configuration settings for the restoration toolkit.

Defines:
- Benchmark defaults (noise levels, salt ratio, seed, trials, passes)
- CSV formatting constants
- Environment overrides loaded from a `.env` file
"""

import os

from dotenv import find_dotenv, load_dotenv  # type: ignore

from impulse.errors import ConfigError

load_dotenv(find_dotenv(usecwd=True))

# Noise percentages swept by `bench` when none are given
DEFAULT_NOISE_LEVELS = (5.0, 10.0, 15.0, 20.0, 25.0, 30.0)

# Fraction of corrupted pixels set to white; the rest go black
DEFAULT_SALT_RATIO = 0.5

DEFAULT_SEED = 42

# Number of independent noise realizations averaged per cell
DEFAULT_TRIALS = 1

# How many times a filter is applied in sequence
DEFAULT_PASSES = 1

DEFAULT_FILTERS = ("median", "cwm:1", "cwm:2", "mdb")

MAX_SEED = 2**64 - 1

# Decimal places in every CSV number, matching the published tables
CSV_DECIMALS = 4

CSV_HEADER = (
    "filter",
    "noise_percent",
    "pona",
    "posp",
    "snr_restored_db",
    "snr_noisy_db",
    "snri_db",
    "psnr_db",
)

# Mask files mark corrupted pixels with this value, clean pixels with 0
MASK_SALT_VALUE = 255


def _env(name, default, cast):
    raw = os.environ.get(name)
    if raw is None or raw.strip() == "":
        return default
    try:
        return cast(raw.strip())
    except ValueError as e:
        raise ConfigError(f"{name}={raw!r} is not a valid value: {e}") from e


def get_default_seed():
    """Seed from IMPULSE_SEED, falling back to DEFAULT_SEED."""
    seed = _env("IMPULSE_SEED", DEFAULT_SEED, int)
    if not 0 <= seed <= MAX_SEED:
        raise ConfigError(f"IMPULSE_SEED={seed} is outside [0, 2**64)")
    return seed


def get_default_salt_ratio():
    """Salt ratio from IMPULSE_SALT_RATIO, falling back to DEFAULT_SALT_RATIO."""
    ratio = _env("IMPULSE_SALT_RATIO", DEFAULT_SALT_RATIO, float)
    if not 0.0 <= ratio <= 1.0:
        raise ConfigError(f"IMPULSE_SALT_RATIO={ratio} is outside [0, 1]")
    return ratio


def get_default_trials():
    """Trial count from IMPULSE_TRIALS, falling back to DEFAULT_TRIALS."""
    trials = _env("IMPULSE_TRIALS", DEFAULT_TRIALS, int)
    if trials < 1:
        raise ConfigError(f"IMPULSE_TRIALS={trials} must be at least 1")
    return trials
