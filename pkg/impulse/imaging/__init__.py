"""Images, noise, filters, metrics and the benchmark sweep."""

from .image import GrayImage, PixelCoord, Window9, window_at, interior_windows
from .pgm import read_pgm, write_pgm, load_pgm, save_pgm
from .noise import (
    NoiseMask,
    NoiseSpec,
    corrupted_count,
    derive_seed,
    inject_salt_pepper,
    load_mask,
    save_mask,
)
from .filters import (
    CwmGain,
    FilterChoice,
    apply_filter,
    cwm_filter,
    is_minmax_outlier,
    mdb_filter,
    median9,
    median_filter,
    parse_filter,
    weighted_median,
    weighted_median_center,
)
from .metrics import MetricsRow, evaluate, pona, posp, psnr, snr_db, snri
from .bench import BenchReport, ExperimentSpec, emit_csv, emit_table, read_csv, run_experiment

__all__ = [
    # image_core
    "GrayImage",
    "PixelCoord",
    "Window9",
    "window_at",
    "interior_windows",
    "read_pgm",
    "write_pgm",
    "load_pgm",
    "save_pgm",
    # noise_model
    "NoiseMask",
    "NoiseSpec",
    "corrupted_count",
    "derive_seed",
    "inject_salt_pepper",
    "load_mask",
    "save_mask",
    # filters
    "CwmGain",
    "FilterChoice",
    "apply_filter",
    "cwm_filter",
    "is_minmax_outlier",
    "mdb_filter",
    "median9",
    "median_filter",
    "parse_filter",
    "weighted_median",
    "weighted_median_center",
    # metrics
    "MetricsRow",
    "evaluate",
    "pona",
    "posp",
    "psnr",
    "snr_db",
    "snri",
    # bench
    "BenchReport",
    "ExperimentSpec",
    "emit_csv",
    "emit_table",
    "read_csv",
    "run_experiment",
]
