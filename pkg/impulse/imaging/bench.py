"""Noise-level sweep: corrupt, filter, measure, and serialize.

For every (noise level, trial) the clean image is corrupted once with a seed
derived from (base seed, level, trial); every requested filter then restores
that same noisy image. Trials are averaged per (filter, level). Rows are
ordered by the filter order of the request, then by ascending noise level.
"""

import csv
import io
import json
import logging
import math
from dataclasses import dataclass, field
from pathlib import Path

from impulse import __version__
from impulse.config import (
    CSV_DECIMALS,
    CSV_HEADER,
    DEFAULT_NOISE_LEVELS,
    DEFAULT_PASSES,
    DEFAULT_SALT_RATIO,
    DEFAULT_SEED,
    DEFAULT_TRIALS,
    MAX_SEED,
)
from impulse.errors import ExperimentError, ImpulseError
from impulse.imaging.filters import apply_filter
from impulse.imaging.image import require_filterable
from impulse.imaging.metrics import MetricsRow, average_rows, evaluate
from impulse.imaging.noise import NoiseSpec, derive_seed, inject_salt_pepper
from impulse.imaging.pgm import load_pgm, save_pgm

logger = logging.getLogger(__name__)

# CSV column -> MetricsRow attribute, for the six measure columns
_COLUMNS = dict(zip(CSV_HEADER[2:], ("pona", "posp", "snr_restored", "snr_noisy", "snri", "psnr")))

# Pivot tables in the order the published results present them
TABLES = {
    "pona": "% noise attenuated",
    "posp": "% image spoil",
    "snr_restored": "SNR restored (dB)",
    "snr_noisy": "SNR of noisy (dB)",
    "snri": "difference in SNR (dB)",
    "psnr": "peak signal to noise ratio (dB)",
}

# Plot series: PONA and PSNR against noise level
FIGURES = {"pona_vs_noise": "pona", "psnr_vs_noise": "psnr"}


@dataclass(frozen=True)
class ExperimentSpec:
    """What to sweep.

    Args:
        image_path: PGM file holding the clean image.
        filters: FilterChoice list, in report order.
        noise_levels: Percentages in (0, 100].
        salt_ratio: Fraction of impulses that are white.
        seed: Base seed; per-cell seeds are derived from it.
        trials: Noise realizations averaged per cell.
        passes: Times each filter is applied.
    """

    image_path: str
    filters: tuple
    noise_levels: tuple = DEFAULT_NOISE_LEVELS
    salt_ratio: float = DEFAULT_SALT_RATIO
    seed: int = DEFAULT_SEED
    trials: int = DEFAULT_TRIALS
    passes: int = DEFAULT_PASSES

    def __post_init__(self):
        object.__setattr__(self, "filters", tuple(self.filters))
        object.__setattr__(self, "noise_levels", tuple(float(v) for v in self.noise_levels))
        if not self.filters:
            raise ExperimentError("at least one filter is required")
        if not self.noise_levels:
            raise ExperimentError("at least one noise level is required")
        for level in self.noise_levels:
            if not 0.0 < level <= 100.0:
                raise ExperimentError(f"noise level {level}% is outside (0, 100]")
        if len(set(self.noise_levels)) != len(self.noise_levels):
            raise ExperimentError("noise levels must be distinct")
        labels = [f.label for f in self.filters]
        if len(set(labels)) != len(labels):
            raise ExperimentError("filters must be distinct")
        if self.trials < 1:
            raise ExperimentError(f"trials must be at least 1, got {self.trials}")
        if self.passes < 1:
            raise ExperimentError(f"passes must be at least 1, got {self.passes}")
        if not 0.0 <= self.salt_ratio <= 1.0:
            raise ExperimentError(f"salt ratio {self.salt_ratio} outside [0, 1]")
        if not 0 <= self.seed <= MAX_SEED:
            raise ExperimentError(f"seed {self.seed} is not an unsigned 64-bit value")


@dataclass
class BenchReport:
    rows: list
    metadata: dict = field(default_factory=dict)


def run_experiment(spec, image=None, on_cell=None, image_dir=None):
    """Run the sweep described by `spec`.

    Args:
        spec: The experiment.
        image: Clean image to use instead of reading `spec.image_path`.
        on_cell: Optional callback invoked as ``on_cell(done, total)`` after
            each (level, trial) cell.
        image_dir: When set, the first trial of every level is saved there as
            ``noisy_<level>.pgm`` plus one ``<filter>_<level>.pgm`` per filter.

    Returns:
        BenchReport with one row per (filter, level).
    """
    if image is None:
        try:
            image = load_pgm(spec.image_path)
        except OSError as e:
            raise ExperimentError(f"cannot read image {spec.image_path!r}: {e.strerror or e}") from e
    require_filterable(image)

    by_cell = {
        (f.label, level): [] for f in spec.filters for level in sorted(spec.noise_levels)
    }
    seeds = {}
    total = len(spec.noise_levels) * spec.trials
    done = 0

    for level in spec.noise_levels:
        for trial in range(spec.trials):
            seed = derive_seed(spec.seed, level, trial)
            seeds[f"{_format_level(level)}/{trial}"] = seed
            noise = NoiseSpec.from_percent(level, spec.salt_ratio, seed)
            noisy, mask = inject_salt_pepper(image, noise)
            keep = image_dir is not None and trial == 0
            if keep:
                _save_cell_image(image_dir, "noisy", level, noisy)
            for choice in spec.filters:
                restored = apply_filter(noisy, choice, spec.passes)
                if keep:
                    _save_cell_image(image_dir, _file_stem(choice.label), level, restored)
                row = evaluate(image, noisy, restored, mask, choice.label, level)
                by_cell[(choice.label, level)].append(row)
            done += 1
            logger.debug("cell level=%s trial=%d seed=%d done", level, trial, seed)
            if on_cell is not None:
                on_cell(done, total)

    rows = [average_rows(trials) for trials in by_cell.values()]
    metadata = {
        "tool": "impulse",
        "version": __version__,
        "image": str(spec.image_path),
        "width": image.width,
        "height": image.height,
        "seed": spec.seed,
        "salt_ratio": spec.salt_ratio,
        "trials": spec.trials,
        "passes": spec.passes,
        "filters": [f.label for f in spec.filters],
        "noise_levels": list(spec.noise_levels),
        "derived_seeds": seeds,
    }
    return BenchReport(rows=rows, metadata=metadata)


def _save_cell_image(directory, stem, level, img):
    path = Path(directory) / f"{stem}_{_format_level(level)}.pgm"
    save_pgm(path, img)
    logger.debug("saved %s", path)


def _format_level(level):
    return format(level, "g")


def _format_value(value):
    if math.isinf(value):
        return "inf" if value > 0 else "-inf"
    return f"{value:.{CSV_DECIMALS}f}"


def _csv_bytes(header, records):
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(records)
    return buffer.getvalue().encode("utf-8")


def emit_csv(report, header=True):
    """Serialize report rows as UTF-8 CSV with 4 decimals, ``inf`` and ``nan``."""
    records = [
        [row.filter_name, _format_level(row.noise_percent)]
        + [_format_value(getattr(row, attr)) for attr in _COLUMNS.values()]
        for row in report.rows
    ]
    data = _csv_bytes(CSV_HEADER, records)
    if not header:
        data = data.split(b"\n", 1)[1]
    return data


def read_csv(data):
    """Parse bytes produced by emit_csv back into MetricsRow objects."""
    reader = csv.reader(io.StringIO(data.decode("utf-8")))
    header = next(reader, None)
    if tuple(header or ()) != CSV_HEADER:
        raise ImpulseError(f"unexpected CSV header: {header}")
    rows = []
    for record in reader:
        if not record:
            continue
        values = {attr: float(text) for attr, text in zip(_COLUMNS.values(), record[2:])}
        rows.append(MetricsRow(filter_name=record[0], noise_percent=float(record[1]), **values))
    return rows


def emit_table(report, metric):
    """One measure pivoted to rows = noise level, columns = filters."""
    if metric not in TABLES:
        raise ImpulseError(f"unknown metric {metric!r}")
    filters = list(dict.fromkeys(row.filter_name for row in report.rows))
    levels = sorted({row.noise_percent for row in report.rows})
    cells = {(row.filter_name, row.noise_percent): getattr(row, metric) for row in report.rows}
    records = [
        [_format_level(level)] + [_format_value(cells[(name, level)]) for name in filters]
        for level in levels
    ]
    return _csv_bytes(["noise_percent", *filters], records)


def emit_plot_series(report, figure, filter_name):
    """Two-column (noise_percent, value) series for one filter of one figure."""
    metric = FIGURES[figure]
    records = [
        [_format_level(row.noise_percent), _format_value(getattr(row, metric))]
        for row in sorted(report.rows, key=lambda r: r.noise_percent)
        if row.filter_name == filter_name
    ]
    return _csv_bytes(["noise_percent", metric], records)


def _file_stem(label):
    return label.replace(":", "-k")


def save_tables(directory, report):
    """Write one pivot CSV per measure into `directory`; returns the paths."""
    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)
    paths = []
    for metric in TABLES:
        path = directory / f"{metric}.csv"
        path.write_bytes(emit_table(report, metric))
        paths.append(path)
    return paths


def save_plot_data(directory, report):
    """Write one two-column series per (figure, filter); returns the paths."""
    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)
    paths = []
    for figure in FIGURES:
        for name in dict.fromkeys(row.filter_name for row in report.rows):
            path = directory / f"{figure}_{_file_stem(name)}.csv"
            path.write_bytes(emit_plot_series(report, figure, name))
            paths.append(path)
    return paths


def save_csv(path, data):
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_bytes(data)


def save_metadata(path, report):
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w") as f:
        json.dump(report.metadata, f, indent=2)
