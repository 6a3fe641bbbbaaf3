"""Command-line argument parser for the restoration toolkit.

Defines the CLI interface, supporting:
- `corrupt`: add salt-and-pepper noise and save the ground-truth mask
- `filter`: restore an image with median, cwm:K or mdb
- `metrics`: score one restoration against the original
- `bench`: sweep noise levels and filters, emitting CSV tables and plot data
- Verbose logging (global flag)
"""

import argparse

from impulse.config import DEFAULT_FILTERS, DEFAULT_NOISE_LEVELS, DEFAULT_PASSES


def _percent_list(text):
    try:
        return [float(part) for part in text.split(",") if part.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a comma-separated list of numbers: {text!r}")


def _name_list(text):
    return [part.strip() for part in text.split(",") if part.strip()]


def _seed(text):
    try:
        return int(text, 0)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer seed: {text!r}")


parser = argparse.ArgumentParser(
    prog="impulse",
    description="Impulse noise restoration - median, CWM and min-max detector based filters",
    epilog="Example: impulse bench --image lena.pgm --filters median,cwm:1,cwm:2,mdb --seed 42",
)

parser.add_argument(
    "-v", "--verbose", action="store_true", help="Enable verbose output"
)

subparsers = parser.add_subparsers(dest="command", required=True, metavar="command")

# --- corrupt ---
corrupt = subparsers.add_parser(
    "corrupt", help="Add salt-and-pepper noise to a PGM image"
)
corrupt.add_argument("--in", dest="input", required=True, help="Clean PGM image")
corrupt.add_argument("--out", required=True, help="Noisy PGM to write")
corrupt.add_argument(
    "--mask", required=True, help="Mask PGM to write (255 = corrupted)"
)
corrupt.add_argument(
    "--noise", type=float, required=True, help="Impulse density in percent"
)
corrupt.add_argument(
    "--salt-ratio", type=float, default=None, help="Fraction of impulses that are white"
)
corrupt.add_argument("--seed", type=_seed, default=None, help="Unsigned 64-bit seed")

# --- filter ---
filter_cmd = subparsers.add_parser("filter", help="Restore a noisy PGM image")
filter_cmd.add_argument("--in", dest="input", required=True, help="Noisy PGM image")
filter_cmd.add_argument(
    "--filter", required=True, help="median, mdb or cwm:K (e.g. cwm:1)"
)
filter_cmd.add_argument("--out", required=True, help="Restored PGM to write")
filter_cmd.add_argument(
    "--passes",
    type=int,
    default=DEFAULT_PASSES,
    help=f"Apply the filter this many times (default: {DEFAULT_PASSES})",
)

# --- metrics ---
metrics = subparsers.add_parser(
    "metrics", help="Print PONA, POSP, SNR and PSNR for one restoration as CSV"
)
metrics.add_argument("--original", required=True, help="Clean PGM image")
metrics.add_argument("--noisy", required=True, help="Noisy PGM image")
metrics.add_argument("--restored", required=True, help="Restored PGM image")
metrics.add_argument("--mask", required=True, help="Mask PGM written by corrupt")
metrics.add_argument(
    "--filter-name", default="restored", help="Label for the filter column"
)
metrics.add_argument(
    "--no-header", action="store_true", help="Print the row without the CSV header"
)

# --- bench ---
bench = subparsers.add_parser(
    "bench", help="Sweep noise levels and filters over one image"
)
bench.add_argument("--image", required=True, help="Clean PGM image")
bench.add_argument(
    "--filters",
    type=_name_list,
    default=list(DEFAULT_FILTERS),
    help=f"Comma-separated filters (default: {','.join(DEFAULT_FILTERS)})",
)
bench.add_argument(
    "--noise-levels",
    type=_percent_list,
    default=list(DEFAULT_NOISE_LEVELS),
    help="Comma-separated noise percentages (default: 5,10,15,20,25,30)",
)
bench.add_argument(
    "--salt-ratio", type=float, default=None, help="Fraction of impulses that are white"
)
bench.add_argument("--seed", type=_seed, default=None, help="Base seed")
bench.add_argument(
    "--trials", type=int, default=None, help="Noise realizations averaged per cell"
)
bench.add_argument(
    "--passes",
    type=int,
    default=DEFAULT_PASSES,
    help=f"Apply each filter this many times (default: {DEFAULT_PASSES})",
)
bench.add_argument(
    "--out", default=None, help="CSV report path (default: standard output)"
)
bench.add_argument(
    "--plot-data",
    default=None,
    metavar="DIR",
    help="Write PONA and PSNR vs noise series, one CSV per filter",
)
bench.add_argument(
    "--tables",
    default=None,
    metavar="DIR",
    help="Write one pivot CSV per measure (noise level x filter)",
)
bench.add_argument(
    "--metadata", default=None, metavar="PATH", help="Write run metadata as JSON"
)
bench.add_argument(
    "--save-images",
    default=None,
    metavar="DIR",
    help="Save the noisy and restored images of the first trial of every level",
)
