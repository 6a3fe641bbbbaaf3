"""Subcommand dispatcher.

Routes parsed command-line arguments to the handler for each subcommand.
Handlers raise ImpulseError (or OSError) on failure; `main` turns those into a
one-line diagnostic and exit code 1.
"""

import sys

from impulse.config import get_default_salt_ratio, get_default_seed, get_default_trials
from impulse.imaging.bench import (
    BenchReport,
    ExperimentSpec,
    emit_csv,
    run_experiment,
    save_csv,
    save_metadata,
    save_plot_data,
    save_tables,
)
from impulse.imaging.filters import apply_filter, parse_filter
from impulse.imaging.metrics import evaluate, noise_percent_of
from impulse.imaging.noise import NoiseSpec, corrupted_count, inject_salt_pepper, load_mask, save_mask
from impulse.imaging.pgm import load_pgm, save_pgm
from impulse.ui import print_report, print_success, print_warning, processing_panel


def _or_default(value, getter):
    return getter() if value is None else value


def _write_stdout(data):
    sys.stdout.write(data.decode("utf-8"))
    sys.stdout.flush()


def run_corrupt(args):
    """Corrupt a clean image and save the noisy image plus its mask."""
    image = load_pgm(args.input)
    spec = NoiseSpec.from_percent(
        args.noise,
        salt_ratio=_or_default(args.salt_ratio, get_default_salt_ratio),
        seed=_or_default(args.seed, get_default_seed),
    )
    noisy, mask = inject_salt_pepper(image, spec)
    total = image.width * image.height
    if not (spec.density * total).is_integer():
        print_warning(
            f"{args.noise}% of {total} pixels is not a whole count; "
            f"corrupting {corrupted_count(mask)}"
        )
    save_pgm(args.out, noisy)
    save_mask(args.mask, mask)
    print_success(
        f"Corrupted {corrupted_count(mask)} of {total} pixels "
        f'-> "{args.out}", mask "{args.mask}"'
    )


def run_filter(args):
    """Apply one filter to a noisy image."""
    choice = parse_filter(args.filter)
    noisy = load_pgm(args.input)
    restored = apply_filter(noisy, choice, args.passes)
    save_pgm(args.out, restored)
    print_success(f'Applied {choice.label} x{args.passes} -> "{args.out}"')


def run_metrics(args):
    """Score one restoration and print it as CSV."""
    original = load_pgm(args.original)
    noisy = load_pgm(args.noisy)
    restored = load_pgm(args.restored)
    mask = load_mask(args.mask)
    row = evaluate(
        original,
        noisy,
        restored,
        mask,
        filter_name=args.filter_name,
        noise_percent=noise_percent_of(mask),
    )
    _write_stdout(emit_csv(BenchReport(rows=[row]), header=not args.no_header))


def run_bench(args):
    """Run a noise sweep and emit the report."""
    spec = ExperimentSpec(
        image_path=args.image,
        filters=[parse_filter(name) for name in args.filters],
        noise_levels=args.noise_levels,
        salt_ratio=_or_default(args.salt_ratio, get_default_salt_ratio),
        seed=_or_default(args.seed, get_default_seed),
        trials=_or_default(args.trials, get_default_trials),
        passes=args.passes,
    )

    with processing_panel("Running benchmark") as advance:
        report = run_experiment(spec, on_cell=advance, image_dir=args.save_images)

    data = emit_csv(report)
    if args.out is None:
        _write_stdout(data)
    else:
        save_csv(args.out, data)
        print_report(report)
        print_success(f'Wrote {len(report.rows)} rows to "{args.out}"')

    if args.plot_data:
        paths = save_plot_data(args.plot_data, report)
        print_success(f'Wrote {len(paths)} plot series to "{args.plot_data}"')
    if args.tables:
        paths = save_tables(args.tables, report)
        print_success(f'Wrote {len(paths)} tables to "{args.tables}"')
    if args.metadata:
        save_metadata(args.metadata, report)
        print_success(f'Wrote metadata to "{args.metadata}"')
    if args.save_images:
        print_success(f'Saved noisy and restored images to "{args.save_images}"')


COMMANDS = {
    "corrupt": run_corrupt,
    "filter": run_filter,
    "metrics": run_metrics,
    "bench": run_bench,
}


def call_command(args):
    """Run the handler for `args.command`.

    Args:
        args: Namespace produced by the argument parser.
    """
    COMMANDS[args.command](args)
