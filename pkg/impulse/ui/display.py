"""Display functions for output."""

import math

from rich import box
from rich.markup import escape
from rich.table import Table

from .config import (
    console,
    COLOR_PRIMARY,
    COLOR_SECONDARY,
    COLOR_ERROR,
    COLOR_SUCCESS,
    COLOR_WARNING,
)


def print_error(message):
    """Display error message.

    Args:
        message: Error message text
    """
    console.print(
        f"[bold {COLOR_ERROR}]X[/bold {COLOR_ERROR}] [{COLOR_ERROR}]{escape(str(message))}[/{COLOR_ERROR}]",
        highlight=False,
    )


def print_success(message):
    """Display success message.

    Args:
        message: Success message text
    """
    console.print(
        f"[bold {COLOR_SUCCESS}]+[/bold {COLOR_SUCCESS}] [{COLOR_SUCCESS}]{escape(str(message))}[/{COLOR_SUCCESS}]",
        highlight=False,
    )


def print_warning(message):
    """Display warning message.

    Args:
        message: Warning message text
    """
    console.print(
        f"[bold {COLOR_WARNING}]![/bold {COLOR_WARNING}] [{COLOR_WARNING}]{escape(str(message))}[/{COLOR_WARNING}]",
        highlight=False,
    )


def _cell(value):
    if math.isinf(value):
        return "inf" if value > 0 else "-inf"
    return f"{value:.4f}"


def print_report(report):
    """Render benchmark rows as a table.

    Args:
        report: BenchReport to show
    """
    table = Table(
        title=f"[bold {COLOR_SECONDARY}]Restoration Benchmark[/bold {COLOR_SECONDARY}]",
        border_style=COLOR_PRIMARY,
        box=box.ROUNDED,
        show_header=True,
        header_style=f"bold {COLOR_SECONDARY}",
        row_styles=["dim", ""],
    )
    table.add_column("Filter", style=COLOR_SECONDARY, no_wrap=True)
    table.add_column("Noise %", justify="right")
    for name in ("PONA %", "POSP %", "SNR rest.", "SNR noisy", "SNRI", "PSNR"):
        table.add_column(name, justify="right")

    for row in report.rows:
        table.add_row(
            row.filter_name,
            format(row.noise_percent, "g"),
            _cell(row.pona),
            _cell(row.posp),
            _cell(row.snr_restored),
            _cell(row.snr_noisy),
            _cell(row.snri),
            _cell(row.psnr),
        )

    meta = report.metadata
    if meta:
        table.caption = (
            f"{meta.get('width')}x{meta.get('height')}  seed {meta.get('seed')}  "
            f"salt ratio {meta.get('salt_ratio')}  trials {meta.get('trials')}"
        )

    console.print()
    console.print(table)
    console.print()
