"""Context managers for display management."""

from contextlib import contextmanager

from rich.progress import BarColumn, MofNCompleteColumn, Progress, SpinnerColumn, TextColumn

from .config import console, COLOR_PRIMARY, COLOR_SECONDARY


@contextmanager
def processing_panel(message="Running benchmark", total=None):
    """Display a spinner and progress bar while a long operation runs.

    Args:
        message: Status message to display
        total: Number of steps, or None for an indeterminate spinner

    Yields:
        Callback ``advance(done, total)`` that updates the bar
    """
    progress = Progress(
        SpinnerColumn("aesthetic", style=COLOR_PRIMARY),
        TextColumn(f"[bold {COLOR_SECONDARY}]{{task.description}}"),
        BarColumn(complete_style=COLOR_PRIMARY),
        MofNCompleteColumn(),
        console=console,
        transient=True,
    )
    task = progress.add_task(message, total=total)

    def advance(done, steps):
        progress.update(task, completed=done, total=steps)

    with progress:
        yield advance
