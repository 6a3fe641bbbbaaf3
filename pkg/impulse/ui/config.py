"""Configuration constants and shared console for the UI package."""

import logging

from rich.console import Console
from rich.logging import RichHandler

# =============================================================================
# CONFIGURATION CONSTANTS
# =============================================================================

COLOR_PRIMARY = "magenta"
COLOR_SECONDARY = "cyan"
COLOR_SUCCESS = "green"
COLOR_ERROR = "red"
COLOR_WARNING = "yellow"

# =============================================================================
# GLOBAL STATE
# =============================================================================

# stdout is reserved for CSV output
console = Console(stderr=True)


def setup_logging(verbose=False):
    """Route `logging` through rich; DEBUG when verbose, WARNING otherwise."""
    logging.basicConfig(
        level=logging.DEBUG if verbose else logging.WARNING,
        format="%(message)s",
        datefmt="[%X]",
        handlers=[RichHandler(console=console, show_path=verbose)],
        force=True,
    )
