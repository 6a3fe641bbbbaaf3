"""Console UI package for the restoration toolkit.

All output goes to stderr through one rich Console:
- Status lines for errors, successes and warnings
- A progress spinner for benchmark sweeps
- A table view of benchmark results
- Rich-formatted logging
"""

from .display import (
    print_error,
    print_report,
    print_success,
    print_warning,
)
from .containers import processing_panel
from .config import console, setup_logging

__all__ = [
    # Display functions
    "print_error",
    "print_report",
    "print_success",
    "print_warning",
    # Context managers
    "processing_panel",
    # Console and logging
    "console",
    "setup_logging",
]
