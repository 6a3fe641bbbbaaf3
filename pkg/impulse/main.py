"""Main module for the impulse-noise restoration CLI.

Parses arguments, configures logging, and dispatches to the subcommand
handlers:
- corrupt: deterministic salt-and-pepper noise with a ground-truth mask
- filter: median, center weighted median or min-max detector based filtering
- metrics: PONA, POSP, SNR, SNRI and PSNR for one restoration
- bench: a full noise-level sweep with CSV, table and plot-data output

Exit codes: 0 on success, 1 on a domain or I/O error, 2 on a usage error.
"""

import sys

from impulse.argv_parser import parser
from impulse.call_command import call_command
from impulse.errors import ImpulseError
from impulse.ui import print_error, setup_logging


def cli_main(argv=None):
    """Run the CLI and return its exit code.

    Args:
        argv: Arguments without the program name; defaults to sys.argv[1:].

    Returns:
        0 on success, 1 on a domain or I/O error, 2 on a usage error.
    """
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        # argparse exits 2 on bad usage and 0 after --help
        return e.code if isinstance(e.code, int) else 2

    setup_logging(args.verbose)

    try:
        call_command(args)
    except ImpulseError as e:
        print_error(str(e))
        return 1
    except OSError as e:
        where = f"{e.filename}: " if e.filename else ""
        print_error(f"{where}{e.strerror or e}")
        return 1

    return 0


def main():
    """Console-script entry point."""
    sys.exit(cli_main())


if __name__ == "__main__":
    main()
