"""Main entry point for the domaingauge CLI.

This module provides:
- Command-line argument parsing
- Configuration loading and command routing
- Exit-code and error-object mapping
- Dependency checking and logging setup
"""

import argparse
import importlib.util
import logging
import logging.handlers
import sys
from collections.abc import Callable, Sequence
from pathlib import Path

import structlog


def configure_structlog() -> None:
    """Route structlog through stdlib logging so nothing reaches stdout."""
    structlog.configure(
        processors=[
            structlog.stdlib.filter_by_level,
            structlog.stdlib.add_logger_name,
            structlog.stdlib.add_log_level,
            structlog.stdlib.PositionalArgumentsFormatter(),
            structlog.processors.TimeStamper(fmt="iso"),
            structlog.processors.StackInfoRenderer(),
            structlog.processors.format_exc_info,
            structlog.processors.UnicodeDecoder(),
            structlog.processors.KeyValueRenderer(key_order=["timestamp", "level", "logger", "event"]),
        ],
        wrapper_class=structlog.stdlib.BoundLogger,
        context_class=dict,
        logger_factory=structlog.stdlib.LoggerFactory(),
        cache_logger_on_first_use=True,
    )


def setup_logging(log_file: Path | None = None, level: str = "INFO") -> Path:
    """Redirect logging to a rotating file so stdout only carries payloads.

    Logs are written to ~/.domaingauge/logs/domaingauge.log unless ``log_file`` is given.

    Returns:
        The log file path
    """
    from domaingauge_cli.core import LOG_BACKUP_COUNT, LOG_DIR, LOG_FILE_NAME, LOG_MAX_BYTES

    if log_file is None:
        log_file = LOG_DIR / LOG_FILE_NAME
    log_file.parent.mkdir(parents=True, exist_ok=True)

    file_handler = logging.handlers.RotatingFileHandler(log_file, maxBytes=LOG_MAX_BYTES, backupCount=LOG_BACKUP_COUNT)
    file_handler.setFormatter(logging.Formatter("%(asctime)s [%(levelname)s] %(name)s: %(message)s"))

    # Remove all existing handlers from root logger
    root = logging.getLogger()
    for handler in root.handlers[:]:
        root.removeHandler(handler)

    root.addHandler(file_handler)
    root.setLevel(getattr(logging, level.upper(), logging.INFO))

    # numpy/scipy warnings routed through logging stay quiet
    logging.getLogger("py.warnings").setLevel(logging.ERROR)

    configure_structlog()
    return log_file


def check_cli_dependencies() -> None:
    """Check that the numeric and console dependencies are installed.

    Raises:
        SystemExit: If any required dependency is missing
    """
    required = {"numpy": "numpy", "scipy": "scipy", "mpmath": "mpmath", "rich": "rich", "dotenv": "python-dotenv"}
    missing = [pkg for module, pkg in required.items() if importlib.util.find_spec(module) is None]

    if missing:
        print("\nMissing required CLI dependencies!")
        print("\nThe following packages are required to use the domaingauge CLI:")
        for pkg in missing:
            print(f"  - {pkg}")
        print("\nPlease install them with:")
        print("  pip install domaingauge-cli")
        sys.exit(1)


def _add_output(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--output", "-o", help="Write the payload to this file instead of stdout")


def parse_args(argv: Sequence[str] | None = None) -> argparse.Namespace:
    """Parse command line arguments.

    Returns:
        argparse.Namespace with ``command`` set to one of eqcheck, reduce, dims,
        verify-bireduction, wonderland or verify, plus that command's options
    """
    from domaingauge_cli.certificates import RELATIONS
    from domaingauge_cli.commands.reduce import MAPS
    from domaingauge_cli.commands.verify import SUITES
    from domaingauge_cli.commands.wonderland import MEASURES, TABLES, parse_horizons
    from domaingauge_cli.core import DEFAULT_INTERLEAVE_LENGTH

    parser = argparse.ArgumentParser(
        prog="domaingauge",
        description="domaingauge - certified equivalence checks for sequences and operator domains",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="Exit codes: 0 equivalent/success, 1 not equivalent/failed check, 2 input error, 3 internal invariant failure",
    )
    parser.add_argument("--config", help="Path to config.yaml (default: search ~/.domaingauge then the working directory)")

    subparsers = parser.add_subparsers(dest="command", required=True, help="Command to run")

    # eqcheck
    eqcheck = subparsers.add_parser("eqcheck", help="Decide a relation and print its certificate")
    eqcheck.add_argument("relation", choices=RELATIONS)
    eqcheck.add_argument("a", help="First input JSON file ('-' for stdin)")
    eqcheck.add_argument("b", help="Second input JSON file")
    eqcheck.add_argument("--power", type=int, choices=(1, 2), default=1, help="Contraction power for domu (default: 1)")
    _add_output(eqcheck)

    # reduce
    reduce = subparsers.add_parser("reduce", help="Apply a reduction map")
    reduce.add_argument("map", choices=MAPS)
    reduce.add_argument("input", help="Input JSON file ('-' for stdin)")
    reduce.add_argument("--power", type=int, choices=(1, 2), default=1, help="Band power for psik (default: 1)")
    _add_output(reduce)

    # dims
    dims = subparsers.add_parser("dims", help="Band dimensions of an operator")
    dims.add_argument("input", help="Operator JSON file ('-' for stdin)")
    dims.add_argument("--power", type=int, choices=(1, 2), default=1, help="Contraction power (default: 1)")
    _add_output(dims)

    # verify-bireduction
    harness = subparsers.add_parser("verify-bireduction", help="Run the seeded reduction harnesses")
    harness.add_argument("--suite", choices=SUITES, default="all")
    harness.add_argument("--trials", type=int, help="Trials per suite (default: per-suite counts)")
    harness.add_argument("--seed", type=int, help="Root seed (default: harness.seed from config)")
    harness.add_argument("--tol", type=float, help="Rank tolerance for the Douglas suite (default: spectra.tol)")
    _add_output(harness)

    # wonderland
    wonderland = subparsers.add_parser("wonderland", help="Convergence tables for singular continuous approximations")
    wonderland.add_argument("table", choices=TABLES)
    wonderland.add_argument("--format", choices=("csv", "json"), default="csv")
    wonderland.add_argument("--depth", type=int, help="Cantor cylinder depth (default: spectra.depth)")
    wonderland.add_argument("--n-max", type=int, default=100, help="lemma44: largest n")
    wonderland.add_argument(
        "--T", type=parse_horizons, nargs="+", help="wiener: horizons, comma or space separated (default: 1e2,1e3,1e4)"
    )
    wonderland.add_argument("--samples", type=int, help="wiener: quadrature nodes (default: spectra.wiener_samples)")
    wonderland.add_argument("--terms", type=int, help="wiener: Cantor product terms (default: spectra.cf_terms)")
    wonderland.add_argument("--measure", choices=MEASURES, default="cantor", help="wiener: measure")
    wonderland.add_argument("--spec", help="interleave/pipeline: JSON array or RealSeqRep of diagonal values")
    wonderland.add_argument("--length", type=int, default=DEFAULT_INTERLEAVE_LENGTH, help="Values taken from a RealSeqRep spec")
    wonderland.add_argument("--reps", type=int, default=8, help="interleave: copies per class")
    wonderland.add_argument("--k", type=int, help="Classes kept: largest k for interleave (default: all), k for pipeline (default: 4)")
    wonderland.add_argument("--m-max", type=int, default=16, help="pipeline: largest m")
    _add_output(wonderland)

    # verify
    verify = subparsers.add_parser("verify", help="Re-check a certificate")
    verify.add_argument("certificate", help="Certificate JSON file ('-' for stdin)")
    _add_output(verify)

    return parser.parse_args(argv)


def _handlers() -> dict[str, Callable[..., int]]:
    from domaingauge_cli.commands import run_dims, run_eqcheck, run_reduce, run_verify, run_verify_bireduction, run_wonderland

    return {
        "eqcheck": run_eqcheck,
        "reduce": run_reduce,
        "dims": run_dims,
        "verify-bireduction": run_verify_bireduction,
        "wonderland": run_wonderland,
        "verify": run_verify,
    }


def _report_error(error: Exception, code: int) -> int:
    from domaingauge_cli.core import console
    from domaingauge_cli.rendering import dumps

    sys.stdout.write(dumps({"error": {"type": type(error).__name__, "message": str(error)}}))
    console.print(f"[bold red]Error:[/bold red] {error}")
    return code


def run(argv: Sequence[str] | None = None) -> int:
    """Run one command and return its exit code.

    Input problems (bad JSON, out-of-class representations, missing files)
    exit 2 with an error object on stdout; a failed internal invariant exits 3.
    """
    from domaingauge.config import configure_logging
    from domaingauge.config.loaders import ConfigContext, load_core_from_files
    from domaingauge.errors import DomainGaugeError, InvariantViolationError, RepresentationError

    from domaingauge_cli.core import ExitCode

    if not structlog.is_configured():
        configure_structlog()

    try:
        args = parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else ExitCode.INPUT_ERROR

    log = structlog.get_logger(__name__)
    try:
        config_file = Path(args.config) if args.config else None
        config = load_core_from_files(config_file, context=ConfigContext.CLI)
        configure_logging(config.logging.level)
        log.info("Running command", command=args.command)
        return int(_handlers()[args.command](args, config))
    except InvariantViolationError as e:
        log.exception("Internal invariant failed", command=args.command)
        return _report_error(e, ExitCode.INTERNAL_ERROR)
    except (RepresentationError, OSError, ValueError) as e:
        log.warning("Rejected input", command=args.command, error=str(e))
        return _report_error(e, ExitCode.INPUT_ERROR)
    except DomainGaugeError as e:
        log.exception("Command failed", command=args.command)
        return _report_error(e, ExitCode.INTERNAL_ERROR)


def cli_main() -> None:
    """Entry point for console script.

    Checks dependencies, redirects logging to file and exits with the code
    returned by ``run``.

    Raises:
        SystemExit: Always, carrying the exit code
    """
    check_cli_dependencies()
    setup_logging()

    from domaingauge_cli.core import console

    try:
        sys.exit(run())
    except KeyboardInterrupt:
        console.print("\n\n[yellow]Interrupted[/yellow]")
        sys.exit(130)


if __name__ == "__main__":
    cli_main()
