"""domaingauge CLI - certified equivalence checks, reductions and spectral tables."""

from domaingauge_cli.main import cli_main, run

__all__ = ["cli_main", "run"]
__version__ = "0.1.0"
